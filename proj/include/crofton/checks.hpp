// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "integral.hpp"

namespace crofton
{
//! |value - reference| / |reference|; zero when both vanish.
double relative_gap(double value, double reference);

//---------------------------------------------------------------------------//
/*!
 * Directional variation from hits against the projection measure of the
 * extracted essential boundary, with and without its corner points, all on
 * one transversal grid.
 */
struct ProjectionIdentity
{
    Vec tau;
    double p_tau = 0;
    double mu_essential = 0;
    double mu_preponderant = 0;
    double gap_essential = 0;
    double gap_preponderant = 0;
    double h = 0;
    bool saturated = false;
    std::size_t excluded_parallel = 0;
};

ProjectionIdentity check_projection_identity(SetExpr const& a, Domain const& omega,
                                             Vec const& tau, GridParams const& params = {});

//---------------------------------------------------------------------------//
/*!
 * Finiteness probe: projection measures of the preponderant boundary along
 * n independent directions and the perimeter, each at h and h/2.
 */
struct FiniteVariation
{
    struct Entry
    {
        Vec tau;
        double value = 0;
        double refined = 0;
        double change = 0;
        bool saturated = false;
        bool stable = false;
    };

    std::vector<Entry> directions;
    Entry perimeter;
    double determinant = 0;
    bool finite = false;
};

//! Relative change under h -> h/2 below which a value counts as stable.
inline constexpr double refinement_stability = 0.05;

FiniteVariation check_finite_variation(SetExpr const& a, Domain const& omega,
                                       std::vector<Vec> const& directions, int direction_count,
                                       GridParams const& params = {});

//---------------------------------------------------------------------------//
//! Power-law growth of a value along a sequence of set resolutions.
struct RefinementPoint
{
    double spacing;
    double value;
};

struct GrowthFit
{
    //! Least-squares slope of log(value) against log(1/spacing).
    double exponent = 0;
    //! Relative change over the last refinement step.
    double last_change = 0;
    bool stabilizing = false;
};

GrowthFit fit_growth(std::vector<RefinementPoint> const& points);

//---------------------------------------------------------------------------//
//! Perimeter from hits against the integralgeometric measure of the
//! extracted essential boundary.
struct IntegralIdentity
{
    double perimeter = 0;
    double ig = 0;
    double gap = 0;
    bool saturated = false;
};

IntegralIdentity check_integral_identity(SetExpr const& a, Domain const& omega,
                                         DirectionSet const& dirs, GridParams const& params = {});

}  // namespace crofton

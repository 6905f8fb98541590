// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "boundary.hpp"
#include "set_expr.hpp"

namespace crofton
{
inline constexpr int default_max_hits = 4096;

//---------------------------------------------------------------------------//
// Hits
//---------------------------------------------------------------------------//
//! Points of a line where both A and its complement have positive length
//! nearby, restricted to the domain.
struct HitList
{
    Line line;
    std::vector<double> hits;
    bool saturated = false;
};

HitList hits_on_line(SetExpr const& a, Domain const& omega, Line const& line,
                     int max_hits = default_max_hits);

//! Hits from precomputed canonical traces of A and the domain.
HitList hits_from_traces(Line const& line, IntervalSet const& trace_a,
                         IntervalSet const& trace_omega, int max_hits = default_max_hits);

//---------------------------------------------------------------------------//
// Transversal sampling
//---------------------------------------------------------------------------//
//! Orthonormal frame of the hyperplane orthogonal to tau. Axis directions
//! use the remaining coordinate axes in increasing order.
std::array<Vec, 2> transversal_frame(int dim, Vec const& tau);

/*!
 * Midpoint grid of lines parallel to tau.
 *
 * Line (i, j) passes through lo + (i + offset) h along the first frame
 * vector and lo + (j + offset) h along the second; i runs fastest.
 */
struct TransversalGrid
{
    int dim = 2;
    Vec direction;
    std::array<Vec, 2> frame;
    std::array<double, 2> lo{0, 0};
    std::array<int, 2> counts{0, 1};
    double h = 0;
    std::array<double, 2> offset{0.5, 0.5};

    std::size_t size() const
    {
        return static_cast<std::size_t>(counts[0]) * static_cast<std::size_t>(counts[1]);
    }
    std::array<double, 2> coords(std::size_t i) const;
    Vec base(std::size_t i) const;
    Line line(std::size_t i) const { return Line{direction, base(i)}; }
    double cell_measure() const;
};

//! Irrational-fraction jitter that keeps lines off lattice-aligned features.
std::array<double, 2> default_offset();

//! Region whose projection the grid must cover.
struct Window
{
    Bounds box;
    std::optional<Sphere> sphere;
};

//! Where hits can occur: near the boundary of A and inside the domain.
Window integration_window(SetExpr const& a, Domain const& omega);

//! Extent of an explicit boundary intersected with the domain.
Window boundary_window(ExplicitBoundary const& b, Domain const& omega);

TransversalGrid make_grid(int dim, Vec const& tau, Window const& window, double h,
                          std::array<double, 2> offset = default_offset());

//! Lines through the cell centers of a raster, along a coordinate axis.
TransversalGrid aligned_grid(RasterGrid const& grid, int axis);

//---------------------------------------------------------------------------//
// Directions
//---------------------------------------------------------------------------//
/*!
 * Equal-weight directions on a half sphere: equally spaced angles in [0, pi)
 * for n = 2, a golden-angle spiral on the upper hemisphere for n = 3.
 */
struct DirectionSet
{
    int dim = 2;
    std::vector<Vec> directions;

    static DirectionSet uniform(int dim, int count);
};

//---------------------------------------------------------------------------//
// Reports
//---------------------------------------------------------------------------//
enum class Quantity
{
    p_tau,
    p_crofton,
    p_axis_exact,
    mu_tau_fr_e,
    mu_tau_fr_pr,
    ig_measure
};

std::string_view to_string(Quantity q);

struct VariationReport
{
    Quantity quantity = Quantity::p_tau;
    double value = 0;
    //! Discontinuity-band estimate of the quadrature error.
    double error_bound = 0;
    double h = 0;
    int directions = 1;
    int max_hits = default_max_hits;
    std::size_t lines = 0;
    //! Total hit or crossing count across all lines and directions.
    std::uint64_t count = 0;
    bool saturated = false;
    std::size_t excluded_parallel = 0;
    //! Direction-average normalization, 1 for single-direction quantities.
    double constant = 1;
    //! Direction for single-direction quantities; zero otherwise.
    Vec tau;
};

//! Resolution controls shared by the direction-averaged estimators.
struct GridParams
{
    //! Transversal spacing; see default_spacing.
    std::optional<double> h;
    int max_hits = default_max_hits;
    //! Overrides the automatic window, required for unbounded problems.
    std::optional<Bounds> window;
    std::array<double, 2> offset = default_offset();
};

//! Window diameter over 2048 in 2-D or over 256 in 3-D.
double default_spacing(int dim, Window const& window);

//! Midpoint estimate of the directional variation from hit counts.
VariationReport directional_variation(SetExpr const& a, Domain const& omega,
                                      TransversalGrid const& grid,
                                      int max_hits = default_max_hits);

VariationReport directional_variation(SetExpr const& a, Domain const& omega, Vec const& tau,
                                      GridParams const& params = {});

//! Transition count along a raster axis, including the outer hull.
VariationReport axis_variation_exact(RasterGrid const& grid, int axis);

/*!
 * Midpoint estimate of the projection measure: the number of crossings of
 * each line with the boundary pieces inside the domain. Pieces parallel to
 * tau are skipped and counted. With \c skip_corners, crossings exactly at
 * annotated corners are not counted.
 */
VariationReport projection_measure(ExplicitBoundary const& b, Domain const& omega,
                                   TransversalGrid const& grid,
                                   int max_hits = default_max_hits, bool skip_corners = false);

VariationReport projection_measure(ExplicitBoundary const& b, Domain const& omega,
                                   Vec const& tau, GridParams const& params = {});

//! Direction-averaged perimeter estimate.
VariationReport crofton_perimeter(SetExpr const& a, Domain const& omega,
                                  DirectionSet const& dirs, GridParams const& params = {});

//! Direction-averaged projection measure of an explicit boundary.
VariationReport ig_measure(ExplicitBoundary const& b, Domain const& omega,
                           DirectionSet const& dirs, GridParams const& params = {});

}  // namespace crofton

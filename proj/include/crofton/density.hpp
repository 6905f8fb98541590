// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "set_expr.hpp"

namespace crofton
{
//---------------------------------------------------------------------------//
/*!
 * Geometric radius schedule r_k = r0 * ratio^k, k = 0 .. count-1.
 *
 * Upper and lower densities are read off the last \c window radii.
 */
struct RadiusSchedule
{
    double r0 = 1;
    double ratio = 0.5;
    int count = 20;
    int window = 6;

    void validate() const;
    double radius(int k) const;
    double smallest() const { return radius(count - 1); }
};

enum class FractionMethod
{
    exact,
    quadrature,
    montecarlo
};

std::string_view to_string(FractionMethod m);

struct FractionOptions
{
    enum class Mode
    {
        automatic,  //!< exact where possible, chord quadrature otherwise
        quadrature,
        montecarlo
    };
    Mode mode = Mode::automatic;
    //! Parallel chords per transversal axis in the quadrature fallback.
    int chords = 64;
    int mc_samples = 200000;
    std::uint64_t seed = 1;
};

struct VolumeFraction
{
    double fraction;
    double error_bound;
    FractionMethod method;
};

//! m_n(A intersect B(x, r)) / m_n(B(x, r)) with a bracketing error bound.
VolumeFraction ball_volume_fraction(SetExpr const& expr, Vec const& x, double r,
                                    FractionOptions const& opts = {});

struct RadiusFraction
{
    double radius;
    double fraction;
};

struct DensityEstimate
{
    std::vector<RadiusFraction> fractions;
    double upper = 0;
    double lower = 0;
    //! Least exact method used at any radius.
    FractionMethod method = FractionMethod::exact;
    //! Largest per-radius bound over the tail window.
    double error_bound = 0;
};

DensityEstimate estimate_density(SetExpr const& expr, Vec const& x, RadiusSchedule const& sched,
                                 FractionOptions const& opts = {});

//! Estimates for A and its complement; the complement uses 1 - f_k.
std::pair<DensityEstimate, DensityEstimate>
density_pair(SetExpr const& expr, Vec const& x, RadiusSchedule const& sched,
             FractionOptions const& opts = {});

//! Complement estimate derived from an estimate for A.
DensityEstimate complement_estimate(DensityEstimate const& est, RadiusSchedule const& sched);

struct DensitySummary
{
    double upper;
    double lower;
    double error_bound;
};

//! Densities at every voxel center, row-major. Radii must not undercut the
//! raster spacing.
std::vector<DensitySummary> raster_density_field(RasterGrid const& grid,
                                                 RadiusSchedule const& sched,
                                                 FractionOptions const& opts = {});

}  // namespace crofton

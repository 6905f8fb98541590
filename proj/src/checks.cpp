// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/checks.hpp"

#include <cmath>
#include <limits>

#include "crofton/error.hpp"

namespace crofton
{
double relative_gap(double value, double reference)
{
    if (reference == 0)
        return value == 0 ? 0 : std::numeric_limits<double>::infinity();
    return std::abs(value - reference) / std::abs(reference);
}

ProjectionIdentity check_projection_identity(SetExpr const& a, Domain const& omega,
                                             Vec const& tau, GridParams const& params)
{
    Window const w = params.window ? Window{*params.window, std::nullopt}
                                   : integration_window(a, omega);
    double const h = params.h ? *params.h : default_spacing(a.dim(), w);
    TransversalGrid const grid = make_grid(a.dim(), tau, w, h, params.offset);
    ExplicitBoundary const b = extract_boundary(a, omega);

    auto const p = directional_variation(a, omega, grid, params.max_hits);
    auto const e = projection_measure(b, omega, grid, params.max_hits, false);
    auto const pr = projection_measure(b, omega, grid, params.max_hits, true);

    ProjectionIdentity out;
    out.tau = tau;
    out.p_tau = p.value;
    out.mu_essential = e.value;
    out.mu_preponderant = pr.value;
    out.gap_essential = relative_gap(e.value, p.value);
    out.gap_preponderant = relative_gap(pr.value, p.value);
    out.h = h;
    out.saturated = p.saturated || e.saturated || pr.saturated;
    out.excluded_parallel = e.excluded_parallel;
    return out;
}

namespace
{
double determinant(std::vector<Vec> const& v, int dim)
{
    if (dim == 2)
        return v[0][0] * v[1][1] - v[0][1] * v[1][0];
    return dot(v[0], cross(v[1], v[2]));
}

FiniteVariation::Entry refine(Vec const& tau, VariationReport const& coarse,
                              VariationReport const& fine)
{
    FiniteVariation::Entry e;
    e.tau = tau;
    e.value = coarse.value;
    e.refined = fine.value;
    e.change = relative_gap(fine.value, coarse.value);
    e.saturated = coarse.saturated || fine.saturated;
    e.stable = !e.saturated && e.change < refinement_stability;
    return e;
}
}  // namespace

FiniteVariation check_finite_variation(SetExpr const& a, Domain const& omega,
                                       std::vector<Vec> const& directions, int direction_count,
                                       GridParams const& params)
{
    int const dim = a.dim();
    if (static_cast<int>(directions.size()) != dim)
        throw InvalidInput("the finiteness probe needs exactly n directions");
    FiniteVariation out;
    out.determinant = determinant(directions, dim);
    if (std::abs(out.determinant) <= 1e-9)
        throw InvalidInput("probe directions are linearly dependent");

    Window const w = params.window ? Window{*params.window, std::nullopt}
                                   : integration_window(a, omega);
    double const h = params.h ? *params.h : default_spacing(dim, w);
    ExplicitBoundary const b = extract_boundary(a, omega);

    out.finite = true;
    for (Vec const& raw : directions)
    {
        Vec const tau = normalized(raw);
        auto const coarse
            = projection_measure(b, omega, make_grid(dim, tau, w, h, params.offset), params.max_hits, true);
        auto const fine = projection_measure(b, omega, make_grid(dim, tau, w, h / 2, params.offset),
                                             params.max_hits, true);
        out.directions.push_back(refine(tau, coarse, fine));
        out.finite = out.finite && out.directions.back().stable;
    }

    auto const dirs = DirectionSet::uniform(dim, direction_count);
    GridParams coarse_params = params;
    coarse_params.h = h;
    GridParams fine_params = coarse_params;
    fine_params.h = h / 2;
    auto const pc = crofton_perimeter(a, omega, dirs, coarse_params);
    auto const pf = crofton_perimeter(a, omega, dirs, fine_params);
    out.perimeter = refine(Vec{}, pc, pf);
    out.finite = out.finite && out.perimeter.stable;
    return out;
}

GrowthFit fit_growth(std::vector<RefinementPoint> const& points)
{
    if (points.size() < 2)
        throw InvalidInput("growth fit needs at least two resolutions");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto const& p : points)
    {
        if (!(p.spacing > 0) || !(p.value > 0))
            throw InvalidInput("growth fit needs positive spacings and values");
        double const x = std::log(1 / p.spacing);
        double const y = std::log(p.value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double const n = static_cast<double>(points.size());
    double const denom = n * sxx - sx * sx;
    if (denom == 0)
        throw InvalidInput("growth fit needs distinct spacings");
    GrowthFit out;
    out.exponent = (n * sxy - sx * sy) / denom;
    out.last_change = relative_gap(points.back().value, points[points.size() - 2].value);
    out.stabilizing = out.last_change < refinement_stability;
    return out;
}

IntegralIdentity check_integral_identity(SetExpr const& a, Domain const& omega,
                                         DirectionSet const& dirs, GridParams const& params)
{
    Window const w = params.window ? Window{*params.window, std::nullopt}
                                   : integration_window(a, omega);
    GridParams shared = params;
    if (!shared.h)
        shared.h = default_spacing(a.dim(), w);
    ExplicitBoundary const b = extract_boundary(a, omega);
    auto const p = crofton_perimeter(a, omega, dirs, shared);
    auto const ig = ig_measure(b, omega, dirs, shared);
    IntegralIdentity out;
    out.perimeter = p.value;
    out.ig = ig.value;
    out.gap = relative_gap(ig.value, p.value);
    out.saturated = p.saturated || ig.saturated;
    return out;
}

}  // namespace crofton

// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/integral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "crofton/error.hpp"
#include "crofton/parallel.hpp"

namespace crofton
{
namespace
{
constexpr std::size_t line_chunk = 4096;
constexpr double parallel_tolerance = 1e-9;

void check_max_hits(int max_hits)
{
    if (max_hits < 2)
        throw InvalidInput("max_hits must be at least 2");
}

//! Visits the finite endpoints of the domain-restricted trace that lie
//! strictly inside the domain trace; stops when the visitor returns false.
template<class F>
void for_each_hit(IntervalSet const& trace_a, IntervalSet const* trace_omega, F&& visit)
{
    auto emit = [&](double t) {
        if (!std::isfinite(t))
            return true;
        if (trace_omega && !trace_omega->contains(t))
            return true;
        return visit(t);
    };
    IntervalSet const restricted = trace_omega ? intersect(trace_a, *trace_omega) : trace_a;
    for (auto const& iv : restricted.intervals())
    {
        if (!emit(iv.lo) || !emit(iv.hi))
            return;
    }
}

std::uint32_t count_hits(SetExpr const& a, Domain const& omega, Line const& line, int max_hits,
                         bool& saturated)
{
    IntervalSet const ta = trace(a, line);
    std::uint32_t count = 0;
    auto visit = [&](double) {
        if (count == static_cast<std::uint32_t>(max_hits))
        {
            saturated = true;
            return false;
        }
        ++count;
        return true;
    };
    if (omega.is_all_space())
    {
        for_each_hit(ta, nullptr, visit);
    }
    else
    {
        IntervalSet const to = omega.trace(line);
        for_each_hit(ta, &to, visit);
    }
    return count;
}

//! Sum of count jumps between neighboring lines.
std::uint64_t jump_total(std::vector<std::uint32_t> const& m, std::array<int, 2> const& counts)
{
    std::uint64_t total = 0;
    auto at = [&](int i, int j) {
        return static_cast<std::int64_t>(m[static_cast<std::size_t>(j) * counts[0] + i]);
    };
    for (int j = 0; j < counts[1]; ++j)
    {
        for (int i = 0; i < counts[0]; ++i)
        {
            if (i + 1 < counts[0])
                total += static_cast<std::uint64_t>(std::llabs(at(i + 1, j) - at(i, j)));
            if (j + 1 < counts[1])
                total += static_cast<std::uint64_t>(std::llabs(at(i, j + 1) - at(i, j)));
        }
    }
    return total;
}

void finish_counts(VariationReport& rep, std::vector<std::uint32_t>& m, TransversalGrid const& grid,
                   int max_hits)
{
    std::uint64_t total = 0;
    for (auto& v : m)
    {
        if (v > static_cast<std::uint32_t>(max_hits))
        {
            v = static_cast<std::uint32_t>(max_hits);
            rep.saturated = true;
        }
        total += v;
    }
    double const cell = grid.cell_measure();
    rep.count = total;
    rep.value = static_cast<double>(total) * cell;
    rep.error_bound = static_cast<double>(jump_total(m, grid.counts)) * cell;
    rep.h = grid.h;
    rep.lines = grid.size();
    rep.max_hits = max_hits;
    rep.tau = grid.direction;
}

std::array<std::pair<double, double>, 2> projected_ranges(int dim, std::array<Vec, 2> const& frame,
                                                          Window const& window, bool& empty)
{
    std::array<std::pair<double, double>, 2> out{};
    empty = false;
    int const axes = dim - 1;
    double const inf = std::numeric_limits<double>::infinity();
    for (int k = 0; k < axes; ++k)
        out[k] = {-inf, inf};

    if (window.box.is_empty())
    {
        empty = true;
        return out;
    }
    if (window.sphere && window.sphere->radius < 0)
    {
        empty = true;
        return out;
    }
    if (window.box.is_finite())
    {
        for (int k = 0; k < axes; ++k)
        {
            double lo = inf, hi = -inf;
            for (int corner = 0; corner < (1 << dim); ++corner)
            {
                Vec p;
                for (int c = 0; c < dim; ++c)
                    p[c] = (corner >> c & 1) ? window.box.hi[c] : window.box.lo[c];
                double const z = dot(p, frame[k]);
                lo = std::min(lo, z);
                hi = std::max(hi, z);
            }
            out[k] = {lo, hi};
        }
    }
    if (window.sphere)
    {
        for (int k = 0; k < axes; ++k)
        {
            double const c = dot(window.sphere->center, frame[k]);
            out[k].first = std::max(out[k].first, c - window.sphere->radius);
            out[k].second = std::min(out[k].second, c + window.sphere->radius);
        }
    }
    for (int k = 0; k < axes; ++k)
    {
        if (!std::isfinite(out[k].first) || !std::isfinite(out[k].second))
            throw UnboundedWindow("the integration window is unbounded; supply an explicit window");
        if (out[k].first > out[k].second)
            empty = true;
    }
    return out;
}

}  // namespace

//---------------------------------------------------------------------------//
// Hits
//---------------------------------------------------------------------------//
HitList hits_from_traces(Line const& line, IntervalSet const& trace_a,
                         IntervalSet const& trace_omega, int max_hits)
{
    check_max_hits(max_hits);
    HitList out{line, {}, false};
    for_each_hit(trace_a, &trace_omega, [&](double t) {
        if (out.hits.size() == static_cast<std::size_t>(max_hits))
        {
            out.saturated = true;
            return false;
        }
        out.hits.push_back(t);
        return true;
    });
    return out;
}

HitList hits_on_line(SetExpr const& a, Domain const& omega, Line const& line, int max_hits)
{
    Line const valid = Line::make(line.direction, line.base);
    return hits_from_traces(valid, trace(a, valid), omega.trace(valid), max_hits);
}

//---------------------------------------------------------------------------//
// Grids
//---------------------------------------------------------------------------//
std::array<Vec, 2> transversal_frame(int dim, Vec const& tau)
{
    for (int axis = 0; axis < dim; ++axis)
    {
        if (tau == unit_axis(axis) || tau == -unit_axis(axis))
        {
            std::array<Vec, 2> f{};
            int k = 0;
            for (int other = 0; other < dim; ++other)
                if (other != axis)
                    f[k++] = unit_axis(other);
            return f;
        }
    }
    if (dim == 2)
        return {make_vec(-tau[1], tau[0]), Vec{}};
    int helper = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(tau[k]) < std::abs(tau[helper]))
            helper = k;
    Vec const u = normalized(cross(tau, unit_axis(helper)));
    return {u, cross(tau, u)};
}

std::array<double, 2> TransversalGrid::coords(std::size_t i) const
{
    auto const c0 = static_cast<int>(i % static_cast<std::size_t>(counts[0]));
    auto const c1 = static_cast<int>(i / static_cast<std::size_t>(counts[0]));
    return {lo[0] + (c0 + offset[0]) * h, lo[1] + (c1 + offset[1]) * h};
}

Vec TransversalGrid::base(std::size_t i) const
{
    auto const z = coords(i);
    Vec b = z[0] * frame[0];
    if (dim == 3)
        b = b + z[1] * frame[1];
    return b;
}

double TransversalGrid::cell_measure() const { return dim == 3 ? h * h : h; }

std::array<double, 2> default_offset()
{
    double const r2 = std::sqrt(2.0);
    double const r3 = std::sqrt(3.0);
    return {(r2 - std::floor(r2)) / 2, (r3 - std::floor(r3)) / 2};
}

Window integration_window(SetExpr const& a, Domain const& omega)
{
    int const dim = a.dim();
    Window w{overlap(boundary_bounds(a), omega.bounds(), dim), std::nullopt};
    auto s = boundary_sphere(a);
    if (s)
    {
        if (s->radius < 0)
            w.box = Bounds::none();
        w.sphere = *s;
    }
    return w;
}

Window boundary_window(ExplicitBoundary const& b, Domain const& omega)
{
    Window w;
    switch (b.kind)
    {
        case ExplicitBoundary::Kind::voxel_faces:
        {
            if (b.faces.empty())
                break;
            double const inf = std::numeric_limits<double>::infinity();
            Vec lo = make_vec(inf, inf, b.dim == 3 ? inf : 0);
            Vec hi = make_vec(-inf, -inf, b.dim == 3 ? -inf : 0);
            for (auto const& f : b.faces)
            {
                for (int k = 0; k < b.dim; ++k)
                {
                    double const c = b.origin[k] + f.cell[k] * b.spacing;
                    lo[k] = std::min(lo[k], c);
                    hi[k] = std::max(hi[k], k == f.axis ? c : c + b.spacing);
                }
            }
            w.box = Bounds::box(lo, hi);
            break;
        }
        case ExplicitBoundary::Kind::poly_segments:
        {
            if (b.segments.empty())
                break;
            double const inf = std::numeric_limits<double>::infinity();
            Vec lo = make_vec(inf, inf);
            Vec hi = make_vec(-inf, -inf);
            for (auto const& s : b.segments)
            {
                for (int k = 0; k < 2; ++k)
                {
                    lo[k] = std::min({lo[k], s.a[k], s.b[k]});
                    hi[k] = std::max({hi[k], s.a[k], s.b[k]});
                }
            }
            w.box = Bounds::box(lo, hi);
            break;
        }
        case ExplicitBoundary::Kind::sphere:
        {
            Vec const r = make_vec(b.sphere.radius, b.sphere.radius,
                                   b.dim == 3 ? b.sphere.radius : 0);
            w.box = Bounds::box(b.sphere.center - r, b.sphere.center + r);
            w.sphere = b.sphere;
            break;
        }
    }
    w.box = overlap(w.box, omega.bounds(), b.dim);
    return w;
}

double default_spacing(int dim, Window const& window)
{
    if (window.box.is_empty() || (window.sphere && window.sphere->radius < 0))
        return 1.0 / (dim == 3 ? 256 : 2048);
    double extent = window.box.is_finite() ? window.box.diameter()
                                           : std::numeric_limits<double>::infinity();
    if (window.sphere && window.sphere->radius >= 0)
        extent = std::min(extent, 2 * window.sphere->radius);
    if (!std::isfinite(extent))
        throw UnboundedWindow("the integration window is unbounded; supply an explicit window");
    if (!(extent > 0))
        extent = 1;
    return extent / (dim == 3 ? 256 : 2048);
}

TransversalGrid make_grid(int dim, Vec const& tau, Window const& window, double h,
                          std::array<double, 2> offset)
{
    if (!(h > 0) || !std::isfinite(h))
        throw InvalidInput("transversal spacing h must be positive");
    if (std::abs(norm(tau) - 1) > 1e-12)
        throw InvalidInput("direction must be a unit vector");
    for (double o : offset)
    {
        if (!(o > 0 && o < 1))
            throw InvalidInput("grid offset must lie in (0, 1)");
    }
    TransversalGrid g;
    g.dim = dim;
    g.direction = tau;
    g.frame = transversal_frame(dim, tau);
    g.h = h;
    g.offset = offset;
    bool empty = false;
    auto ranges = projected_ranges(dim, g.frame, window, empty);
    if (empty)
    {
        g.counts = {0, 1};
        return g;
    }
    for (int k = 0; k < dim - 1; ++k)
    {
        g.lo[k] = ranges[k].first - h;
        double const n = std::ceil((ranges[k].second - ranges[k].first + 2 * h) / h);
        if (n > 1e8)
            throw InvalidInput("transversal grid too fine for the window");
        g.counts[k] = static_cast<int>(n);
    }
    if (dim == 2)
        g.counts[1] = 1;
    return g;
}

TransversalGrid aligned_grid(RasterGrid const& grid, int axis)
{
    int const dim = grid.dim();
    if (axis < 0 || axis >= dim)
        throw InvalidInput("axis out of range");
    TransversalGrid g;
    g.dim = dim;
    g.direction = unit_axis(axis);
    g.frame = transversal_frame(dim, g.direction);
    g.h = grid.spacing();
    g.offset = {0.5, 0.5};
    int k = 0;
    for (int other = 0; other < dim; ++other)
    {
        if (other == axis)
            continue;
        g.lo[k] = grid.origin()[other];
        g.counts[k] = grid.dims()[other];
        ++k;
    }
    if (dim == 2)
        g.counts[1] = 1;
    return g;
}

DirectionSet DirectionSet::uniform(int dim, int count)
{
    if (dim != 2 && dim != 3)
        throw InvalidInput("dimension must be 2 or 3");
    if (count < 1)
        throw InvalidInput("direction count must be positive");
    DirectionSet ds;
    ds.dim = dim;
    if (dim == 2)
    {
        for (int k = 0; k < count; ++k)
        {
            double const theta = std::numbers::pi * k / count;
            ds.directions.push_back(k == 0 ? unit_axis(0)
                                           : make_vec(std::cos(theta), std::sin(theta)));
        }
        return ds;
    }
    double const golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k)
    {
        double const z = 1 - (k + 0.5) / count;
        double const r = std::sqrt(std::max(0.0, 1 - z * z));
        double const phi = golden * k;
        ds.directions.push_back(normalized(make_vec(r * std::cos(phi), r * std::sin(phi), z)));
    }
    return ds;
}

std::string_view to_string(Quantity q)
{
    switch (q)
    {
        case Quantity::p_tau: return "P_tau";
        case Quantity::p_crofton: return "P_crofton";
        case Quantity::p_axis_exact: return "P_axis_exact";
        case Quantity::mu_tau_fr_e: return "mu_tau_fr_e";
        case Quantity::mu_tau_fr_pr: return "mu_tau_fr_pr";
        case Quantity::ig_measure: return "IG_measure";
    }
    return "?";
}

//---------------------------------------------------------------------------//
// Directional variation
//---------------------------------------------------------------------------//
VariationReport directional_variation(SetExpr const& a, Domain const& omega,
                                      TransversalGrid const& grid, int max_hits)
{
    check_max_hits(max_hits);
    if (a.dim() != grid.dim || omega.dim() != grid.dim)
        throw InvalidInput("dimension mismatch between set, domain and grid");
    std::vector<std::uint32_t> m(grid.size());
    std::atomic<bool> saturated{false};
    for_each_chunk(m.size(), line_chunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        bool sat = false;
        for (std::size_t i = begin; i < end; ++i)
            m[i] = count_hits(a, omega, grid.line(i), max_hits, sat);
        if (sat)
            saturated = true;
    });
    VariationReport rep;
    rep.quantity = Quantity::p_tau;
    finish_counts(rep, m, grid, max_hits);
    rep.saturated = rep.saturated || saturated;
    return rep;
}

VariationReport directional_variation(SetExpr const& a, Domain const& omega, Vec const& tau,
                                      GridParams const& params)
{
    Window const w = params.window ? Window{*params.window, std::nullopt}
                                   : integration_window(a, omega);
    double const h = params.h ? *params.h : default_spacing(a.dim(), w);
    return directional_variation(a, omega, make_grid(a.dim(), tau, w, h, params.offset),
                                 params.max_hits);
}

VariationReport axis_variation_exact(RasterGrid const& grid, int axis)
{
    int const dim = grid.dim();
    if (axis < 0 || axis >= dim)
        throw InvalidInput("axis out of range");
    auto const& dims = grid.dims();
    std::uint64_t transitions = 0;
    RasterGrid::Index idx{0, 0, 0};
    RasterGrid::Index extent = dims;
    extent[axis] = 1;
    std::size_t lines = 0;
    for (idx[2] = 0; idx[2] < extent[2]; ++idx[2])
        for (idx[1] = 0; idx[1] < extent[1]; ++idx[1])
            for (idx[0] = 0; idx[0] < extent[0]; ++idx[0])
            {
                ++lines;
                RasterGrid::Index c = idx;
                bool prev = false;
                for (c[axis] = 0; c[axis] < dims[axis]; ++c[axis])
                {
                    bool const occ = grid.occupied(c);
                    transitions += occ != prev;
                    prev = occ;
                }
                transitions += prev;
            }
    VariationReport rep;
    rep.quantity = Quantity::p_axis_exact;
    rep.count = transitions;
    rep.h = grid.spacing();
    rep.value = static_cast<double>(transitions) * (dim == 3 ? rep.h * rep.h : rep.h);
    rep.lines = lines;
    rep.tau = unit_axis(axis);
    return rep;
}

//---------------------------------------------------------------------------//
// Projection measure
//---------------------------------------------------------------------------//
namespace
{
//! Line index range whose first coordinate lies in [lo, hi).
std::pair<int, int> index_range(TransversalGrid const& g, int k, double lo, double hi)
{
    double const a = std::ceil((lo - g.lo[k]) / g.h - g.offset[k]);
    double const b = std::ceil((hi - g.lo[k]) / g.h - g.offset[k]);
    int const first = static_cast<int>(std::clamp(a, 0.0, static_cast<double>(g.counts[k])));
    int const last = static_cast<int>(std::clamp(b, 0.0, static_cast<double>(g.counts[k])));
    return {first, last};
}

void add_segment(TransversalGrid const& g, Domain const& omega, Vec const& a, Vec const& b,
                 std::vector<Vec> const* corners, std::vector<std::uint32_t>& n,
                 std::size_t& parallel)
{
    Vec const d = b - a;
    double const len = norm(d);
    if (!(len > 0))
        return;
    Vec const normal = make_vec(-d[1] / len, d[0] / len);
    if (std::abs(dot(normal, g.direction)) < parallel_tolerance)
    {
        ++parallel;
        return;
    }
    Vec const& u = g.frame[0];
    double const za = dot(a, u);
    double const zb = dot(b, u);
    auto [first, last] = index_range(g, 0, std::min(za, zb), std::max(za, zb));
    auto is_corner = [&](Vec const& p) {
        return corners && std::find(corners->begin(), corners->end(), p) != corners->end();
    };
    for (int i = first; i < last; ++i)
    {
        double const z = g.lo[0] + (i + g.offset[0]) * g.h;
        if ((z == za && is_corner(a)) || (z == zb && is_corner(b)))
            continue;
        Vec const p = a + ((z - za) / (zb - za)) * d;
        if (omega.contains(p))
            ++n[static_cast<std::size_t>(i)];
    }
}

void add_square(TransversalGrid const& g, Domain const& omega, AxisFace const& f, Vec const& origin,
                double s, std::vector<std::uint32_t>& n, std::size_t& parallel)
{
    Vec const& tau = g.direction;
    if (std::abs(tau[f.axis]) < parallel_tolerance)
    {
        ++parallel;
        return;
    }
    int const j1 = (f.axis + 1) % 3;
    int const j2 = (f.axis + 2) % 3;
    Vec c0;
    for (int k = 0; k < 3; ++k)
        c0[k] = origin[k] + f.cell[k] * s;
    Vec const e1 = s * unit_axis(j1);
    Vec const e2 = s * unit_axis(j2);
    Vec const corners[4] = {c0, c0 + e1, c0 + e1 + e2, c0 + e2};
    std::array<std::array<double, 2>, 4> q{};
    for (int k = 0; k < 4; ++k)
        q[k] = {dot(corners[k], g.frame[0]), dot(corners[k], g.frame[1])};
    double area = 0;
    for (int k = 0; k < 4; ++k)
    {
        auto const& p0 = q[k];
        auto const& p1 = q[(k + 1) % 4];
        area += p0[0] * p1[1] - p1[0] * p0[1];
    }
    double const orient = area > 0 ? 1 : -1;
    double lo0 = q[0][0], hi0 = q[0][0], lo1 = q[0][1], hi1 = q[0][1];
    for (auto const& p : q)
    {
        lo0 = std::min(lo0, p[0]);
        hi0 = std::max(hi0, p[0]);
        lo1 = std::min(lo1, p[1]);
        hi1 = std::max(hi1, p[1]);
    }
    auto [i0, i1] = index_range(g, 0, lo0, hi0);
    auto [k0, k1] = index_range(g, 1, lo1, hi1);
    double const plane = c0[f.axis];
    for (int k = k0; k < k1; ++k)
    {
        double const zv = g.lo[1] + (k + g.offset[1]) * g.h;
        for (int i = i0; i < i1; ++i)
        {
            double const zu = g.lo[0] + (i + g.offset[0]) * g.h;
            bool inside = true;
            for (int e = 0; e < 4 && inside; ++e)
            {
                auto const& p0 = q[e];
                auto const& p1 = q[(e + 1) % 4];
                double const side
                    = (p1[0] - p0[0]) * (zv - p0[1]) - (p1[1] - p0[1]) * (zu - p0[0]);
                inside = orient * side > 0;
            }
            if (!inside)
                continue;
            std::size_t const idx = static_cast<std::size_t>(k) * g.counts[0] + i;
            Vec const base = g.base(idx);
            Vec const p = base + ((plane - base[f.axis]) / tau[f.axis]) * tau;
            if (omega.contains(p))
                ++n[idx];
        }
    }
}
}  // namespace

VariationReport projection_measure(ExplicitBoundary const& b, Domain const& omega,
                                   TransversalGrid const& grid, int max_hits, bool skip_corners)
{
    check_max_hits(max_hits);
    if (b.dim != grid.dim || omega.dim() != grid.dim)
        throw InvalidInput("dimension mismatch between boundary, domain and grid");
    std::vector<std::uint32_t> n(grid.size());
    std::size_t parallel = 0;
    switch (b.kind)
    {
        case ExplicitBoundary::Kind::poly_segments:
            for (auto const& s : b.segments)
                add_segment(grid, omega, s.a, s.b, skip_corners ? &b.corners : nullptr, n, parallel);
            break;
        case ExplicitBoundary::Kind::voxel_faces:
            for (auto const& f : b.faces)
            {
                if (b.dim == 2)
                {
                    int const other = 1 - f.axis;
                    Vec a;
                    a[f.axis] = b.origin[f.axis] + f.cell[f.axis] * b.spacing;
                    a[other] = b.origin[other] + f.cell[other] * b.spacing;
                    Vec e = a;
                    e[other] += b.spacing;
                    add_segment(grid, omega, a, e, nullptr, n, parallel);
                }
                else
                {
                    add_square(grid, omega, f, b.origin, b.spacing, n, parallel);
                }
            }
            break;
        case ExplicitBoundary::Kind::sphere:
        {
            Sphere const& s = b.sphere;
            Vec const& tau = grid.direction;
            double const t0 = dot(s.center, tau);
            Vec const q = s.center - t0 * tau;
            for (std::size_t i = 0; i < n.size(); ++i)
            {
                Vec const base = grid.base(i);
                Vec const w = base - q;
                double const d2 = dot(w, w);
                double const r2 = s.radius * s.radius;
                if (d2 >= r2)
                    continue;
                double const half = std::sqrt(r2 - d2);
                n[i] += omega.contains(base + (t0 - half) * tau);
                n[i] += omega.contains(base + (t0 + half) * tau);
            }
            break;
        }
    }
    VariationReport rep;
    rep.quantity = skip_corners ? Quantity::mu_tau_fr_pr : Quantity::mu_tau_fr_e;
    finish_counts(rep, n, grid, max_hits);
    rep.excluded_parallel = parallel;
    return rep;
}

VariationReport projection_measure(ExplicitBoundary const& b, Domain const& omega,
                                   Vec const& tau, GridParams const& params)
{
    Window const w = params.window ? Window{*params.window, std::nullopt}
                                   : boundary_window(b, omega);
    double const h = params.h ? *params.h : default_spacing(b.dim, w);
    return projection_measure(b, omega, make_grid(b.dim, tau, w, h, params.offset),
                              params.max_hits);
}

//---------------------------------------------------------------------------//
// Direction averages
//---------------------------------------------------------------------------//
namespace
{
template<class F>
VariationReport direction_average(int dim, DirectionSet const& dirs, Quantity quantity, F&& one)
{
    if (dirs.directions.empty())
        throw InvalidInput("direction set is empty");
    if (dirs.dim != dim)
        throw InvalidInput("direction set dimension mismatch");
    VariationReport out;
    out.quantity = quantity;
    out.constant = crofton_constant(dim);
    out.directions = static_cast<int>(dirs.directions.size());
    double sum = 0;
    double bound = 0;
    for (auto const& tau : dirs.directions)
    {
        VariationReport const r = one(tau);
        sum += r.value;
        bound += r.error_bound;
        out.count += r.count;
        out.lines += r.lines;
        out.saturated = out.saturated || r.saturated;
        out.excluded_parallel += r.excluded_parallel;
        out.h = std::max(out.h, r.h);
        out.max_hits = r.max_hits;
    }
    double const k = static_cast<double>(dirs.directions.size());
    out.value = out.constant * sum / k;
    out.error_bound = out.constant * bound / k;
    return out;
}
}  // namespace

VariationReport crofton_perimeter(SetExpr const& a, Domain const& omega, DirectionSet const& dirs,
                                  GridParams const& params)
{
    Window const w = params.window ? Window{*params.window, std::nullopt}
                                   : integration_window(a, omega);
    double const h = params.h ? *params.h : default_spacing(a.dim(), w);
    return direction_average(a.dim(), dirs, Quantity::p_crofton, [&](Vec const& tau) {
        return directional_variation(a, omega, make_grid(a.dim(), tau, w, h, params.offset),
                                     params.max_hits);
    });
}

VariationReport ig_measure(ExplicitBoundary const& b, Domain const& omega, DirectionSet const& dirs,
                           GridParams const& params)
{
    Window const w = params.window ? Window{*params.window, std::nullopt}
                                   : boundary_window(b, omega);
    double const h = params.h ? *params.h : default_spacing(b.dim, w);
    return direction_average(b.dim, dirs, Quantity::ig_measure, [&](Vec const& tau) {
        return projection_measure(b, omega, make_grid(b.dim, tau, w, h, params.offset),
                                  params.max_hits);
    });
}

}  // namespace crofton

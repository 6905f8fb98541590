// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>

#include "crofton/error.hpp"
#include "crofton/parallel.hpp"
#include "detail/exact_area.hpp"
#include "detail/overloaded.hpp"

namespace crofton
{
//---------------------------------------------------------------------------//
// Schedule
//---------------------------------------------------------------------------//
void RadiusSchedule::validate() const
{
    if (!(r0 > 0) || !std::isfinite(r0))
        throw InvalidInput("radius schedule: r0 must be positive");
    if (!(ratio > 0 && ratio < 1))
        throw InvalidInput("radius schedule: ratio must lie in (0, 1)");
    if (count < 2)
        throw InvalidInput("radius schedule: count must be at least 2");
    if (window < 1 || window > count)
        throw InvalidInput("radius schedule: window must lie in [1, count]");
}

double RadiusSchedule::radius(int k) const { return r0 * std::pow(ratio, k); }

std::string_view to_string(FractionMethod m)
{
    switch (m)
    {
        case FractionMethod::exact: return "exact";
        case FractionMethod::quadrature: return "quadrature";
        case FractionMethod::montecarlo: return "montecarlo";
    }
    return "?";
}

namespace
{
using detail::Overloaded;

enum class LeafState
{
    full,
    empty,
    cut
};

//---------------------------------------------------------------------------//
// Leaf classification against the query ball
//---------------------------------------------------------------------------//
LeafState classify_raster(RasterGrid const& g, Vec const& x, double r)
{
    int const dim = g.dim();
    Vec const lo = g.origin();
    Vec const hi = g.upper();
    double dist2 = 0;
    bool inside_extent = true;
    for (int k = 0; k < dim; ++k)
    {
        double const d = std::max({lo[k] - x[k], 0.0, x[k] - hi[k]});
        dist2 += d * d;
        inside_extent = inside_extent && lo[k] <= x[k] - r && x[k] + r <= hi[k];
    }
    if (dist2 >= r * r)
        return LeafState::empty;
    if (!inside_extent)
        return LeafState::cut;

    RasterGrid::Index first{0, 0, 0};
    RasterGrid::Index last{0, 0, 0};
    double cells = 1;
    for (int k = 0; k < dim; ++k)
    {
        first[k] = static_cast<int>(std::floor((x[k] - r - lo[k]) / g.spacing()));
        last[k] = static_cast<int>(std::floor((x[k] + r - lo[k]) / g.spacing()));
        first[k] = std::max(first[k], 0);
        last[k] = std::min(last[k], g.dims()[k] - 1);
        cells *= last[k] - first[k] + 1;
    }
    if (cells > 4096)
        return LeafState::cut;
    bool any = false;
    bool all = true;
    RasterGrid::Index idx{0, 0, 0};
    for (idx[2] = first[2]; idx[2] <= last[2]; ++idx[2])
        for (idx[1] = first[1]; idx[1] <= last[1]; ++idx[1])
            for (idx[0] = first[0]; idx[0] <= last[0]; ++idx[0])
            {
                bool const occ = g.occupied(idx);
                any = any || occ;
                all = all && occ;
            }
    if (all)
        return LeafState::full;
    return any ? LeafState::cut : LeafState::empty;
}

LeafState classify_leaf(SetExpr const& leaf, Vec const& x, double r)
{
    int const dim = leaf.dim();
    return std::visit(
        Overloaded{
            [&](node::HalfSpace const& h) {
                double const s = h.offset - dot(h.normal, x);
                if (s >= r)
                    return LeafState::full;
                if (s <= -r)
                    return LeafState::empty;
                return LeafState::cut;
            },
            [&](node::Ball const& b) {
                double const d = norm(x - b.center);
                if (d + r <= b.radius)
                    return LeafState::full;
                if (d >= b.radius + r)
                    return LeafState::empty;
                return LeafState::cut;
            },
            [&](node::Box const& b) {
                bool full = true;
                double dist2 = 0;
                for (int k = 0; k < dim; ++k)
                {
                    full = full && b.lo[k] <= x[k] - r && x[k] + r <= b.hi[k];
                    double const d = std::max({b.lo[k] - x[k], 0.0, x[k] - b.hi[k]});
                    dist2 += d * d;
                }
                if (full)
                    return LeafState::full;
                return dist2 >= r * r ? LeafState::empty : LeafState::cut;
            },
            [&](node::Raster const& rl) { return classify_raster(*rl.grid, x, r); },
            [&](auto const&) { return LeafState::cut; }},
        leaf.data());
}

//---------------------------------------------------------------------------//
/*!
 * Inclusion-exclusion over cut leaves.
 *
 * A region is a signed sum of terms; each term is the intersection of the
 * query ball with a set of cut leaves (bit mask). Boolean nodes map to ring
 * operations: union p + q - pq, intersection pq, complement 1 - p.
 */
class TermAlgebra
{
  public:
    using Poly = std::map<std::uint64_t, double>;

    TermAlgebra(Vec const& x, double r) : x_(x), r_(r) {}

    std::optional<Poly> build(SetExpr const& expr)
    {
        Poly p = visit(expr);
        if (overflow_)
            return std::nullopt;
        return p;
    }

    std::vector<SetExpr> const& leaves() const { return leaves_; }

  private:
    static constexpr std::size_t max_terms = 4096;

    Vec x_;
    double r_;
    bool overflow_ = false;
    std::vector<SetExpr> leaves_;
    std::unordered_map<void const*, int> index_;

    static Poly one() { return Poly{{0, 1.0}}; }

    static void prune(Poly& p)
    {
        for (auto it = p.begin(); it != p.end();)
            it = (it->second == 0) ? p.erase(it) : std::next(it);
    }

    Poly add(Poly a, Poly const& b, double sign)
    {
        for (auto const& [m, c] : b)
            a[m] += sign * c;
        prune(a);
        if (a.size() > max_terms)
            overflow_ = true;
        return a;
    }

    Poly mul(Poly const& a, Poly const& b)
    {
        Poly out;
        for (auto const& [ma, ca] : a)
        {
            for (auto const& [mb, cb] : b)
            {
                out[ma | mb] += ca * cb;
                if (out.size() > max_terms)
                {
                    overflow_ = true;
                    return {};
                }
            }
        }
        prune(out);
        return out;
    }

    Poly visit(SetExpr const& e)
    {
        if (overflow_)
            return {};
        if (e.is_leaf())
        {
            switch (classify_leaf(e, x_, r_))
            {
                case LeafState::full: return one();
                case LeafState::empty: return {};
                case LeafState::cut: break;
            }
            auto [it, inserted] = index_.try_emplace(e.id(), static_cast<int>(leaves_.size()));
            if (inserted)
            {
                if (leaves_.size() >= 64)
                {
                    overflow_ = true;
                    return {};
                }
                leaves_.push_back(e);
            }
            return Poly{{std::uint64_t{1} << it->second, 1.0}};
        }
        return std::visit(
            Overloaded{
                [&](node::Union const& u) {
                    Poly acc;
                    for (auto const& c : u.children)
                    {
                        Poly q = visit(c);
                        acc = add(add(acc, q, 1), mul(acc, q), -1);
                    }
                    return acc;
                },
                [&](node::Intersection const& u) {
                    Poly acc = one();
                    for (auto const& c : u.children)
                    {
                        acc = mul(acc, visit(c));
                        if (acc.empty())
                            break;
                    }
                    return acc;
                },
                [&](node::Complement const& c) { return add(one(), visit(c.child), -1); },
                [&](node::Difference const& d) {
                    Poly a = visit(d.left);
                    if (a.empty())
                        return a;
                    return add(a, mul(a, visit(d.right)), -1);
                },
                [&](auto const&) { return Poly{}; }},
            e.data());
    }
};

//---------------------------------------------------------------------------//
// Exact measure of one term
//---------------------------------------------------------------------------//
struct TermLeaves
{
    std::vector<std::pair<Vec, double>> halfplanes;  // normal, offset
    std::vector<node::Ball const*> balls;
    std::vector<node::Raster const*> rasters;
    std::vector<node::Box const*> boxes;
};

double raster_disk_area(RasterGrid const& g, Vec const& x, double r,
                        std::vector<std::pair<Vec, double>> const& halfplanes)
{
    double const s = g.spacing();
    Vec const lo = g.origin();
    int const i0 = std::max(0, static_cast<int>(std::floor((x[0] - r - lo[0]) / s)));
    int const i1 = std::min(g.dims()[0] - 1, static_cast<int>(std::floor((x[0] + r - lo[0]) / s)));
    int const j0 = std::max(0, static_cast<int>(std::floor((x[1] - r - lo[1]) / s)));
    int const j1 = std::min(g.dims()[1] - 1, static_cast<int>(std::floor((x[1] + r - lo[1]) / s)));
    double total = 0;
    double const r2 = r * r;
    for (int j = j0; j <= j1; ++j)
    {
        for (int i = i0; i <= i1; ++i)
        {
            if (!g.occupied({i, j, 0}))
                continue;
            Vec const c = g.cell_lower({i, j, 0});
            if (halfplanes.empty())
            {
                // Farthest corner inside the disk means the whole cell is.
                double const fx = std::max(std::abs(c[0] - x[0]), std::abs(c[0] + s - x[0]));
                double const fy = std::max(std::abs(c[1] - x[1]), std::abs(c[1] + s - x[1]));
                if (fx * fx + fy * fy <= r2)
                {
                    total += s * s;
                    continue;
                }
            }
            detail::Polygon cell = detail::square(c, s);
            for (auto const& [n, o] : halfplanes)
            {
                cell = detail::clip_polygon(cell, n, o);
                if (cell.empty())
                    break;
            }
            if (!cell.empty())
                total += detail::disk_polygon_area(x, r, cell);
        }
    }
    return total;
}

std::optional<double> term_measure(TermLeaves const& t, int dim, Vec const& x, double r)
{
    std::size_t const kinds
        = t.halfplanes.size() + t.balls.size() + t.rasters.size() + t.boxes.size();
    if (kinds == 0)
        return unit_ball_volume(dim) * std::pow(r, dim);

    if (dim == 2)
    {
        if (t.rasters.size() > 1)
            return std::nullopt;
        // The disk term reduces to a single disk when one of them lies inside
        // all the others.
        std::vector<std::pair<Vec, double>> disks{{x, r}};
        for (auto const* b : t.balls)
            disks.emplace_back(b->center, b->radius);
        for (std::size_t i = 0; i < disks.size(); ++i)
        {
            for (std::size_t j = i + 1; j < disks.size(); ++j)
            {
                if (norm(disks[i].first - disks[j].first) >= disks[i].second + disks[j].second)
                    return 0.0;
            }
        }
        std::optional<std::pair<Vec, double>> inner;
        for (auto const& cand : disks)
        {
            bool inside_all = true;
            for (auto const& other : disks)
                inside_all = inside_all
                             && norm(cand.first - other.first) + cand.second <= other.second;
            if (inside_all)
            {
                inner = cand;
                break;
            }
        }
        if (!inner)
        {
            if (disks.size() == 2 && kinds == 1)
                return detail::disk_lens_area(r, t.balls[0]->radius, norm(t.balls[0]->center - x));
            return std::nullopt;
        }
        auto const& [c, rad] = *inner;
        if (!t.rasters.empty())
            return raster_disk_area(*t.rasters.front()->grid, c, rad, t.halfplanes);
        detail::Polygon poly = detail::square(c - make_vec(rad, rad), 2 * rad);
        for (auto const& [n, o] : t.halfplanes)
        {
            poly = detail::clip_polygon(poly, n, o);
            if (poly.empty())
                return 0.0;
        }
        return detail::disk_polygon_area(c, rad, poly);
    }

    if (kinds != 1)
        return std::nullopt;
    if (t.balls.size() == 1)
        return detail::ball_lens_volume(r, t.balls[0]->radius, norm(t.balls[0]->center - x));
    if (t.halfplanes.size() == 1)
    {
        auto const& [n, o] = t.halfplanes[0];
        return detail::ball_halfspace_volume(r, o - dot(n, x));
    }
    return std::nullopt;
}

std::optional<VolumeFraction> exact_fraction(SetExpr const& expr, Vec const& x, double r)
{
    int const dim = expr.dim();
    TermAlgebra algebra(x, r);
    auto poly = algebra.build(expr);
    if (!poly)
        return std::nullopt;

    double const volume = unit_ball_volume(dim) * std::pow(r, dim);
    double sum = 0;
    double magnitude = 0;
    for (auto const& [mask, coeff] : *poly)
    {
        TermLeaves leaves;
        for (std::uint64_t m = mask; m != 0; m &= m - 1)
        {
            SetExpr const& leaf = algebra.leaves()[static_cast<std::size_t>(std::countr_zero(m))];
            if (auto* h = leaf.as<node::HalfSpace>())
            {
                leaves.halfplanes.emplace_back(h->normal, h->offset);
            }
            else if (auto* b = leaf.as<node::Box>())
            {
                if (dim == 2)
                {
                    for (int k = 0; k < 2; ++k)
                    {
                        leaves.halfplanes.emplace_back(unit_axis(k), b->hi[k]);
                        leaves.halfplanes.emplace_back(-unit_axis(k), -b->lo[k]);
                    }
                }
                else
                {
                    leaves.boxes.push_back(b);
                }
            }
            else if (auto* ball = leaf.as<node::Ball>())
            {
                leaves.balls.push_back(ball);
            }
            else if (auto* ras = leaf.as<node::Raster>())
            {
                leaves.rasters.push_back(ras);
            }
        }
        auto m = term_measure(leaves, dim, x, r);
        if (!m)
            return std::nullopt;
        sum += coeff * *m;
        magnitude += std::abs(coeff * *m);
    }
    double const f = std::clamp(sum / volume, 0.0, 1.0);
    double const bound = 64 * std::numeric_limits<double>::epsilon() * (magnitude / volume + 1);
    return VolumeFraction{f, bound, FractionMethod::exact};
}

//---------------------------------------------------------------------------//
// Chord quadrature
//---------------------------------------------------------------------------//
/*
 * Integrates chord lengths of A over parallel chords of the ball along
 * e_axis; the midpoint rule over the transversal cells errs by at most
 * h times the variation of the chord-length function, which is bounded by
 * the directional variations of A intersect B across the chords. Those are
 * estimated from endpoint counts along the other axes.
 */
struct ChordSweep
{
    double length_in_a = 0;  // sum of |A cap chord|
    double length_ball = 0;  // sum of |chord|
    std::size_t endpoints = 0;
};

ChordSweep sweep(SetExpr const& expr, Vec const& x, double r, int axis, int chords)
{
    int const dim = expr.dim();
    double const h = 2 * r / chords;
    int const a1 = (axis + 1) % dim;
    int const a2 = (axis + 2) % dim;
    int const n2 = dim == 3 ? chords : 1;
    Vec const dir = unit_axis(axis);
    ChordSweep out;
    for (int j = 0; j < chords; ++j)
    {
        for (int k = 0; k < n2; ++k)
        {
            double const d1 = (j + 0.5) * h - r;
            double const d2 = dim == 3 ? (k + 0.5) * h - r : 0;
            double const q = r * r - d1 * d1 - d2 * d2;
            if (q <= 0)
                continue;
            double const c = std::sqrt(q);
            Vec p = x;
            p[a1] += d1;
            if (dim == 3)
                p[a2] += d2;
            Line const line = Line::through(p, dir);
            double const t0 = dot(p, dir);
            auto const in = intersect(trace(expr, line), IntervalSet::single(t0 - c, t0 + c));
            out.length_in_a += in.measure();
            out.length_ball += 2 * c;
            out.endpoints += 2 * in.size();
        }
    }
    return out;
}

VolumeFraction chord_fraction(SetExpr const& expr, Vec const& x, double r, int chords)
{
    int const dim = expr.dim();
    double const h = 2 * r / chords;
    double const cell = std::pow(h, dim - 1);
    ChordSweep const main = sweep(expr, x, r, 0, chords);
    double const f = std::clamp(main.length_in_a / main.length_ball, 0.0, 1.0);

    double variation = 0;
    for (int axis = 1; axis < dim; ++axis)
        variation += static_cast<double>(sweep(expr, x, r, axis, chords).endpoints) * cell;
    double const ball_variation = (dim - 1) * 2 * unit_ball_volume(dim - 1) * std::pow(r, dim - 1);
    double const volume = main.length_ball * cell;
    double const bound = 2 * h * (variation + f * ball_variation) / volume;
    return {f, std::min(bound, 1.0), FractionMethod::quadrature};
}

VolumeFraction montecarlo_fraction(SetExpr const& expr, Vec const& x, double r,
                                   FractionOptions const& opts)
{
    int const dim = expr.dim();
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> u(-1, 1);
    int hits = 0;
    int n = 0;
    while (n < opts.mc_samples)
    {
        Vec p;
        for (int k = 0; k < dim; ++k)
            p[k] = u(rng);
        if (dot(p, p) >= 1)
            continue;
        ++n;
        if (contains(expr, x + r * p))
            ++hits;
    }
    double const f = static_cast<double>(hits) / n;
    double const bound = 4 * std::sqrt(std::max(f * (1 - f), 0.25 / n) / n);
    return {f, bound, FractionMethod::montecarlo};
}

int rank(FractionMethod m) { return static_cast<int>(m); }
}  // namespace

//---------------------------------------------------------------------------//
VolumeFraction ball_volume_fraction(SetExpr const& expr, Vec const& x, double r,
                                    FractionOptions const& opts)
{
    if (!(r > 0) || !std::isfinite(r))
        throw InvalidInput("ball radius must be positive");
    for (int k = 0; k < 3; ++k)
    {
        if (!std::isfinite(x[k]))
            throw InvalidInput("query point must be finite");
    }
    switch (opts.mode)
    {
        case FractionOptions::Mode::automatic:
            if (auto ex = exact_fraction(expr, x, r))
                return *ex;
            return chord_fraction(expr, x, r, opts.chords);
        case FractionOptions::Mode::quadrature:
            return chord_fraction(expr, x, r, opts.chords);
        case FractionOptions::Mode::montecarlo:
            return montecarlo_fraction(expr, x, r, opts);
    }
    return chord_fraction(expr, x, r, opts.chords);
}

DensityEstimate estimate_density(SetExpr const& expr, Vec const& x, RadiusSchedule const& sched,
                                 FractionOptions const& opts)
{
    sched.validate();
    DensityEstimate est;
    est.upper = 0;
    est.lower = 1;
    for (int k = 0; k < sched.count; ++k)
    {
        double const r = sched.radius(k);
        VolumeFraction const vf = ball_volume_fraction(expr, x, r, opts);
        est.fractions.push_back({r, vf.fraction});
        if (rank(vf.method) > rank(est.method))
            est.method = vf.method;
        if (k >= sched.count - sched.window)
        {
            est.upper = std::max(est.upper, vf.fraction);
            est.lower = std::min(est.lower, vf.fraction);
            est.error_bound = std::max(est.error_bound, vf.error_bound);
        }
    }
    return est;
}

DensityEstimate complement_estimate(DensityEstimate const& est, RadiusSchedule const& sched)
{
    DensityEstimate c;
    c.method = est.method;
    c.error_bound = est.error_bound;
    c.upper = 0;
    c.lower = 1;
    for (std::size_t k = 0; k < est.fractions.size(); ++k)
    {
        double const f = 1 - est.fractions[k].fraction;
        c.fractions.push_back({est.fractions[k].radius, f});
        if (static_cast<int>(k) >= sched.count - sched.window)
        {
            c.upper = std::max(c.upper, f);
            c.lower = std::min(c.lower, f);
        }
    }
    return c;
}

std::pair<DensityEstimate, DensityEstimate>
density_pair(SetExpr const& expr, Vec const& x, RadiusSchedule const& sched,
             FractionOptions const& opts)
{
    DensityEstimate a = estimate_density(expr, x, sched, opts);
    DensityEstimate c = complement_estimate(a, sched);
    return {std::move(a), std::move(c)};
}

std::vector<DensitySummary> raster_density_field(RasterGrid const& grid,
                                                 RadiusSchedule const& sched,
                                                 FractionOptions const& opts)
{
    sched.validate();
    if (sched.smallest() < grid.spacing())
        throw ScheduleTooFine("radius schedule reaches below the raster spacing");
    SetExpr const expr = SetExpr::raster(grid);
    std::vector<DensitySummary> out(grid.cell_count());
    for_each_chunk(out.size(), 64, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
        {
            auto est = estimate_density(expr, grid.cell_center(grid.unravel(i)), sched, opts);
            out[i] = {est.upper, est.lower, est.error_bound};
        }
    });
    return out;
}

}  // namespace crofton

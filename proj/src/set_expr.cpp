// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/set_expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "crofton/error.hpp"
#include "detail/overloaded.hpp"

namespace crofton
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

void check_dim(int dim)
{
    if (dim != 2 && dim != 3)
        throw InvalidInput("dimension must be 2 or 3, got " + std::to_string(dim));
}

void check_point(int dim, Vec const& v, char const* what)
{
    for (int k = 0; k < 3; ++k)
    {
        if (!std::isfinite(v[k]))
            throw InvalidInput(std::string(what) + " has a non-finite component");
    }
    if (dim == 2 && v[2] != 0)
        throw InvalidInput(std::string(what) + " has a third component in 2-D");
}

void check_unit(Vec const& v, char const* what)
{
    if (std::abs(norm(v) - 1) > 1e-12)
        throw InvalidInput(std::string(what) + " must be a unit vector");
}
}  // namespace

//---------------------------------------------------------------------------//
// Line
//---------------------------------------------------------------------------//
Line Line::make(Vec direction, Vec base)
{
    check_unit(direction, "line direction");
    if (std::abs(dot(base, direction)) > 1e-9 * norm(base))
        throw InvalidInput("line base point must be orthogonal to the direction");
    return {direction, base};
}

Line Line::through(Vec point, Vec direction)
{
    check_unit(direction, "line direction");
    Vec base = point - dot(point, direction) * direction;
    // Remove the residual parallel component left by rounding.
    base = base - dot(base, direction) * direction;
    return {direction, base};
}

//---------------------------------------------------------------------------//
// Bounds
//---------------------------------------------------------------------------//
double Bounds::diameter() const
{
    switch (kind)
    {
        case Kind::empty: return 0;
        case Kind::unbounded: return inf;
        case Kind::finite: return norm(hi - lo);
    }
    return 0;
}

Bounds hull(Bounds const& a, Bounds const& b, int dim)
{
    if (a.is_unbounded() || b.is_unbounded())
        return Bounds::everything();
    if (a.is_empty())
        return b;
    if (b.is_empty())
        return a;
    Bounds r = a;
    for (int k = 0; k < dim; ++k)
    {
        r.lo[k] = std::min(a.lo[k], b.lo[k]);
        r.hi[k] = std::max(a.hi[k], b.hi[k]);
    }
    return r;
}

Bounds overlap(Bounds const& a, Bounds const& b, int dim)
{
    if (a.is_empty() || b.is_empty())
        return Bounds::none();
    if (a.is_unbounded())
        return b;
    if (b.is_unbounded())
        return a;
    Bounds r = a;
    for (int k = 0; k < dim; ++k)
    {
        r.lo[k] = std::max(a.lo[k], b.lo[k]);
        r.hi[k] = std::min(a.hi[k], b.hi[k]);
        if (r.lo[k] > r.hi[k])
            return Bounds::none();
    }
    return r;
}

//---------------------------------------------------------------------------//
// RasterGrid
//---------------------------------------------------------------------------//
RasterGrid::RasterGrid(int dim, Vec origin, double spacing, Index dims,
                       std::vector<std::uint8_t> occupancy)
    : dim_(dim), origin_(origin), spacing_(spacing), dims_(dims),
      occupancy_(std::move(occupancy))
{
    check_dim(dim);
    check_point(dim, origin, "raster origin");
    if (!(spacing > 0) || !std::isfinite(spacing))
        throw InvalidInput("raster spacing must be positive");
    std::size_t expected = 1;
    for (int k = 0; k < 3; ++k)
    {
        if (k >= dim)
        {
            if (dims_[k] != 1)
            {
                if (dims_[k] == 0)
                    dims_[k] = 1;
                else
                    throw InvalidInput("raster dims exceed the dimension");
            }
            continue;
        }
        if (dims_[k] <= 0)
            throw InvalidInput("raster dims must be positive");
        expected *= static_cast<std::size_t>(dims_[k]);
    }
    if (occupancy_.size() != expected)
        throw InvalidInput("raster payload length " + std::to_string(occupancy_.size())
                           + " does not match dims product " + std::to_string(expected));
    for (auto b : occupancy_)
    {
        if (b > 1)
            throw InvalidInput("raster occupancy values must be 0 or 1");
    }
}

bool RasterGrid::in_range(Index const& idx) const
{
    for (int k = 0; k < 3; ++k)
    {
        if (idx[k] < 0 || idx[k] >= dims_[k])
            return false;
    }
    return true;
}

RasterGrid::Index RasterGrid::unravel(std::size_t lin) const
{
    Index idx{0, 0, 0};
    idx[0] = static_cast<int>(lin % static_cast<std::size_t>(dims_[0]));
    lin /= static_cast<std::size_t>(dims_[0]);
    idx[1] = static_cast<int>(lin % static_cast<std::size_t>(dims_[1]));
    idx[2] = static_cast<int>(lin / static_cast<std::size_t>(dims_[1]));
    return idx;
}

std::optional<RasterGrid::Index> RasterGrid::cell_of(Vec const& x) const
{
    Index idx{0, 0, 0};
    for (int k = 0; k < dim_; ++k)
    {
        double const u = std::floor((x[k] - origin_[k]) / spacing_);
        if (!(u >= 0) || u >= dims_[k])
            return std::nullopt;
        idx[k] = static_cast<int>(u);
    }
    return idx;
}

Vec RasterGrid::cell_lower(Index const& idx) const
{
    Vec v = origin_;
    for (int k = 0; k < dim_; ++k)
        v[k] += idx[k] * spacing_;
    return v;
}

Vec RasterGrid::cell_center(Index const& idx) const
{
    Vec v = origin_;
    for (int k = 0; k < dim_; ++k)
        v[k] += (idx[k] + 0.5) * spacing_;
    return v;
}

Vec RasterGrid::upper() const
{
    Vec v = origin_;
    for (int k = 0; k < dim_; ++k)
        v[k] += dims_[k] * spacing_;
    return v;
}

std::size_t RasterGrid::occupied_count() const
{
    return static_cast<std::size_t>(std::count(occupancy_.begin(), occupancy_.end(), 1));
}

//---------------------------------------------------------------------------//
// Domain
//---------------------------------------------------------------------------//
Domain Domain::all_space(int dim)
{
    check_dim(dim);
    Domain d;
    d.dim_ = dim;
    return d;
}

Domain Domain::open_box(int dim, Vec lo, Vec hi)
{
    check_dim(dim);
    check_point(dim, lo, "domain lo");
    check_point(dim, hi, "domain hi");
    for (int k = 0; k < dim; ++k)
    {
        if (!(lo[k] < hi[k]))
            throw InvalidInput("domain box needs lo < hi in every coordinate");
    }
    Domain d;
    d.dim_ = dim;
    d.box_ = std::make_pair(lo, hi);
    return d;
}

bool Domain::contains(Vec const& x) const
{
    if (!box_)
        return true;
    for (int k = 0; k < dim_; ++k)
    {
        if (!(box_->first[k] < x[k] && x[k] < box_->second[k]))
            return false;
    }
    return true;
}

IntervalSet Domain::trace(Line const& line) const
{
    if (!box_)
        return IntervalSet::whole_line();
    double tlo = -inf;
    double thi = inf;
    for (int k = 0; k < dim_; ++k)
    {
        double const d = line.direction[k];
        double const z = line.base[k];
        if (d == 0)
        {
            if (!(box_->first[k] < z && z < box_->second[k]))
                return {};
            continue;
        }
        double t0 = (box_->first[k] - z) / d;
        double t1 = (box_->second[k] - z) / d;
        if (t0 > t1)
            std::swap(t0, t1);
        tlo = std::max(tlo, t0);
        thi = std::min(thi, t1);
    }
    return IntervalSet::single(tlo, thi);
}

Bounds Domain::bounds() const
{
    if (!box_)
        return Bounds::everything();
    return Bounds::box(box_->first, box_->second);
}

//---------------------------------------------------------------------------//
// SetExpr
//---------------------------------------------------------------------------//
struct SetExpr::Node
{
    int dim;
    Data data;
};

SetExpr SetExpr::make(int dim, Data data)
{
    return SetExpr(std::make_shared<Node const>(Node{dim, std::move(data)}));
}

int SetExpr::dim() const { return node_->dim; }
SetExpr::Data const& SetExpr::data() const { return node_->data; }

bool SetExpr::is_leaf() const
{
    return std::holds_alternative<node::HalfSpace>(data())
           || std::holds_alternative<node::Ball>(data())
           || std::holds_alternative<node::Box>(data())
           || std::holds_alternative<node::Raster>(data());
}

SetExpr SetExpr::half_space(int dim, Vec normal, double offset)
{
    check_dim(dim);
    check_point(dim, normal, "half-space normal");
    check_unit(normal, "half-space normal");
    if (!std::isfinite(offset))
        throw InvalidInput("half-space offset must be finite");
    return make(dim, node::HalfSpace{normal, offset});
}

SetExpr SetExpr::ball(int dim, Vec center, double radius)
{
    check_dim(dim);
    check_point(dim, center, "ball center");
    if (!(radius > 0) || !std::isfinite(radius))
        throw InvalidInput("ball radius must be positive");
    return make(dim, node::Ball{center, radius});
}

SetExpr SetExpr::box(int dim, Vec lo, Vec hi)
{
    check_dim(dim);
    check_point(dim, lo, "box lo");
    check_point(dim, hi, "box hi");
    for (int k = 0; k < dim; ++k)
    {
        if (!(lo[k] < hi[k]))
            throw InvalidInput("box needs lo < hi in every coordinate");
    }
    return make(dim, node::Box{lo, hi});
}

SetExpr SetExpr::raster(RasterGrid grid)
{
    return raster(std::make_shared<RasterGrid const>(std::move(grid)));
}

SetExpr SetExpr::raster(std::shared_ptr<RasterGrid const> grid)
{
    if (!grid)
        throw InvalidInput("null raster");
    int const dim = grid->dim();
    return make(dim, node::Raster{std::move(grid)});
}

namespace
{
int common_dim(std::vector<SetExpr> const& children)
{
    if (children.empty())
        throw InvalidInput("boolean node needs at least one child");
    int const dim = children.front().dim();
    for (auto const& c : children)
    {
        if (c.dim() != dim)
            throw InvalidInput("boolean node mixes dimensions");
    }
    return dim;
}
}  // namespace

SetExpr SetExpr::union_of(std::vector<SetExpr> children)
{
    int const dim = common_dim(children);
    return make(dim, node::Union{std::move(children)});
}

SetExpr SetExpr::intersection_of(std::vector<SetExpr> children)
{
    int const dim = common_dim(children);
    return make(dim, node::Intersection{std::move(children)});
}

SetExpr SetExpr::complement(SetExpr child)
{
    int const dim = child.dim();
    return make(dim, node::Complement{std::move(child)});
}

SetExpr SetExpr::difference(SetExpr left, SetExpr right)
{
    if (left.dim() != right.dim())
        throw InvalidInput("difference mixes dimensions");
    int const dim = left.dim();
    return make(dim, node::Difference{std::move(left), std::move(right)});
}

SetExpr SetExpr::empty_set(int dim)
{
    check_dim(dim);
    return make(dim, node::Union{});
}

//---------------------------------------------------------------------------//
// contains
//---------------------------------------------------------------------------//
namespace
{
using detail::Overloaded;
}  // namespace

bool contains(SetExpr const& expr, Vec const& x)
{
    int const dim = expr.dim();
    return std::visit(
        Overloaded{
            [&](node::HalfSpace const& h) { return dot(h.normal, x) < h.offset; },
            [&](node::Ball const& b) {
                Vec const d = x - b.center;
                return dot(d, d) < b.radius * b.radius;
            },
            [&](node::Box const& b) {
                for (int k = 0; k < dim; ++k)
                {
                    if (!(b.lo[k] <= x[k] && x[k] < b.hi[k]))
                        return false;
                }
                return true;
            },
            [&](node::Raster const& r) {
                auto idx = r.grid->cell_of(x);
                return idx && r.grid->occupied(*idx);
            },
            [&](node::Union const& u) {
                return std::any_of(u.children.begin(), u.children.end(),
                                   [&](SetExpr const& c) { return contains(c, x); });
            },
            [&](node::Intersection const& u) {
                return std::all_of(u.children.begin(), u.children.end(),
                                   [&](SetExpr const& c) { return contains(c, x); });
            },
            [&](node::Complement const& c) { return !contains(c.child, x); },
            [&](node::Difference const& d) {
                return contains(d.left, x) && !contains(d.right, x);
            }},
        expr.data());
}

//---------------------------------------------------------------------------//
// trace
//---------------------------------------------------------------------------//
IntervalSet trace_raster(RasterGrid const& grid, Line const& line)
{
    int const dim = grid.dim();
    double const s = grid.spacing();
    Vec const lo = grid.origin();
    Vec const hi = grid.upper();
    Vec const& z = line.base;
    Vec const& tau = line.direction;

    // Parameter range inside the raster's half-open extent.
    double tlo = -inf;
    double thi = inf;
    for (int k = 0; k < dim; ++k)
    {
        if (tau[k] == 0)
        {
            if (!(lo[k] <= z[k] && z[k] < hi[k]))
                return {};
            continue;
        }
        double t0 = (lo[k] - z[k]) / tau[k];
        double t1 = (hi[k] - z[k]) / tau[k];
        if (t0 > t1)
            std::swap(t0, t1);
        tlo = std::max(tlo, t0);
        thi = std::min(thi, t1);
    }
    if (!(tlo < thi))
        return {};

    // Starting cell, chosen on the side the line travels into.
    RasterGrid::Index idx{0, 0, 0};
    for (int k = 0; k < dim; ++k)
    {
        double const u = (z[k] + tlo * tau[k] - lo[k]) / s;
        double cell = tau[k] < 0 ? std::ceil(u) - 1 : std::floor(u);
        cell = std::clamp(cell, 0.0, static_cast<double>(grid.dims()[k] - 1));
        idx[k] = static_cast<int>(cell);
    }

    double const tol = 1e-12 * s;
    auto next_crossing = [&](int k) {
        if (tau[k] > 0)
            return (lo[k] + (idx[k] + 1) * s - z[k]) / tau[k];
        if (tau[k] < 0)
            return (lo[k] + idx[k] * s - z[k]) / tau[k];
        return inf;
    };

    IntervalSet::Storage raw;
    double t = tlo;
    double run_start = 0;
    bool in_run = false;
    while (t < thi)
    {
        double t_exit = thi;
        for (int k = 0; k < dim; ++k)
            t_exit = std::min(t_exit, next_crossing(k));
        bool const occ = grid.occupied(idx);
        if (occ && !in_run)
        {
            run_start = t;
            in_run = true;
        }
        else if (!occ && in_run)
        {
            raw.push_back({run_start, t});
            in_run = false;
        }
        if (t_exit >= thi)
        {
            t = thi;
            break;
        }
        // Step every axis whose face lies within the dedup tolerance.
        bool inside = true;
        for (int k = 0; k < dim; ++k)
        {
            if (next_crossing(k) <= t_exit + tol)
            {
                idx[k] += tau[k] > 0 ? 1 : -1;
                if (idx[k] < 0 || idx[k] >= grid.dims()[k])
                    inside = false;
            }
        }
        t = std::max(t, t_exit);
        if (!inside)
            break;
    }
    if (in_run)
        raw.push_back({run_start, t});
    return IntervalSet::canonicalize(std::span<Interval const>(raw.data(), raw.size()));
}

IntervalSet trace(SetExpr const& expr, Line const& line)
{
    int const dim = expr.dim();
    Vec const& z = line.base;
    Vec const& tau = line.direction;
    return std::visit(
        Overloaded{
            [&](node::HalfSpace const& h) {
                double const a = dot(h.normal, tau);
                double const b = h.offset - dot(h.normal, z);
                if (std::abs(a) <= 1e-14)
                    return b > 0 ? IntervalSet::whole_line() : IntervalSet{};
                return a > 0 ? IntervalSet::single(-inf, b / a)
                             : IntervalSet::single(b / a, inf);
            },
            [&](node::Ball const& b) {
                Vec const w = z - b.center;
                double const p = dot(tau, w);
                Vec const perp = w - p * tau;
                double const r2 = b.radius * b.radius;
                double const disc = r2 - dot(perp, perp);
                if (disc <= 1e-12 * r2)
                    return IntervalSet{};
                double const root = std::sqrt(disc);
                return IntervalSet::single(-p - root, -p + root);
            },
            [&](node::Box const& b) {
                double tlo = -inf;
                double thi = inf;
                for (int k = 0; k < dim; ++k)
                {
                    if (tau[k] == 0)
                    {
                        if (!(b.lo[k] <= z[k] && z[k] < b.hi[k]))
                            return IntervalSet{};
                        continue;
                    }
                    double t0 = (b.lo[k] - z[k]) / tau[k];
                    double t1 = (b.hi[k] - z[k]) / tau[k];
                    if (t0 > t1)
                        std::swap(t0, t1);
                    tlo = std::max(tlo, t0);
                    thi = std::min(thi, t1);
                }
                return IntervalSet::single(tlo, thi);
            },
            [&](node::Raster const& r) { return trace_raster(*r.grid, line); },
            [&](node::Union const& u) {
                IntervalSet acc;
                for (auto const& c : u.children)
                    acc = unite(acc, trace(c, line));
                return acc;
            },
            [&](node::Intersection const& u) {
                IntervalSet acc = IntervalSet::whole_line();
                for (auto const& c : u.children)
                {
                    if (acc.empty())
                        break;
                    acc = intersect(acc, trace(c, line));
                }
                return acc;
            },
            [&](node::Complement const& c) { return complement(trace(c.child, line)); },
            [&](node::Difference const& d) {
                return subtract(trace(d.left, line), trace(d.right, line));
            }},
        expr.data());
}

//---------------------------------------------------------------------------//
// Bounds
//---------------------------------------------------------------------------//
namespace
{
Bounds raster_extent(RasterGrid const& g)
{
    Bounds b = Bounds::none();
    for (std::size_t i = 0; i < g.cell_count(); ++i)
    {
        if (!g.occupancy()[i])
            continue;
        auto idx = g.unravel(i);
        Vec lo = g.cell_lower(idx);
        Vec hi = lo;
        for (int k = 0; k < g.dim(); ++k)
            hi[k] += g.spacing();
        b = hull(b, Bounds::box(lo, hi), g.dim());
    }
    return b;
}

// Box around A (negated = false) or around its complement (negated = true).
Bounds bbox(SetExpr const& expr, bool negated)
{
    int const dim = expr.dim();
    return std::visit(
        Overloaded{
            [&](node::HalfSpace const&) { return Bounds::everything(); },
            [&](node::Ball const& b) {
                if (negated)
                    return Bounds::everything();
                Vec lo = b.center;
                Vec hi = b.center;
                for (int k = 0; k < dim; ++k)
                {
                    lo[k] -= b.radius;
                    hi[k] += b.radius;
                }
                return Bounds::box(lo, hi);
            },
            [&](node::Box const& b) {
                return negated ? Bounds::everything() : Bounds::box(b.lo, b.hi);
            },
            [&](node::Raster const& r) {
                return negated ? Bounds::everything() : raster_extent(*r.grid);
            },
            [&](node::Union const& u) {
                Bounds acc = negated ? Bounds::everything() : Bounds::none();
                for (auto const& c : u.children)
                {
                    acc = negated ? overlap(acc, bbox(c, true), dim)
                                  : hull(acc, bbox(c, false), dim);
                }
                return acc;
            },
            [&](node::Intersection const& u) {
                Bounds acc = negated ? Bounds::none() : Bounds::everything();
                for (auto const& c : u.children)
                {
                    acc = negated ? hull(acc, bbox(c, true), dim)
                                  : overlap(acc, bbox(c, false), dim);
                }
                return acc;
            },
            [&](node::Complement const& c) { return bbox(c.child, !negated); },
            [&](node::Difference const& d) {
                return negated ? hull(bbox(d.left, true), bbox(d.right, false), dim)
                               : overlap(bbox(d.left, false), bbox(d.right, true), dim);
            }},
        expr.data());
}

// Hull of every leaf boundary.
Bounds leaf_boundary_hull(SetExpr const& expr)
{
    int const dim = expr.dim();
    return std::visit(
        Overloaded{
            [&](node::HalfSpace const&) { return Bounds::everything(); },
            [&](node::Raster const& r) { return raster_extent(*r.grid); },
            [&](auto const& n) -> Bounds {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, node::Ball> || std::is_same_v<T, node::Box>)
                {
                    return bbox(expr, false);
                }
                else if constexpr (std::is_same_v<T, node::Complement>)
                {
                    return leaf_boundary_hull(n.child);
                }
                else if constexpr (std::is_same_v<T, node::Difference>)
                {
                    return hull(leaf_boundary_hull(n.left), leaf_boundary_hull(n.right), dim);
                }
                else
                {
                    Bounds acc = Bounds::none();
                    for (auto const& c : n.children)
                        acc = hull(acc, leaf_boundary_hull(c), dim);
                    return acc;
                }
            }},
        expr.data());
}

// Enclosing ball; radius < 0 encodes "no boundary at all".
std::optional<Sphere> merge_spheres(std::optional<Sphere> a, std::optional<Sphere> b)
{
    if (!a || !b)
        return std::nullopt;
    if (a->radius < 0)
        return b;
    if (b->radius < 0)
        return a;
    double const d = norm(b->center - a->center);
    if (d + b->radius <= a->radius)
        return a;
    if (d + a->radius <= b->radius)
        return b;
    double const r = 0.5 * (d + a->radius + b->radius);
    Vec const c = a->center + ((r - a->radius) / d) * (b->center - a->center);
    return Sphere{c, r};
}

std::optional<Sphere> box_sphere(Bounds const& b)
{
    if (b.is_empty())
        return Sphere{{}, -1};
    if (b.is_unbounded())
        return std::nullopt;
    return Sphere{0.5 * (b.lo + b.hi), 0.5 * norm(b.hi - b.lo)};
}
}  // namespace

Bounds bounding_box(SetExpr const& expr) { return bbox(expr, false); }

Bounds boundary_bounds(SetExpr const& expr)
{
    int const dim = expr.dim();
    Bounds b = overlap(bbox(expr, false), bbox(expr, true), dim);
    return overlap(b, leaf_boundary_hull(expr), dim);
}

std::optional<Sphere> boundary_sphere(SetExpr const& expr)
{
    return std::visit(
        Overloaded{
            [&](node::HalfSpace const&) -> std::optional<Sphere> { return std::nullopt; },
            [&](node::Ball const& b) -> std::optional<Sphere> {
                return Sphere{b.center, b.radius};
            },
            [&](node::Box const& b) { return box_sphere(Bounds::box(b.lo, b.hi)); },
            [&](node::Raster const& r) { return box_sphere(raster_extent(*r.grid)); },
            [&](node::Complement const& c) { return boundary_sphere(c.child); },
            [&](node::Difference const& d) {
                return merge_spheres(boundary_sphere(d.left), boundary_sphere(d.right));
            },
            [&](auto const& n) {
                std::optional<Sphere> acc = Sphere{{}, -1};
                for (auto const& c : n.children)
                    acc = merge_spheres(acc, boundary_sphere(c));
                return acc;
            }},
        expr.data());
}

std::size_t node_count(SetExpr const& expr)
{
    return std::visit(
        Overloaded{
            [&](node::Complement const& c) { return 1 + node_count(c.child); },
            [&](node::Difference const& d) {
                return 1 + node_count(d.left) + node_count(d.right);
            },
            [&](node::Union const& u) {
                std::size_t n = 1;
                for (auto const& c : u.children)
                    n += node_count(c);
                return n;
            },
            [&](node::Intersection const& u) {
                std::size_t n = 1;
                for (auto const& c : u.children)
                    n += node_count(c);
                return n;
            },
            [&](auto const&) -> std::size_t { return 1; }},
        expr.data());
}

}  // namespace crofton

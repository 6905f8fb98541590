// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/boundary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "crofton/error.hpp"
#include "crofton/parallel.hpp"
#include "detail/overloaded.hpp"

namespace crofton
{
using detail::Overloaded;

//---------------------------------------------------------------------------//
// Notions and verdicts
//---------------------------------------------------------------------------//
BoundaryNotion BoundaryNotion::strong(double delta)
{
    if (!(delta > 0 && delta <= 0.5))
        throw InvalidInput("strong boundary delta must lie in (0, 0.5]");
    return {Kind::strong, delta};
}

BoundaryNotion BoundaryNotion::parse(std::string_view text)
{
    if (text == "essential")
        return essential();
    if (text == "preponderant")
        return preponderant();
    constexpr std::string_view prefix = "strong:";
    if (text.substr(0, prefix.size()) == prefix)
    {
        std::string const rest(text.substr(prefix.size()));
        std::size_t used = 0;
        double delta = 0;
        try
        {
            delta = std::stod(rest, &used);
        }
        catch (std::exception const&)
        {
            used = 0;
        }
        if (used == 0 || used != rest.size())
            throw InvalidInput("bad strong boundary delta '" + rest + "'");
        return strong(delta);
    }
    throw InvalidInput("unknown boundary notion '" + std::string(text)
                       + "' (expected essential, preponderant or strong:DELTA)");
}

std::string BoundaryNotion::name() const
{
    switch (kind)
    {
        case Kind::essential: return "essential";
        case Kind::preponderant: return "preponderant";
        case Kind::strong:
        {
            char buf[32];
            auto res = std::to_chars(buf, buf + sizeof(buf), delta);
            return "strong:" + std::string(buf, res.ptr);
        }
    }
    return "?";
}

std::string_view to_string(Verdict v)
{
    switch (v)
    {
        case Verdict::interior_a: return "InteriorA";
        case Verdict::interior_complement: return "InteriorComplement";
        case Verdict::on_boundary: return "OnBoundary";
        case Verdict::uncertain: return "Uncertain";
    }
    return "?";
}

BoundaryLabel classify_densities(DensityEstimate const& a, DensityEstimate const& c,
                                 BoundaryNotion const& notion, double tol)
{
    if (!(tol > 0 && tol < 0.5))
        throw InvalidInput("tolerance must lie in (0, 0.5)");

    BoundaryLabel label;
    label.notion = notion;
    Margins& m = label.margins;
    m.upper_a = a.upper;
    m.upper_c = c.upper;
    m.lower_a = a.lower;
    m.lower_c = c.lower;
    m.error_bound = std::max(a.error_bound, c.error_bound);
    double const eb = m.error_bound;

    switch (notion.kind)
    {
        case BoundaryNotion::Kind::essential:
        {
            m.threshold = 0;
            m.margin_a = a.upper;
            m.margin_c = c.upper;
            if (c.upper + eb <= tol)
                label.verdict = Verdict::interior_a;
            else if (a.upper + eb <= tol)
                label.verdict = Verdict::interior_complement;
            else if (a.upper - eb > tol && c.upper - eb > tol)
                label.verdict = Verdict::on_boundary;
            break;
        }
        case BoundaryNotion::Kind::preponderant:
        {
            double const t = 0.5;
            m.threshold = t;
            m.margin_a = a.upper - t;
            m.margin_c = c.upper - t;
            if (c.upper + eb < t - tol)
                label.verdict = Verdict::interior_a;
            else if (a.upper + eb < t - tol)
                label.verdict = Verdict::interior_complement;
            else if (a.upper - eb >= t - tol && c.upper - eb >= t - tol)
                label.verdict = Verdict::on_boundary;
            break;
        }
        case BoundaryNotion::Kind::strong:
        {
            double const t = notion.delta;
            m.threshold = t;
            m.margin_a = a.lower - t;
            m.margin_c = c.lower - t;
            bool const thin_a = a.lower + eb < t - tol;
            bool const thin_c = c.lower + eb < t - tol;
            if (a.lower - eb >= t - tol && c.lower - eb >= t - tol)
                label.verdict = Verdict::on_boundary;
            else if (thin_c && (!thin_a || a.upper > c.upper))
                label.verdict = Verdict::interior_a;
            else if (thin_a && (!thin_c || c.upper > a.upper))
                label.verdict = Verdict::interior_complement;
            break;
        }
    }
    label.density_a = a;
    label.density_c = c;
    return label;
}

BoundaryLabel classify_point(SetExpr const& expr, Vec const& x, BoundaryNotion const& notion,
                             RadiusSchedule const& sched, double tol, FractionOptions const& opts)
{
    if (!(tol > 0 && tol < 0.5))
        throw InvalidInput("tolerance must lie in (0, 0.5)");
    auto [a, c] = density_pair(expr, x, sched, opts);
    return classify_densities(a, c, notion, tol);
}

std::vector<std::uint8_t> classify_raster(RasterGrid const& grid, BoundaryNotion const& notion,
                                          RadiusSchedule const& sched, double tol,
                                          FractionOptions const& opts)
{
    sched.validate();
    if (!(tol > 0 && tol < 0.5))
        throw InvalidInput("tolerance must lie in (0, 0.5)");
    SetExpr const expr = SetExpr::raster(grid);
    std::vector<std::uint8_t> mask(grid.cell_count());
    for_each_chunk(mask.size(), 64, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
        {
            auto label
                = classify_point(expr, grid.cell_center(grid.unravel(i)), notion, sched, tol, opts);
            mask[i] = static_cast<std::uint8_t>(label.verdict);
        }
    });
    return mask;
}

//---------------------------------------------------------------------------//
// Explicit boundaries
//---------------------------------------------------------------------------//
std::string_view to_string(ExplicitBoundary::Kind k)
{
    switch (k)
    {
        case ExplicitBoundary::Kind::voxel_faces: return "voxel_faces";
        case ExplicitBoundary::Kind::poly_segments: return "poly_segments";
        case ExplicitBoundary::Kind::sphere: return "sphere";
    }
    return "?";
}

double ExplicitBoundary::total_measure() const
{
    switch (kind)
    {
        case Kind::voxel_faces:
            return static_cast<double>(faces.size()) * std::pow(spacing, dim - 1);
        case Kind::poly_segments:
        {
            double total = 0;
            for (auto const& s : segments)
                total += s.length();
            return total;
        }
        case Kind::sphere:
            return unit_sphere_area(dim) * std::pow(sphere.radius, dim - 1);
    }
    return 0;
}

std::array<std::size_t, 3> ExplicitBoundary::face_counts() const
{
    std::array<std::size_t, 3> counts{0, 0, 0};
    for (auto const& f : faces)
        ++counts[static_cast<std::size_t>(f.axis)];
    return counts;
}

ExplicitBoundary extract_boundary_voxel(RasterGrid const& grid)
{
    ExplicitBoundary out;
    out.kind = ExplicitBoundary::Kind::voxel_faces;
    out.dim = grid.dim();
    out.origin = grid.origin();
    out.spacing = grid.spacing();
    auto const& dims = grid.dims();
    for (int axis = 0; axis < grid.dim(); ++axis)
    {
        RasterGrid::Index extent = dims;
        extent[axis] = dims[axis] + 1;
        RasterGrid::Index idx{0, 0, 0};
        for (idx[2] = 0; idx[2] < extent[2]; ++idx[2])
            for (idx[1] = 0; idx[1] < extent[1]; ++idx[1])
                for (idx[0] = 0; idx[0] < extent[0]; ++idx[0])
                {
                    RasterGrid::Index below = idx;
                    --below[axis];
                    bool const lo = grid.occupied(below);
                    bool const hi = grid.occupied(idx);
                    if (lo != hi)
                        out.faces.push_back({axis, lo ? 1 : -1, idx});
                }
    }
    return out;
}

namespace
{
//---------------------------------------------------------------------------//
// Polygonal boundary of 2-D CSG
//---------------------------------------------------------------------------//
int disk_sides()
{
    static int const sides
        = static_cast<int>(std::ceil(std::numbers::pi / std::acos(1 - disk_chord_tolerance)));
    return sides;
}

Vec disk_vertex(node::Ball const& b, int k)
{
    double const a = 2 * std::numbers::pi * (k % disk_sides()) / disk_sides();
    return b.center + b.radius * make_vec(std::cos(a), std::sin(a));
}

double cross2(Vec const& a, Vec const& b) { return a[0] * b[1] - a[1] * b[0]; }

bool inside_disk_polygon(node::Ball const& b, Vec const& p)
{
    Vec const q = p - b.center;
    double const d = norm(q);
    if (d >= b.radius)
        return false;
    int const m = disk_sides();
    if (d <= b.radius * std::cos(std::numbers::pi / m))
        return true;
    double ang = std::atan2(q[1], q[0]);
    if (ang < 0)
        ang += 2 * std::numbers::pi;
    int const k = static_cast<int>(std::floor(ang / (2 * std::numbers::pi / m))) % m;
    Vec const v0 = disk_vertex(b, k);
    Vec const v1 = disk_vertex(b, k + 1);
    return cross2(v1 - v0, p - v0) > 0;
}

//! Membership with disks replaced by their inscribed polygons.
bool polygon_contains(SetExpr const& e, Vec const& p)
{
    return std::visit(
        Overloaded{
            [&](node::Ball const& b) { return inside_disk_polygon(b, p); },
            [&](node::Union const& u) {
                return std::any_of(u.children.begin(), u.children.end(),
                                   [&](SetExpr const& c) { return polygon_contains(c, p); });
            },
            [&](node::Intersection const& u) {
                return std::all_of(u.children.begin(), u.children.end(),
                                   [&](SetExpr const& c) { return polygon_contains(c, p); });
            },
            [&](node::Complement const& c) { return !polygon_contains(c.child, p); },
            [&](node::Difference const& d) {
                return polygon_contains(d.left, p) && !polygon_contains(d.right, p);
            },
            [&](auto const&) { return contains(e, p); }},
        e.data());
}

struct Piece
{
    Vec a;
    Vec b;
    bool arc;
};

//! Clip the infinite line p + s d to the box; nullopt when it misses.
std::optional<std::pair<double, double>> clip_line(Vec const& p, Vec const& d, Vec const& lo,
                                                   Vec const& hi, double s0, double s1)
{
    for (int k = 0; k < 2; ++k)
    {
        if (std::abs(d[k]) < 1e-300)
        {
            if (p[k] < lo[k] || p[k] > hi[k])
                return std::nullopt;
            continue;
        }
        double ta = (lo[k] - p[k]) / d[k];
        double tb = (hi[k] - p[k]) / d[k];
        if (ta > tb)
            std::swap(ta, tb);
        s0 = std::max(s0, ta);
        s1 = std::min(s1, tb);
    }
    if (s0 >= s1)
        return std::nullopt;
    return std::make_pair(s0, s1);
}

void collect_pieces(SetExpr const& e, Vec const& lo, Vec const& hi,
                    std::unordered_set<void const*>& seen, std::vector<Piece>& out)
{
    if (e.is_leaf() && !seen.insert(e.id()).second)
        return;
    std::visit(
        Overloaded{
            [&](node::HalfSpace const& h) {
                Vec const p = h.offset * h.normal;
                Vec const d = make_vec(-h.normal[1], h.normal[0]);
                double const big = std::numeric_limits<double>::infinity();
                if (auto s = clip_line(p, d, lo, hi, -big, big))
                    out.push_back({p + s->first * d, p + s->second * d, false});
            },
            [&](node::Ball const& b) {
                for (int k = 0; k < disk_sides(); ++k)
                    out.push_back({disk_vertex(b, k), disk_vertex(b, k + 1), true});
            },
            [&](node::Box const& b) {
                Vec const c[4] = {b.lo, make_vec(b.hi[0], b.lo[1]), b.hi, make_vec(b.lo[0], b.hi[1])};
                for (int k = 0; k < 4; ++k)
                    out.push_back({c[k], c[(k + 1) % 4], false});
            },
            [&](node::Raster const&) {
                throw InvalidInput("polygonal boundary extraction does not accept raster leaves");
            },
            [&](node::Union const& u) {
                for (auto const& c : u.children)
                    collect_pieces(c, lo, hi, seen, out);
            },
            [&](node::Intersection const& u) {
                for (auto const& c : u.children)
                    collect_pieces(c, lo, hi, seen, out);
            },
            [&](node::Complement const& c) { collect_pieces(c.child, lo, hi, seen, out); },
            [&](node::Difference const& d) {
                collect_pieces(d.left, lo, hi, seen, out);
                collect_pieces(d.right, lo, hi, seen, out);
            }},
        e.data());
}

//! Split parameters along piece i from every other piece.
std::vector<double> split_points(std::vector<Piece> const& pieces, std::size_t i, double eps)
{
    Piece const& p = pieces[i];
    Vec const d1 = p.b - p.a;
    double const len = norm(d1);
    std::vector<double> ts{0.0, 1.0};
    double const lo0 = std::min(p.a[0], p.b[0]) - eps, hi0 = std::max(p.a[0], p.b[0]) + eps;
    double const lo1 = std::min(p.a[1], p.b[1]) - eps, hi1 = std::max(p.a[1], p.b[1]) + eps;
    for (std::size_t j = 0; j < pieces.size(); ++j)
    {
        if (j == i)
            continue;
        Piece const& q = pieces[j];
        if (std::max(q.a[0], q.b[0]) < lo0 || std::min(q.a[0], q.b[0]) > hi0
            || std::max(q.a[1], q.b[1]) < lo1 || std::min(q.a[1], q.b[1]) > hi1)
            continue;
        Vec const d2 = q.b - q.a;
        double const denom = cross2(d1, d2);
        Vec const w = q.a - p.a;
        if (std::abs(denom) > 1e-12 * len * norm(d2))
        {
            double const s = cross2(w, d2) / denom;
            double const u = cross2(w, d1) / denom;
            double const ts_tol = eps / len;
            double const tu_tol = eps / norm(d2);
            if (s > -ts_tol && s < 1 + ts_tol && u > -tu_tol && u < 1 + tu_tol)
                ts.push_back(std::clamp(s, 0.0, 1.0));
        }
        else if (std::abs(cross2(d1, w)) / len < eps)
        {
            // Collinear: split at the other piece's endpoints.
            for (Vec const& e : {q.a, q.b})
            {
                double const s = dot(e - p.a, d1) / (len * len);
                if (s > 0 && s < 1)
                    ts.push_back(s);
            }
        }
    }
    std::sort(ts.begin(), ts.end());
    std::vector<double> out;
    for (double t : ts)
    {
        if (out.empty() || (t - out.back()) * len > eps)
            out.push_back(t);
        else if (t == 1.0)
            out.back() = 1.0;
    }
    return out;
}

bool same_segment(Piece const& x, Piece const& y, double eps)
{
    auto close = [eps](Vec const& u, Vec const& v) { return norm(u - v) <= eps; };
    return (close(x.a, y.a) && close(x.b, y.b)) || (close(x.a, y.b) && close(x.b, y.a));
}

//! Whether A differs across the piece at fraction t along it.
bool separates(SetExpr const& e, Piece const& p, double t, double offset)
{
    Vec const d = p.b - p.a;
    Vec const n = normalized(make_vec(-d[1], d[0]));
    Vec const x = p.a + t * d;
    return polygon_contains(e, x + offset * n) != polygon_contains(e, x - offset * n);
}
}  // namespace

ExplicitBoundary extract_boundary_poly(SetExpr const& expr, Domain const& domain)
{
    if (expr.dim() != 2 || domain.dim() != 2)
        throw InvalidInput("polygonal boundary extraction requires a 2-D set and domain");

    ExplicitBoundary out;
    out.kind = ExplicitBoundary::Kind::poly_segments;
    out.dim = 2;

    Bounds const window = overlap(boundary_bounds(expr), domain.bounds(), 2);
    if (window.is_empty())
        return out;
    if (window.is_unbounded())
        throw UnboundedWindow("boundary of an unbounded set needs a bounded domain");

    double const scale = std::max(window.diameter(), 1e-300);
    double const eps = 1e-10 * scale;
    Vec const grow = make_vec(1e-6 * scale, 1e-6 * scale);
    Vec const lo = window.lo - grow;
    Vec const hi = window.hi + grow;

    std::vector<Piece> raw;
    std::unordered_set<void const*> seen;
    collect_pieces(expr, lo, hi, seen, raw);

    // Split every piece at intersections and collinear overlaps.
    std::vector<Piece> split;
    for (std::size_t i = 0; i < raw.size(); ++i)
    {
        auto ts = split_points(raw, i, eps);
        Vec const d = raw[i].b - raw[i].a;
        for (std::size_t k = 0; k + 1 < ts.size(); ++k)
        {
            Piece piece{raw[i].a + ts[k] * d, raw[i].a + ts[k + 1] * d, raw[i].arc};
            if (norm(piece.b - piece.a) > eps)
                split.push_back(piece);
        }
    }

    // Coincident pieces from overlapping operands collapse to one.
    std::vector<std::size_t> order(split.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    auto mid_x = [&](std::size_t i) { return 0.5 * (split[i].a[0] + split[i].b[0]); };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return mid_x(x) < mid_x(y); });
    std::vector<bool> duplicate(split.size(), false);
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        std::size_t const i = order[k];
        if (duplicate[i])
            continue;
        for (std::size_t l = k + 1; l < order.size() && mid_x(order[l]) - mid_x(i) <= eps; ++l)
        {
            std::size_t const j = order[l];
            if (same_segment(split[i], split[j], eps))
                duplicate[j] = true;
        }
    }

    // Keep pieces that separate A from its complement.
    std::vector<Piece> kept;
    for (std::size_t i = 0; i < split.size(); ++i)
    {
        if (duplicate[i])
            continue;
        Piece const& p = split[i];
        double const offset = std::min(1e-7 * scale, 1e-3 * norm(p.b - p.a));
        bool const mid = separates(expr, p, 0.5, offset);
        if (separates(expr, p, 0.25, offset) != mid || separates(expr, p, 0.75, offset) != mid)
            throw GeneralPositionError("boundary pieces are not in general position");
        if (mid)
            kept.push_back(p);
    }

    // Restrict to the closed domain box.
    if (!domain.is_all_space())
    {
        std::vector<Piece> clipped;
        for (auto const& p : kept)
        {
            if (auto s = clip_line(p.a, p.b - p.a, domain.lo(), domain.hi(), 0.0, 1.0))
            {
                Piece c{p.a + s->first * (p.b - p.a), p.a + s->second * (p.b - p.a), p.arc};
                if (norm(c.b - c.a) > eps)
                    clipped.push_back(c);
            }
        }
        kept = std::move(clipped);
    }

    // Corners: vertices that are not a smooth continuation of two pieces.
    struct End
    {
        Vec point;
        std::size_t piece;
    };
    std::vector<End> ends;
    for (std::size_t i = 0; i < kept.size(); ++i)
    {
        ends.push_back({kept[i].a, i});
        ends.push_back({kept[i].b, i});
    }
    std::stable_sort(ends.begin(), ends.end(), [](End const& x, End const& y) {
        return x.point[0] < y.point[0];
    });
    std::vector<bool> used(ends.size(), false);
    for (std::size_t k = 0; k < ends.size(); ++k)
    {
        if (used[k])
            continue;
        std::vector<std::size_t> incident{ends[k].piece};
        used[k] = true;
        for (std::size_t l = k + 1; l < ends.size() && ends[l].point[0] - ends[k].point[0] <= eps;
             ++l)
        {
            if (!used[l] && norm(ends[l].point - ends[k].point) <= eps)
            {
                used[l] = true;
                incident.push_back(ends[l].piece);
            }
        }
        bool smooth = false;
        if (incident.size() == 2)
        {
            Piece const& p = kept[incident[0]];
            Piece const& q = kept[incident[1]];
            double const turn = std::abs(cross2(normalized(p.b - p.a), normalized(q.b - q.a)));
            smooth = (p.arc && q.arc) || turn < 1e-9;
        }
        if (!smooth)
            out.corners.push_back(ends[k].point);
    }
    std::sort(out.corners.begin(), out.corners.end(), [](Vec const& x, Vec const& y) {
        return x[0] != y[0] ? x[0] < y[0] : x[1] < y[1];
    });

    for (auto const& p : kept)
        out.segments.push_back({p.a, p.b});
    return out;
}

ExplicitBoundary extract_boundary(SetExpr const& expr, Domain const& domain)
{
    if (auto const* r = expr.as<node::Raster>())
        return extract_boundary_voxel(*r->grid);
    if (auto const* b = expr.as<node::Ball>())
    {
        ExplicitBoundary out;
        out.kind = ExplicitBoundary::Kind::sphere;
        out.dim = expr.dim();
        out.sphere = {b->center, b->radius};
        return out;
    }
    if (expr.dim() == 2)
        return extract_boundary_poly(expr, domain);
    throw InvalidInput("3-D boundary extraction supports raster and single-ball sets");
}

}  // namespace crofton

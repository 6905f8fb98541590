// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "exact_area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace crofton::detail
{
namespace
{
double cross2(Vec const& a, Vec const& b) { return a[0] * b[1] - a[1] * b[0]; }
double dot2(Vec const& a, Vec const& b) { return a[0] * b[0] + a[1] * b[1]; }

// Signed area of disk(0, r) intersected with the triangle (0, a, b).
double disk_triangle_area(Vec const& a, Vec const& b, double r)
{
    double const r2 = r * r;
    auto sector = [&](Vec const& u, Vec const& v) {
        return 0.5 * r2 * std::atan2(cross2(u, v), dot2(u, v));
    };
    double const aa = dot2(a, a);
    double const bb = dot2(b, b);
    if (aa <= r2 && bb <= r2)
        return 0.5 * cross2(a, b);

    Vec const d = b - a;
    double const qa = dot2(d, d);
    if (qa == 0)
        return 0;
    double const qb = dot2(a, d);
    double const qc = aa - r2;
    double const disc = qb * qb - qa * qc;
    if (disc <= 0)
        return sector(a, b);
    double const s = std::sqrt(disc);
    double const t1 = (-qb - s) / qa;
    double const t2 = (-qb + s) / qa;
    if (t2 <= 0 || t1 >= 1)
        return sector(a, b);
    Vec const p1 = a + std::max(t1, 0.0) * d;
    Vec const p2 = a + std::min(t2, 1.0) * d;
    return sector(a, p1) + 0.5 * cross2(p1, p2) + sector(p2, b);
}
}  // namespace

Polygon clip_polygon(Polygon const& poly, Vec const& normal, double offset)
{
    Polygon out;
    std::size_t const n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        Vec const& p = poly[i];
        Vec const& q = poly[(i + 1) % n];
        double const fp = dot(normal, p) - offset;
        double const fq = dot(normal, q) - offset;
        if (fp < 0)
            out.push_back(p);
        if ((fp < 0) != (fq < 0))
        {
            double const t = fp / (fp - fq);
            out.push_back(p + t * (q - p));
        }
    }
    return out.size() >= 3 ? out : Polygon{};
}

double polygon_area(Polygon const& poly)
{
    double a = 0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        a += cross2(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * a;
}

double disk_polygon_area(Vec const& center, double r, Polygon const& poly)
{
    double a = 0;
    std::size_t const n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        a += disk_triangle_area(poly[i] - center, poly[(i + 1) % n] - center, r);
    return std::max(a, 0.0);
}

double disk_lens_area(double r1, double r2, double d)
{
    if (d >= r1 + r2)
        return 0;
    double const rmin = std::min(r1, r2);
    if (d <= std::abs(r1 - r2))
        return std::numbers::pi * rmin * rmin;
    double const c1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2 * d * r1), -1.0, 1.0);
    double const c2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2 * d * r2), -1.0, 1.0);
    double const k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
    return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) - 0.5 * std::sqrt(std::max(k, 0.0));
}

double ball_lens_volume(double r1, double r2, double d)
{
    if (d >= r1 + r2)
        return 0;
    double const rmin = std::min(r1, r2);
    if (d <= std::abs(r1 - r2))
        return 4.0 / 3.0 * std::numbers::pi * rmin * rmin * rmin;
    double const w = r1 + r2 - d;
    return std::numbers::pi * w * w
           * (d * d + 2 * d * r2 - 3 * r2 * r2 + 2 * d * r1 + 6 * r1 * r2 - 3 * r1 * r1)
           / (12 * d);
}

double ball_halfspace_volume(double r, double s)
{
    double const full = 4.0 / 3.0 * std::numbers::pi * r * r * r;
    if (s >= r)
        return full;
    if (s <= -r)
        return 0;
    // The excluded cap has height r - s.
    double const h = r - s;
    return full - std::numbers::pi * h * h * (3 * r - h) / 3;
}

Polygon square(Vec const& lo, double side)
{
    return {lo, lo + make_vec(side, 0), lo + make_vec(side, side), lo + make_vec(0, side)};
}

}  // namespace crofton::detail

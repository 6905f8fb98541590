// Independent reference computations used by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace crofton::testing
{
//! Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
template<int N>
struct GaussLegendre
{
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussLegendre()
    {
        for (int i = 0; i < N; ++i)
        {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double dp = 0;
            for (int it = 0; it < 100; ++it)
            {
                double p0 = 1, p1 = z;
                for (int k = 2; k <= N; ++k)
                {
                    double const p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (z * p1 - p0) / (z * z - 1);
                double const dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16)
                    break;
            }
            x[i] = z;
            w[i] = 2 / ((1 - z * z) * dp * dp);
        }
    }

    template<class F>
    double integrate(F&& f, double a, double b) const
    {
        double s = 0;
        for (int i = 0; i < N; ++i)
            s += w[i] * f(0.5 * (a + b) + 0.5 * (b - a) * x[i]);
        return 0.5 * (b - a) * s;
    }
};

/*!
 * Area of the disk (xc, yc, r) intersected with [a,b] x [c,d].
 *
 * Substitutes x = xc + r sin(theta) so the integrand is smooth between the
 * breakpoints where the disk chord meets the rectangle's horizontal sides.
 */
inline double disk_rect_area(double xc, double yc, double r, double a, double b, double c,
                             double d)
{
    static GaussLegendre<20> const gl;
    double const ta = std::asin(std::clamp((a - xc) / r, -1.0, 1.0));
    double const tb = std::asin(std::clamp((b - xc) / r, -1.0, 1.0));
    if (tb <= ta)
        return 0;
    std::vector<double> cuts{ta, tb};
    for (double y : {c - yc, d - yc})
    {
        double const q = std::abs(y) / r;
        if (q < 1)
        {
            double const t = std::acos(q);
            for (double s : {-t, t})
                if (s > ta && s < tb)
                    cuts.push_back(s);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    auto g = [&](double t) {
        double const half = r * std::cos(t);
        double const len = std::min(d, yc + half) - std::max(c, yc - half);
        return std::max(len, 0.0) * half;
    };
    double total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += gl.integrate(g, cuts[i], cuts[i + 1]);
    return total;
}
}  // namespace crofton::testing

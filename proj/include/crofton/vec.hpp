// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace crofton
{
//---------------------------------------------------------------------------//
/*!
 * Point or vector in R^2 or R^3.
 *
 * Planar quantities keep the third component at zero, so the same arithmetic
 * serves both dimensions.
 */
struct Vec
{
    std::array<double, 3> c{0, 0, 0};

    constexpr double& operator[](int i) { return c[static_cast<unsigned>(i)]; }
    constexpr double operator[](int i) const
    {
        return c[static_cast<unsigned>(i)];
    }

    friend constexpr bool operator==(Vec const&, Vec const&) = default;
};

constexpr Vec make_vec(double x, double y, double z = 0) { return Vec{{x, y, z}}; }

constexpr Vec operator+(Vec const& a, Vec const& b)
{
    return Vec{{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
}
constexpr Vec operator-(Vec const& a, Vec const& b)
{
    return Vec{{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
}
constexpr Vec operator-(Vec const& a) { return Vec{{-a.c[0], -a.c[1], -a.c[2]}}; }
constexpr Vec operator*(double s, Vec const& a)
{
    return Vec{{s * a.c[0], s * a.c[1], s * a.c[2]}};
}
constexpr double dot(Vec const& a, Vec const& b)
{
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}
constexpr Vec cross(Vec const& a, Vec const& b)
{
    return Vec{{a.c[1] * b.c[2] - a.c[2] * b.c[1],
                a.c[2] * b.c[0] - a.c[0] * b.c[2],
                a.c[0] * b.c[1] - a.c[1] * b.c[0]}};
}
inline double norm(Vec const& a) { return std::sqrt(dot(a, a)); }
inline Vec normalized(Vec const& a) { return (1.0 / norm(a)) * a; }

//! Unit coordinate vector e_i (zero-based).
constexpr Vec unit_axis(int i)
{
    Vec v;
    v[i] = 1;
    return v;
}

//! Volume of the unit ball in R^n.
inline double unit_ball_volume(int n)
{
    switch (n)
    {
        case 0: return 1;
        case 1: return 2;
        case 2: return std::numbers::pi;
        case 3: return 4 * std::numbers::pi / 3;
        default:
            return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1);
    }
}

//! Area of the unit sphere S^{n-1} in R^n.
inline double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

//! Constant turning a mean over half-sphere directions into a Crofton
//! integral: A(n) / (2 V(n-1)).
inline double crofton_constant(int n)
{
    return unit_sphere_area(n) / (2 * unit_ball_volume(n - 1));
}

}  // namespace crofton

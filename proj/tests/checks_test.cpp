#include "crofton/checks.hpp"

#include <cmath>
#include <numbers>

#include "crofton/error.hpp"
#include "doctest.h"
#include "test_sets.hpp"

using namespace crofton;
using namespace crofton::testing;

namespace
{
GridParams with_h(double h)
{
    GridParams p;
    p.h = h;
    return p;
}
}  // namespace

TEST_CASE("projection identity examples")
{
    auto all = Domain::all_space(2);
    auto sq = check_projection_identity(unit_square(), all, make_vec(1, 0), with_h(1.0 / 4096));
    CHECK(sq.p_tau == doctest::Approx(2).epsilon(1e-3));
    CHECK(sq.gap_essential <= 1e-3);
    CHECK(sq.gap_preponderant <= 1e-3);
    CHECK(sq.excluded_parallel == 2);

    auto disk = check_projection_identity(unit_disk(), all, angle_dir(0.8), with_h(1.0 / 4096));
    CHECK(disk.p_tau == doctest::Approx(4).epsilon(5e-3));
    CHECK(disk.mu_essential == doctest::Approx(4).epsilon(5e-3));
    CHECK(disk.mu_preponderant == doctest::Approx(4).epsilon(5e-3));

    // L-shape: [0,2]x[0,1] union [0,1]x[1,2]. Along e2 every vertical line
    // crosses the boundary twice over a width of 2.
    auto ell = SetExpr::union_of({SetExpr::box(2, make_vec(0, 0), make_vec(2, 1)),
                                  SetExpr::box(2, make_vec(0, 1), make_vec(1, 2))});
    auto l = check_projection_identity(ell, all, make_vec(0, 1), with_h(1.0 / 2048));
    CHECK(l.p_tau == doctest::Approx(4).epsilon(1e-2));
    CHECK(l.gap_essential <= 1e-2);
    CHECK(l.gap_preponderant <= 1e-2);

    auto empty = check_projection_identity(SetExpr::empty_set(2), all, make_vec(1, 0), with_h(0.01));
    CHECK(empty.p_tau == 0);
    CHECK(empty.gap_essential == 0);
}

TEST_CASE("projection identity on rasters")
{
    auto g = checkerboard(16, 1.0 / 16, make_vec(0.1, -0.2));
    auto r = check_projection_identity(SetExpr::raster(g), Domain::all_space(2), angle_dir(0.6),
                                       with_h(1.0 / 1024));
    CHECK(r.gap_essential == 0);
    CHECK(r.gap_preponderant == 0);
}

TEST_CASE("finite variation probe")
{
    auto all = Domain::all_space(2);
    auto sq = check_finite_variation(unit_square(), all, {make_vec(1, 0), make_vec(0, 1)}, 64,
                                     with_h(1.0 / 1024));
    CHECK(sq.finite);
    CHECK(sq.directions[0].value == doctest::Approx(2).epsilon(1e-2));
    CHECK(sq.perimeter.value == doctest::Approx(4).epsilon(1e-2));

    auto disk = check_finite_variation(unit_disk(), all, {angle_dir(0.2), angle_dir(1.9)}, 64,
                                       with_h(1.0 / 1024));
    CHECK(disk.finite);

    CHECK_THROWS_AS(check_finite_variation(unit_square(), all, {make_vec(1, 0), make_vec(-1, 0)}, 8),
                    InvalidInput);
    CHECK_THROWS_AS(check_finite_variation(unit_square(), all, {make_vec(1, 0)}, 8), InvalidInput);
}

TEST_CASE("growth fit")
{
    std::vector<RefinementPoint> pts;
    for (int n : {8, 16, 32, 64})
        pts.push_back({1.0 / n, 3.0 * n});
    auto fit = fit_growth(pts);
    CHECK(fit.exponent == doctest::Approx(1.0));
    CHECK_FALSE(fit.stabilizing);

    auto flat = fit_growth({{0.1, 4.0}, {0.05, 4.01}, {0.025, 4.0}});
    CHECK(std::abs(flat.exponent) < 0.01);
    CHECK(flat.stabilizing);
    CHECK_THROWS_AS(fit_growth({{0.1, 1.0}}), InvalidInput);
}

TEST_CASE("integral identity")
{
    auto all = Domain::all_space(2);
    auto dirs = DirectionSet::uniform(2, 90);
    auto sq = check_integral_identity(unit_square(), all, dirs, with_h(1.0 / 2048));
    CHECK(sq.gap <= 1e-2);
    CHECK(sq.perimeter == doctest::Approx(4).epsilon(1e-2));
    auto disk = check_integral_identity(unit_disk(), all, dirs, with_h(1.0 / 2048));
    CHECK(disk.gap <= 1e-2);
    auto two = SetExpr::union_of({unit_square(), SetExpr::box(2, make_vec(3, 0), make_vec(4, 1))});
    auto t = check_integral_identity(two, all, dirs, with_h(1.0 / 1024));
    CHECK(t.perimeter == doctest::Approx(8).epsilon(1e-2));
    CHECK(t.gap <= 1e-2);
}

#include "crofton/set_expr.hpp"

#include <limits>
#include <random>

#include "crofton/error.hpp"
#include "doctest.h"
#include "test_sets.hpp"

using namespace crofton;
using namespace crofton::testing;

namespace
{
Line horizontal(double y) { return Line::through(make_vec(0, y), make_vec(1, 0)); }

// Dense pointwise sampling of the trace on [lo, hi]; returns run boundaries.
std::vector<Interval> sampled_runs(SetExpr const& a, Line const& l, double lo, double hi, int n)
{
    std::vector<Interval> runs;
    double const dt = (hi - lo) / n;
    bool in = false;
    double start = 0;
    for (int i = 0; i < n; ++i)
    {
        double const t = lo + (i + 0.5) * dt;
        bool const c = contains(a, l.at(t));
        if (c && !in)
            start = t;
        if (!c && in)
            runs.push_back({start, t});
        in = c;
    }
    if (in)
        runs.push_back({start, hi});
    return runs;
}
}  // namespace

TEST_CASE("contains examples")
{
    CHECK(contains(unit_disk(), make_vec(0, 0)));
    CHECK_FALSE(contains(unit_square(), make_vec(1, 0.5)));
    CHECK(contains(unit_square(), make_vec(0, 0.5)));
    auto u = SetExpr::union_of({unit_disk(), SetExpr::box(2, make_vec(2, 2), make_vec(3, 3))});
    CHECK(contains(u, make_vec(2.5, 2.5)));
    CHECK_FALSE(contains(SetExpr::complement(unit_disk()), make_vec(0, 0)));
    CHECK_FALSE(contains(SetExpr::empty_set(2), make_vec(0, 0)));
}

TEST_CASE("constructors validate")
{
    CHECK_THROWS_AS(SetExpr::ball(2, make_vec(0, 0), 0.0), InvalidInput);
    CHECK_THROWS_AS(SetExpr::box(2, make_vec(0, 0), make_vec(1, 0)), InvalidInput);
    CHECK_THROWS_AS(SetExpr::half_space(2, make_vec(1, 1), 0.0), InvalidInput);
    CHECK_THROWS_AS(SetExpr::ball(2, make_vec(0, 0, 1), 1.0), InvalidInput);
    CHECK_THROWS_AS(RasterGrid(2, {}, 1.0, {2, 2, 1}, {1, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(RasterGrid(2, {}, 1.0, {2, 1, 1}, {1, 2}), InvalidInput);
    CHECK_THROWS_AS(Line::make(make_vec(1, 1), {}), InvalidInput);
    CHECK_THROWS_AS(Line::make(make_vec(1, 0), make_vec(1, 1)), InvalidInput);
    CHECK_THROWS_AS(Domain::open_box(2, make_vec(0, 0), make_vec(0, 1)), InvalidInput);
    CHECK_THROWS_AS(SetExpr::union_of({unit_disk(), SetExpr::ball(3, {}, 1.0)}), InvalidInput);
}

TEST_CASE("trace examples")
{
    CHECK(trace(unit_disk(), Line::make(make_vec(1, 0), {})) == IntervalSet::single(-1, 1));
    CHECK(trace(unit_square(), horizontal(0.5)) == IntervalSet::single(0, 1));

    auto diff = SetExpr::difference(SetExpr::box(2, make_vec(0, 0), make_vec(3, 1)),
                                    SetExpr::box(2, make_vec(1, 0), make_vec(2, 1)));
    auto tr = trace(diff, horizontal(0.5));
    REQUIRE(tr.size() == 2);
    CHECK(tr[0] == Interval{0, 1});
    CHECK(tr[1] == Interval{2, 3});

    // Oracle: 10^6 evenly spaced membership samples.
    auto runs = sampled_runs(diff, horizontal(0.5), -1, 4, 1000000);
    REQUIRE(runs.size() == 2);
    double const dt = 5.0 / 1000000;
    for (std::size_t i = 0; i < 2; ++i)
    {
        CHECK(std::abs(runs[i].lo - tr[i].lo) <= dt);
        CHECK(std::abs(runs[i].hi - tr[i].hi) <= dt);
    }
}

TEST_CASE("tangent and degenerate lines give empty traces")
{
    CHECK(trace(unit_disk(), horizontal(1.0)).empty());
    auto half = SetExpr::half_space(2, make_vec(0, 1), 0.0);
    CHECK(trace(half, horizontal(0.0)).empty());
    CHECK(trace(half, horizontal(-0.1)) == IntervalSet::whole_line());
    CHECK(trace(SetExpr::complement(half), horizontal(0.0)) == IntervalSet::whole_line());
}

TEST_CASE("domain traces are open")
{
    auto omega = Domain::open_box(2, make_vec(-0.5, -2), make_vec(0.5, 2));
    CHECK(omega.trace(Line::make(make_vec(0, 1), {})) == IntervalSet::single(-2, 2));
    CHECK(omega.trace(horizontal(2.0)).empty());
    CHECK(Domain::all_space(2).trace(horizontal(3)) == IntervalSet::whole_line());
}

TEST_CASE("bounding box examples")
{
    auto b = bounding_box(SetExpr::ball(2, make_vec(1, 2), 0.5));
    REQUIRE(b.is_finite());
    CHECK(b.lo == make_vec(0.5, 1.5));
    CHECK(b.hi == make_vec(1.5, 2.5));

    auto u = bounding_box(SetExpr::union_of(
        {unit_square(), SetExpr::box(2, make_vec(2, 2), make_vec(3, 3))}));
    REQUIRE(u.is_finite());
    CHECK(u.lo == make_vec(0, 0));
    CHECK(u.hi == make_vec(3, 3));

    CHECK(bounding_box(SetExpr::complement(unit_disk())).is_unbounded());
    CHECK(bounding_box(SetExpr::complement(SetExpr::complement(unit_disk()))).is_finite());
    CHECK(bounding_box(SetExpr::empty_set(2)).is_empty());

    auto hb = bounding_box(
        SetExpr::intersection_of({SetExpr::half_space(2, make_vec(1, 0), 0.5), unit_square()}));
    REQUIRE(hb.is_finite());
    CHECK(hb.hi == make_vec(1, 1));

    // The boundary of a complement is bounded even though the set is not.
    auto bb = boundary_bounds(SetExpr::complement(unit_disk()));
    REQUIRE(bb.is_finite());
    CHECK(bb.lo == make_vec(-1, -1));
    auto sph = boundary_sphere(SetExpr::complement(unit_disk()));
    REQUIRE(sph);
    CHECK(sph->radius == 1);
}

TEST_CASE("trace is a boolean homomorphism")
{
    auto sets = assorted_sets_2d();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(0, std::numbers::pi);
    std::uniform_real_distribution<double> off(-2, 3);
    for (std::size_t i = 0; i < sets.size(); ++i)
    {
        for (std::size_t j = 0; j < sets.size(); ++j)
        {
            auto const& a = sets[i];
            auto const& b = sets[j];
            for (int k = 0; k < 5; ++k)
            {
                Line l = Line::through(make_vec(off(rng), off(rng)), angle_dir(ang(rng)));
                auto ta = trace(a, l);
                auto tb = trace(b, l);
                CHECK(trace(SetExpr::union_of({a, b}), l) == unite(ta, tb));
                CHECK(trace(SetExpr::intersection_of({a, b}), l) == intersect(ta, tb));
                CHECK(trace(SetExpr::difference(a, b), l) == subtract(ta, tb));
            }
        }
    }
}

TEST_CASE("trace measure is bounded by the box diameter")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ang(0, std::numbers::pi);
    std::uniform_real_distribution<double> off(-2, 3);
    for (auto const& a : assorted_sets_2d())
    {
        auto bb = bounding_box(a);
        if (!bb.is_finite())
            continue;
        for (int k = 0; k < 200; ++k)
        {
            Line l = Line::through(make_vec(off(rng), off(rng)), angle_dir(ang(rng)));
            CHECK(trace(a, l).measure() <= bb.diameter() * (1 + 1e-12));
        }
    }
}

TEST_CASE("contains and trace agree away from endpoints")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> off(-1.5, 3);
    std::uniform_real_distribution<double> par(-4, 4);
    for (auto const& a : assorted_sets_2d())
    {
        int checked = 0;
        for (int k = 0; k < 1000; ++k)
        {
            Line l = Line::through(make_vec(off(rng), off(rng)), angle_dir(ang(rng)));
            double const t = par(rng);
            auto tr = trace(a, l);
            bool near = false;
            for (auto iv : tr.intervals())
                near = near || std::abs(iv.lo - t) <= 1e-9 || std::abs(iv.hi - t) <= 1e-9;
            if (near)
                continue;
            ++checked;
            CHECK(contains(a, l.at(t)) == tr.contains(t));
        }
        CHECK(checked > 990);
    }
}

TEST_CASE("contains and trace agree in 3-D")
{
    std::mt19937_64 rng(17);
    auto grid = random_raster(rng, 3, 6, 0.25, 0.4, make_vec(-0.7, -0.6, -0.75));
    auto a = SetExpr::union_of({SetExpr::raster(grid), SetExpr::ball(3, make_vec(0.5, 0, 0), 0.6)});
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> par(-3, 3);
    for (int k = 0; k < 1000; ++k)
    {
        Vec dir = normalized(make_vec(g(rng), g(rng), g(rng)));
        Line l = Line::through(make_vec(g(rng), g(rng), g(rng)), dir);
        double const t = par(rng);
        auto tr = trace(a, l);
        bool near = false;
        for (auto iv : tr.intervals())
            near = near || std::abs(iv.lo - t) <= 1e-9 || std::abs(iv.hi - t) <= 1e-9;
        if (!near)
            CHECK(contains(a, l.at(t)) == tr.contains(t));
    }
}

TEST_CASE("raster traces along grid lines recover the volume")
{
    std::mt19937_64 rng(19);
    for (int dim : {2, 3})
    {
        double const s = 0.3;
        auto grid = random_raster(rng, dim, 9, s, 0.5, make_vec(0.1, -0.2, dim == 3 ? 0.4 : 0));
        auto expr = SetExpr::raster(grid);
        double total = 0;
        int const nk = dim == 3 ? 9 : 1;
        for (int j = 0; j < 9; ++j)
        {
            for (int k = 0; k < nk; ++k)
            {
                Vec c = grid.cell_center({0, j, k});
                Line l = Line::through(c, make_vec(1, 0));
                total += trace(expr, l).measure() * std::pow(s, dim - 1);
            }
        }
        CHECK(total == doctest::Approx(grid.occupied_count() * std::pow(s, dim)).epsilon(1e-12));
    }
}

TEST_CASE("raster traversal handles lines through cell corners")
{
    // 2x2 diagonal pattern; the main diagonal passes exactly through the shared corner.
    RasterGrid g(2, {}, 1.0, {2, 2, 1}, {1, 0, 0, 1});
    auto expr = SetExpr::raster(g);
    Line l = Line::through(make_vec(0, 0), normalized(make_vec(1, 1)));
    auto tr = trace(expr, l);
    REQUIRE(tr.size() == 1);
    CHECK(tr.measure() == doctest::Approx(2 * std::sqrt(2.0)));
    // Anti-diagonal crosses only empty cells.
    Line m = Line::through(make_vec(0, 2), normalized(make_vec(1, -1)));
    CHECK(trace(expr, m).measure() == doctest::Approx(0).epsilon(1e-9));
}

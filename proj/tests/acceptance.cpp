// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "crofton/boundary.hpp"
#include "crofton/checks.hpp"
#include "crofton/density.hpp"
#include "crofton/integral.hpp"
#include "crofton/scene.hpp"
#include "test_sets.hpp"

namespace fs = std::filesystem;
using namespace crofton;
using namespace crofton::testing;

namespace
{
constexpr double pi = std::numbers::pi;

struct Outcome
{
    bool pass;
    std::string detail;
};

std::string fmt(char const* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

GridParams with_h(double h)
{
    GridParams p;
    p.h = h;
    return p;
}

Domain const plane = Domain::all_space(2);

std::vector<Scene> builtin_corpus()
{
    std::vector<fs::path> files;
    for (auto const& e : fs::directory_iterator(CROFTON_CORPUS_DIR))
    {
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<Scene> out;
    for (auto const& f : files)
        out.push_back(load_scene(f));
    return out;
}

//---------------------------------------------------------------------------//
// Polygon corpus
//---------------------------------------------------------------------------//
SetExpr random_convex_polygon(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0, 1);
    int const k = 3 + static_cast<int>(u(rng) * 6);
    double const r = 0.5 + u(rng);
    Vec const c = make_vec(u(rng) * 2 - 1, u(rng) * 2 - 1);
    std::vector<double> angles;
    for (int i = 0; i < k; ++i)
        angles.push_back(u(rng) * 2 * pi);
    std::sort(angles.begin(), angles.end());
    std::vector<Vec> v;
    for (double a : angles)
        v.push_back(c + r * make_vec(std::cos(a), std::sin(a)));
    std::vector<SetExpr> parts;
    for (int i = 0; i < k; ++i)
    {
        Vec const p = v[static_cast<std::size_t>(i)];
        Vec const q = v[static_cast<std::size_t>((i + 1) % k)];
        Vec const edge = q - p;
        if (norm(edge) < 1e-6)
            continue;
        Vec const n = normalized(make_vec(edge[1], -edge[0]));  // outward for ccw order
        parts.push_back(SetExpr::half_space(2, n, dot(n, p)));
    }
    Vec const pad = make_vec(r + 0.25, r + 0.25);
    parts.push_back(SetExpr::box(2, c - pad, c + pad));
    return SetExpr::intersection_of(std::move(parts));
}

SetExpr random_rectilinear_with_holes(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0, 1);
    auto box = [&](double x0, double y0, double w, double h) {
        return SetExpr::box(2, make_vec(x0, y0), make_vec(x0 + w, y0 + h));
    };
    double const w0 = 1.5 + u(rng), h0 = 1.5 + u(rng);
    std::vector<SetExpr> outer{box(0, 0, w0, h0)};
    int const extra = 1 + static_cast<int>(u(rng) * 2);
    for (int i = 0; i < extra; ++i)
        outer.push_back(box(u(rng) * w0, u(rng) * h0, 0.5 + u(rng), 0.5 + u(rng)));
    std::vector<SetExpr> holes;
    int const nh = 1 + static_cast<int>(u(rng) * 2);
    for (int i = 0; i < nh; ++i)
    {
        double const hw = 0.1 + 0.3 * u(rng), hh = 0.1 + 0.3 * u(rng);
        holes.push_back(box(0.1 + u(rng) * (w0 - hw - 0.2), 0.1 + u(rng) * (h0 - hh - 0.2), hw, hh));
    }
    return SetExpr::difference(SetExpr::union_of(std::move(outer)),
                               SetExpr::union_of(std::move(holes)));
}

std::vector<SetExpr> const& polygon_corpus()
{
    static std::vector<SetExpr> const sets = [] {
        std::mt19937_64 rng(2024);
        std::vector<SetExpr> out;
        for (int i = 0; i < 20; ++i)
            out.push_back(random_convex_polygon(rng));
        for (int i = 0; i < 10; ++i)
            out.push_back(random_rectilinear_with_holes(rng));
        return out;
    }();
    return sets;
}

std::vector<Vec> eight_directions()
{
    std::vector<Vec> out;
    for (int k = 0; k < 8; ++k)
    {
        if (k == 0)
            out.push_back(make_vec(1, 0));
        else if (k == 4)
            out.push_back(make_vec(0, 1));
        else
            out.push_back(make_vec(std::cos(k * pi / 8), std::sin(k * pi / 8)));
    }
    return out;
}

//---------------------------------------------------------------------------//
// Criteria
//---------------------------------------------------------------------------//
Outcome aligned_grid_equality()
{
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> size(16, 128);
    double worst = 0;
    for (int i = 0; i < 10; ++i)
    {
        int const n = size(rng);
        auto g = random_raster(rng, 2, n, 1.0 / n, 0.5, make_vec(-0.5, 0.25));
        SetExpr const a = SetExpr::raster(g);
        for (int axis = 0; axis < 2; ++axis)
        {
            double const exact = axis_variation_exact(g, axis).value;
            double const est = directional_variation(a, plane, aligned_grid(g, axis)).value;
            worst = std::max(worst, relative_gap(est, exact));
        }
    }
    return {worst <= 1e-12, "max relative gap " + fmt("%.3g", worst)};
}

Outcome crofton_perimeter_accuracy()
{
    auto disk = crofton_perimeter(unit_disk(), plane, DirectionSet::uniform(2, 360),
                                  with_h(1.0 / 4096));
    auto square = crofton_perimeter(unit_square(), plane, DirectionSet::uniform(2, 720));
    auto ball = crofton_perimeter(SetExpr::ball(3, Vec{}, 1.0), Domain::all_space(3),
                                  DirectionSet::uniform(3, 512), with_h(1.0 / 512));
    double const gd = relative_gap(disk.value, 2 * pi);
    double const gs = relative_gap(square.value, 4);
    double const gb = relative_gap(ball.value, 4 * pi);
    return {gd <= 5e-3 && gs <= 1e-3 && gb <= 1e-2,
            "disk " + fmt("%.3g", gd) + ", square " + fmt("%.3g", gs) + ", ball " + fmt("%.3g", gb)};
}

Outcome projection_identity()
{
    double worst_e = 0, worst_pr = 0;
    for (auto const& s : polygon_corpus())
    {
        for (Vec const& tau : eight_directions())
        {
            auto r = check_projection_identity(s, plane, tau);
            worst_e = std::max(worst_e, r.gap_essential);
            worst_pr = std::max(worst_pr, r.gap_preponderant);
        }
    }
    return {worst_e <= 1e-2 && worst_pr <= 1e-2,
            "max gap essential " + fmt("%.3g", worst_e) + ", preponderant "
                + fmt("%.3g", worst_pr)};
}

Outcome integral_identity()
{
    double worst = 0;
    for (auto const& s : polygon_corpus())
        worst = std::max(worst,
                         check_integral_identity(s, plane, DirectionSet::uniform(2, 180)).gap);
    return {worst <= 1e-2, "max gap " + fmt("%.3g", worst)};
}

Outcome finiteness_probe()
{
    std::vector<Vec> const axes{make_vec(1, 0), make_vec(0, 1)};
    bool const square = check_finite_variation(unit_square(), plane, axes, 64).finite;
    bool const disk = check_finite_variation(unit_disk(), plane, axes, 64).finite;

    std::vector<RefinementPoint> measured, exact;
    for (int n : {8, 16, 32, 64, 128})
    {
        auto g = checkerboard(n, 1.0 / n);
        exact.push_back({g.spacing(), axis_variation_exact(g, 0).value
                                          + axis_variation_exact(g, 1).value});
        measured.push_back({g.spacing(), crofton_perimeter(SetExpr::raster(g), plane,
                                                           DirectionSet::uniform(2, 64),
                                                           with_h(g.spacing() / 8))
                                             .value});
    }
    auto const fm = fit_growth(measured);
    auto const fe = fit_growth(exact);
    double const gap = relative_gap(fm.exponent, fe.exponent);
    return {square && disk && !fm.stabilizing && gap <= 0.1,
            std::string("square ") + (square ? "stable" : "unstable") + ", disk "
                + (disk ? "stable" : "unstable") + ", checkerboard exponent "
                + fmt("%.4f", fm.exponent) + " vs " + fmt("%.4f", fe.exponent)
                + (fm.stabilizing ? " (stabilizing)" : " (divergent)")};
}

Outcome voxel_identity()
{
    std::mt19937_64 rng(202);
    bool exact_ok = true;
    double worst = 0;
    for (int i = 0; i < 20; ++i)
    {
        int const dim = i < 15 ? 2 : 3;
        int const n = dim == 2 ? 32 : 8;
        auto g = random_raster(rng, dim, n, 1.0 / n, 0.5);
        auto faces = extract_boundary_voxel(g);
        auto const counts = faces.face_counts();
        std::uint64_t total = 0;
        for (int axis = 0; axis < dim; ++axis)
        {
            auto const c = axis_variation_exact(g, axis).count;
            exact_ok = exact_ok && c == counts[static_cast<std::size_t>(axis)];
            total += c;
        }
        exact_ok = exact_ok && total == faces.faces.size();
        double const area = static_cast<double>(total) * std::pow(g.spacing(), dim - 1);
        auto p = dim == 2 ? crofton_perimeter(SetExpr::raster(g), plane,
                                              DirectionSet::uniform(2, 64), with_h(1.0 / 4096))
                          : crofton_perimeter(SetExpr::raster(g), Domain::all_space(3),
                                              DirectionSet::uniform(3, 256));
        worst = std::max(worst, relative_gap(p.value, area));
    }
    return {exact_ok && worst <= 1.5e-2,
            std::string("face counts ") + (exact_ok ? "exact" : "mismatch")
                + ", max perimeter gap " + fmt("%.3g", worst)};
}

Outcome density_exactness()
{
    RadiusSchedule const sched;
    auto half = SetExpr::half_space(2, normalized(make_vec(1, 2)), 0.4);
    Vec const on_line = 0.4 * normalized(make_vec(1, 2));
    auto h = estimate_density(half, on_line, sched);
    auto c = estimate_density(unit_square(), make_vec(0, 0), sched);
    double const gh = std::max(std::abs(h.upper - 0.5), std::abs(h.lower - 0.5));
    double const gc = std::max(std::abs(c.upper - 0.25), std::abs(c.lower - 0.25));
    bool const exact_ok = h.method == FractionMethod::exact && c.method == FractionMethod::exact
                          && gh <= 1e-9 && gc <= 1e-9;

    std::mt19937_64 rng(303);
    auto const sets = assorted_sets_2d();
    std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
    std::uniform_real_distribution<double> pos(-0.5, 2.5), rad(0.05, 1.0);
    FractionOptions quad;
    quad.mode = FractionOptions::Mode::quadrature;
    int compared = 0, agree = 0;
    for (int attempt = 0; attempt < 10000 && compared < 100; ++attempt)
    {
        auto const& s = sets[pick(rng)];
        Vec const x = make_vec(pos(rng), pos(rng));
        double const r = rad(rng);
        auto e = ball_volume_fraction(s, x, r);
        if (e.method != FractionMethod::exact)
            continue;
        auto q = ball_volume_fraction(s, x, r, quad);
        ++compared;
        agree += std::abs(q.fraction - e.fraction) <= q.error_bound + e.error_bound;
    }
    return {exact_ok && compared == 100 && agree == compared,
            "half-plane " + fmt("%.3g", gh) + ", corner " + fmt("%.3g", gc) + ", quadrature "
                + std::to_string(agree) + "/" + std::to_string(compared) + " within bound"};
}

Outcome notion_separation()
{
    RadiusSchedule const sched;
    auto ess = classify_point(unit_square(), make_vec(0, 0), BoundaryNotion::essential(), sched);
    auto pre = classify_point(unit_square(), make_vec(0, 0), BoundaryNotion::preponderant(), sched);
    auto min_margin = [](BoundaryLabel const& l) {
        return std::min(std::abs(l.margins.margin_a), std::abs(l.margins.margin_c));
    };
    bool const corner_ok = ess.verdict == Verdict::on_boundary
                           && pre.verdict == Verdict::interior_complement
                           && min_margin(ess) >= 0.2 && min_margin(pre) >= 0.2;

    // Shorter schedule keeps 10^3 points per set affordable; the implications
    // are properties of the thresholds, not of the radii.
    RadiusSchedule const fast{1.0, 0.5, 8, 4};
    double const tol = 1e-2;
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0, 1);
    std::size_t points = 0, violations = 0;
    auto const corpus = builtin_corpus();
    for (auto const& scene : corpus)
    {
        Window w = integration_window(scene.set, scene.domain);
        Bounds box = w.box;
        if (w.sphere && w.sphere->radius >= 0)
        {
            Vec r;
            for (int k = 0; k < scene.dim; ++k)
                r[k] = w.sphere->radius;
            box = overlap(box, Bounds::box(w.sphere->center - r, w.sphere->center + r), scene.dim);
        }
        if (!box.is_finite())
            box = Bounds::box(make_vec(-1, -1, -1), make_vec(1, 1, 1));
        for (int i = 0; i < 1000; ++i)
        {
            Vec x;
            for (int k = 0; k < scene.dim; ++k)
            {
                double const pad = 0.1 * (box.hi[k] - box.lo[k]) + 1e-3;
                x[k] = box.lo[k] - pad + u(rng) * (box.hi[k] - box.lo[k] + 2 * pad);
            }
            auto [da, dc] = density_pair(scene.set, x, fast);
            auto e = classify_densities(da, dc, BoundaryNotion::essential(), tol);
            auto p = classify_densities(da, dc, BoundaryNotion::preponderant(), tol);
            auto s = classify_densities(da, dc, BoundaryNotion::strong(0.25), tol);
            bool ok = true;
            if (p.verdict == Verdict::on_boundary || s.verdict == Verdict::on_boundary)
                ok = ok && e.verdict == Verdict::on_boundary;
            if (e.verdict == Verdict::interior_a)
                ok = ok && p.verdict == Verdict::interior_a;
            if (e.verdict == Verdict::interior_complement)
                ok = ok && p.verdict == Verdict::interior_complement;
            ++points;
            violations += !ok;
        }
    }
    return {corner_ok && violations == 0,
            "corner essential " + std::string(to_string(ess.verdict)) + " (margin "
                + fmt("%.3g", min_margin(ess)) + "), preponderant "
                + std::string(to_string(pre.verdict)) + " (margin " + fmt("%.3g", min_margin(pre))
                + "); " + std::to_string(violations) + " implication violations at "
                + std::to_string(points) + " points over " + std::to_string(corpus.size())
                + " sets"};
}

IntervalSet perturbed(IntervalSet const& s, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Interval> raw;
    for (auto const& iv : s.intervals())
    {
        if (std::isfinite(iv.lo) && std::isfinite(iv.hi))
        {
            // Split into touching pieces and add a contained copy.
            double const m = iv.lo + u(rng) * (iv.hi - iv.lo);
            raw.push_back({m, iv.hi});
            raw.push_back({iv.lo, m});
            raw.push_back({m, m});
            raw.push_back({iv.lo + 0.25 * (m - iv.lo), m});
        }
        else
        {
            raw.push_back(iv);
        }
        raw.push_back({iv.lo, iv.lo});
    }
    double const p = u(rng) * 10 - 5;
    raw.push_back({p, p});
    raw.push_back({p + 1, p + 1 - 1e-3});
    std::shuffle(raw.begin(), raw.end(), rng);
    return IntervalSet::canonicalize(raw);
}

Outcome null_insensitivity()
{
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> u(-1, 1);
    std::size_t lines = 0, mismatches = 0;
    for (auto const& scene : builtin_corpus())
    {
        for (int i = 0; i < 200; ++i)
        {
            Vec p, d;
            for (int k = 0; k < scene.dim; ++k)
            {
                p[k] = 2 * u(rng);
                d[k] = u(rng);
            }
            if (i % 4 == 0)
            {
                for (int k = 0; k < scene.dim; ++k)
                    d[k] = k == i % scene.dim ? 1 : 0;
            }
            if (norm(d) < 1e-3)
                continue;
            Line const line = Line::through(p, normalized(d));
            auto const direct = hits_on_line(scene.set, scene.domain, line);
            auto const ta = trace(scene.set, line);
            auto const to = scene.domain.trace(line);
            auto const pa = perturbed(ta, rng);
            auto const po = perturbed(to, rng);
            auto const again = hits_from_traces(line, pa, po);
            ++lines;
            mismatches += !(pa == ta && po == to && again.hits == direct.hits
                            && again.saturated == direct.saturated);
        }
    }
    return {mismatches == 0,
            std::to_string(mismatches) + " mismatches over " + std::to_string(lines) + " lines"};
}

int run_cli(std::string const& env, fs::path const& out)
{
    std::string const cmd = env + " '" CROFTON_CLI "' verify --out '" + out.string()
                            + "' >/dev/null 2>&1";
    int const status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(fs::path const& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Outcome determinism()
{
    fs::path const dir = fs::temp_directory_path();
    fs::path const one = dir / "crofton_verify_t1.csv";
    fs::path const eight = dir / "crofton_verify_t8.csv";
    int const c1 = run_cli("CROFTON_THREADS=1", one);
    int const c8 = run_cli("CROFTON_THREADS=8", eight);
    std::string const a = slurp(one), b = slurp(eight);
    bool const same = !a.empty() && a == b;
    return {same && c1 == c8 && c1 == 0,
            "exit codes " + std::to_string(c1) + "/" + std::to_string(c8) + ", "
                + std::to_string(a.size()) + " bytes, " + (same ? "identical" : "different")};
}
}  // namespace

int main()
{
    struct Criterion
    {
        char const* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> const criteria{
        {"aligned-grid variation equals face count", aligned_grid_equality},
        {"crofton perimeter of disk, square, ball", crofton_perimeter_accuracy},
        {"projection identity on polygon corpus", projection_identity},
        {"integral identity on polygon corpus", integral_identity},
        {"finiteness probe and checkerboard growth", finiteness_probe},
        {"voxel face-count identity", voxel_identity},
        {"density exactness and quadrature bound", density_exactness},
        {"boundary notion separation and implications", notion_separation},
        {"null-insensitivity of hits", null_insensitivity},
        {"determinism across worker counts", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        auto const start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try
        {
            o = criteria[i].run();
        }
        catch (std::exception const& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        double const secs
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("criterion %zu: %s  %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                    criteria[i].name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}

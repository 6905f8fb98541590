// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include "crofton/boundary.hpp"
#include "crofton/checks.hpp"
#include "crofton/error.hpp"
#include "crofton/integral.hpp"
#include "crofton/raster_io.hpp"
#include "crofton/scene.hpp"
#include "report.hpp"

namespace crofton::cli
{
namespace
{
//---------------------------------------------------------------------------//
// Inputs and options
//---------------------------------------------------------------------------//
struct Input
{
    std::string name;
    SetExpr set;
    Domain domain;
    std::optional<Scene> scene;
    std::shared_ptr<RasterGrid const> grid;

    int dim() const { return set.dim(); }
};

Input load_input(RunConfig const& cfg)
{
    if (cfg.scene && cfg.raster)
        throw InvalidInput("--scene and --raster are mutually exclusive");
    if (cfg.scene)
    {
        Scene s = load_scene(*cfg.scene);
        Input in{s.name, s.set, s.domain, s, nullptr};
        if (auto const* r = s.set.as<node::Raster>())
            in.grid = r->grid;
        return in;
    }
    if (cfg.raster)
    {
        auto grid = std::make_shared<RasterGrid const>(to_grid(read_rset_file(*cfg.raster)));
        return {cfg.raster->stem().string(), SetExpr::raster(grid),
                Domain::all_space(grid->dim()), std::nullopt, grid};
    }
    throw InvalidInput("an input is required: --scene PATH or --raster PATH");
}

Vec parse_vec(std::string const& text, int dim, std::string const& flag)
{
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        std::size_t used = 0;
        double v = 0;
        try
        {
            v = std::stod(item, &used);
        }
        catch (std::exception const&)
        {
            used = 0;
        }
        if (used == 0 || used != item.size() || !std::isfinite(v))
            throw InvalidInput(flag + ": bad number '" + item + "'");
        parts.push_back(v);
    }
    if (static_cast<int>(parts.size()) != dim)
    {
        throw InvalidInput(flag + " has " + std::to_string(parts.size())
                           + " components but the input is " + std::to_string(dim)
                           + "-dimensional");
    }
    Vec out;
    for (int k = 0; k < dim; ++k)
        out[k] = parts[static_cast<std::size_t>(k)];
    return out;
}

Vec parse_direction(std::string const& text, int dim)
{
    Vec v = parse_vec(text, dim, "--tau");
    if (!(norm(v) > 0))
        throw InvalidInput("--tau must be nonzero");
    return normalized(v);
}

GridParams grid_params(RunConfig const& cfg, std::optional<Scene> const& scene)
{
    GridParams p;
    if (cfg.h)
        p.h = cfg.h;
    else if (scene && scene->params.h)
        p.h = scene->params.h;
    if (p.h && !(*p.h > 0))
        throw InvalidInput("--h must be positive");
    if (cfg.max_hits)
        p.max_hits = *cfg.max_hits;
    else if (scene && scene->params.max_hits)
        p.max_hits = *scene->params.max_hits;
    if (p.max_hits < 2)
        throw InvalidInput("--max-hits must be at least 2");
    return p;
}

int direction_count(RunConfig const& cfg, std::optional<Scene> const& scene, int dim,
                    int default2, int default3)
{
    int k = dim == 2 ? default2 : default3;
    if (cfg.directions)
        k = *cfg.directions;
    else if (scene && scene->params.directions)
        k = *scene->params.directions;
    if (k < 1)
        throw InvalidInput("--K must be positive");
    return k;
}

RadiusSchedule schedule(RunConfig const& cfg, RadiusSchedule base)
{
    if (cfg.r0)
        base.r0 = *cfg.r0;
    if (cfg.ratio)
        base.ratio = *cfg.ratio;
    if (cfg.count)
        base.count = *cfg.count;
    if (cfg.window)
        base.window = *cfg.window;
    else if (cfg.count)
        base.window = std::min(base.window, base.count);
    base.validate();
    return base;
}

FractionOptions fraction_options(RunConfig const& cfg)
{
    FractionOptions o;
    o.seed = cfg.seed;
    if (cfg.method == "auto")
        o.mode = FractionOptions::Mode::automatic;
    else if (cfg.method == "quadrature")
        o.mode = FractionOptions::Mode::quadrature;
    else if (cfg.method == "montecarlo")
        o.mode = FractionOptions::Mode::montecarlo;
    else
        throw InvalidInput("--method must be auto, quadrature or montecarlo");
    return o;
}

void emit(Table const& table, RunConfig const& cfg)
{
    if (cfg.format != "csv" && cfg.format != "json")
        throw InvalidInput("--format must be csv or json");
    auto write = [&](std::ostream& os) {
        if (cfg.format == "csv")
            table.write_csv(os);
        else
            table.write_json(os);
    };
    if (!cfg.out)
    {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(*cfg.out, std::ios::binary);
    if (!os)
        throw InvalidInput("cannot open output file " + cfg.out->string());
    write(os);
    if (!os)
        throw InvalidInput("failed writing " + cfg.out->string());
}

Cell opt(double v, bool present) { return present ? Cell{v} : Cell{}; }

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

//---------------------------------------------------------------------------//
// Variation reports
//---------------------------------------------------------------------------//
Table report_table()
{
    return Table{{"case", "quantity", "value", "error_bound", "h", "directions", "max_hits",
                  "lines", "count", "saturated", "excluded_parallel", "constant", "tau_x",
                  "tau_y", "tau_z"},
                 {},
                 {}};
}

void add_report(Table& t, std::string const& name, VariationReport const& r, int dim)
{
    bool const has_tau = r.directions == 1 && norm(r.tau) > 0;
    t.add({name, std::string(to_string(r.quantity)), r.value, r.error_bound, r.h,
           std::int64_t{r.directions}, std::int64_t{r.max_hits}, as_int(r.lines), as_int(r.count),
           r.saturated, as_int(r.excluded_parallel), r.constant, opt(r.tau[0], has_tau),
           opt(r.tau[1], has_tau), opt(r.tau[2], has_tau && dim == 3)});
}

//---------------------------------------------------------------------------//
// Verification rows
//---------------------------------------------------------------------------//
Table verify_table()
{
    return Table{{"case", "check", "tau_x", "tau_y", "tau_z", "lhs", "rhs", "rhs_alt", "gap",
                  "tolerance", "note", "status"},
                 {},
                 {}};
}

std::vector<Vec> default_check_directions(int dim)
{
    std::vector<Vec> out;
    if (dim == 2)
    {
        for (int k = 0; k < 8; ++k)
        {
            double const theta = std::numbers::pi * k / 8;
            out.push_back(k == 0 ? make_vec(1, 0) : make_vec(std::cos(theta), std::sin(theta)));
        }
        return out;
    }
    return DirectionSet::uniform(3, 8).directions;
}

struct VerifyTally
{
    bool failed = false;
    bool saturated = false;
};

void verify_case(Scene const& s, RunConfig const& cfg, Table& t, VerifyTally& tally)
{
    int const dim = s.dim;
    GridParams const p = grid_params(cfg, s);
    int const k = direction_count(cfg, s, dim, 180, 64);
    double const tol = s.tolerance;
    auto dirs = s.params.check_directions.empty() ? default_check_directions(dim)
                                                  : s.params.check_directions;
    auto tau_cells = [&](Vec const& tau) -> std::array<Cell, 3> {
        return {tau[0], tau[1], dim == 3 ? Cell{tau[2]} : Cell{}};
    };
    auto status = [&](bool ok, bool sat) {
        tally.saturated = tally.saturated || sat;
        tally.failed = tally.failed || !ok;
        return std::string(ok ? (sat ? "saturated" : "pass") : "fail");
    };
    auto error_row = [&](std::string const& check, std::string const& what) {
        tally.failed = true;
        t.add({s.name, check, {}, {}, {}, {}, {}, {}, {}, tol, what, std::string("error")});
    };
    // Sets without an explicit boundary representation have no right-hand side.
    auto skipped_row = [&](std::string const& check, std::string const& what) {
        t.add({s.name, check, {}, {}, {}, {}, {}, {}, {}, tol, what, std::string("skipped")});
    };

    for (Vec const& tau : dirs)
    {
        try
        {
            auto r = check_projection_identity(s.set, s.domain, tau, p);
            double const gap = std::max(r.gap_essential, r.gap_preponderant);
            auto tc = tau_cells(tau);
            t.add({s.name, std::string("projection-identity"), tc[0], tc[1], tc[2], r.p_tau,
                   r.mu_essential, r.mu_preponderant, gap, tol,
                   "parallel pieces " + std::to_string(r.excluded_parallel),
                   status(gap <= tol, r.saturated)});
        }
        catch (GeneralPositionError const& e)
        {
            error_row("projection-identity", e.what());
        }
        catch (InvalidInput const& e)
        {
            skipped_row("projection-identity", e.what());
            break;
        }
    }

    try
    {
        auto r = check_integral_identity(s.set, s.domain, DirectionSet::uniform(dim, k), p);
        t.add({s.name, std::string("integral-identity"), {}, {}, {}, r.perimeter, r.ig, {}, r.gap,
               tol, "K " + std::to_string(k), status(r.gap <= tol, r.saturated)});
    }
    catch (GeneralPositionError const& e)
    {
        error_row("integral-identity", e.what());
    }
    catch (InvalidInput const& e)
    {
        skipped_row("integral-identity", e.what());
    }

    std::vector<Vec> axes;
    for (int a = 0; a < dim; ++a)
        axes.push_back(unit_axis(a));
    try
    {
        auto f = check_finite_variation(s.set, s.domain, axes, std::min(k, 64), p);
        for (auto const& e : f.directions)
        {
            auto tc = tau_cells(e.tau);
            t.add({s.name, std::string("finite-variation"), tc[0], tc[1], tc[2], e.value,
                   e.refined, {}, e.change, refinement_stability, std::string("h to h/2"),
                   status(e.stable, e.saturated)});
        }
        t.add({s.name, std::string("finite-variation"), {}, {}, {}, f.perimeter.value,
               f.perimeter.refined, {}, f.perimeter.change, refinement_stability,
               std::string("perimeter h to h/2"),
               status(f.perimeter.stable, f.perimeter.saturated)});
    }
    catch (GeneralPositionError const& e)
    {
        error_row("finite-variation", e.what());
    }
    catch (InvalidInput const& e)
    {
        skipped_row("finite-variation", e.what());
    }

    if (s.perimeter)
    {
        auto r = crofton_perimeter(s.set, s.domain, DirectionSet::uniform(dim, k), p);
        double const gap = relative_gap(r.value, s.perimeter->value);
        t.add({s.name, std::string("perimeter-reference"), {}, {}, {}, r.value,
               s.perimeter->value, {}, gap, tol, s.perimeter->provenance,
               status(gap <= tol, r.saturated)});
    }
    for (auto const& ref : s.directional)
    {
        auto r = directional_variation(s.set, s.domain, ref.direction, p);
        double const gap = relative_gap(r.value, ref.reference.value);
        auto tc = tau_cells(ref.direction);
        t.add({s.name, std::string("variation-reference"), tc[0], tc[1], tc[2], r.value,
               ref.reference.value, {}, gap, tol, ref.reference.provenance,
               status(gap <= tol, r.saturated)});
    }
}

//---------------------------------------------------------------------------//
// Studies
//---------------------------------------------------------------------------//
Table study_table()
{
    return Table{{"study", "case", "param", "value", "reference", "gap", "error_bound", "note"},
                 {},
                 {}};
}

RasterGrid unit_checkerboard(int n)
{
    std::vector<std::uint8_t> occ(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            occ[static_cast<std::size_t>(j) * n + i] = static_cast<std::uint8_t>((i + j + 1) % 2);
    return RasterGrid(2, make_vec(0, 0), 1.0 / n, {n, n, 1}, std::move(occ));
}

int study_refinement(RunConfig const& cfg, bool over_h)
{
    Input const in = load_input(cfg);
    int const dim = in.dim();
    std::optional<double> reference;
    if (in.scene && in.scene->perimeter)
        reference = in.scene->perimeter->value;
    GridParams p = grid_params(cfg, in.scene);
    Table t = study_table();
    bool saturated = false;
    auto add = [&](std::string const& param, VariationReport const& r) {
        saturated = saturated || r.saturated;
        t.add({std::string(over_h ? "h-refinement" : "K-refinement"), in.name, param, r.value,
               reference ? Cell{*reference} : Cell{},
               reference ? Cell{relative_gap(r.value, *reference)} : Cell{}, r.error_bound,
               r.saturated ? std::string("saturated") : std::string()});
    };
    if (over_h)
    {
        int const k = direction_count(cfg, in.scene, dim, 360, 64);
        int const first = dim == 2 ? 8 : 4;
        for (int e = first; e <= first + 4; ++e)
        {
            p.h = std::ldexp(1.0, -e);
            add(format_real(*p.h),
                crofton_perimeter(in.set, in.domain, DirectionSet::uniform(dim, k), p));
        }
    }
    else
    {
        std::vector<int> ks = dim == 2 ? std::vector<int>{45, 90, 180, 360, 720}
                                       : std::vector<int>{16, 32, 64, 128, 256};
        for (int k : ks)
            add(std::to_string(k),
                crofton_perimeter(in.set, in.domain, DirectionSet::uniform(dim, k), p));
    }
    emit(t, cfg);
    return saturated ? exit_saturated : exit_ok;
}

int study_checkerboard(RunConfig const& cfg)
{
    Table t = study_table();
    int const k = cfg.directions.value_or(64);
    std::vector<RefinementPoint> measured;
    std::vector<RefinementPoint> exact;
    bool saturated = false;
    for (int n : {8, 16, 32, 64, 128})
    {
        RasterGrid const g = unit_checkerboard(n);
        double const law
            = axis_variation_exact(g, 0).value + axis_variation_exact(g, 1).value;
        GridParams p;
        p.h = g.spacing() / 8;
        if (cfg.max_hits)
            p.max_hits = *cfg.max_hits;
        auto r = crofton_perimeter(SetExpr::raster(g), Domain::all_space(2),
                                   DirectionSet::uniform(2, k), p);
        saturated = saturated || r.saturated;
        measured.push_back({g.spacing(), r.value});
        exact.push_back({g.spacing(), law});
        t.add({std::string("checkerboard-divergence"), "checkerboard-" + std::to_string(n),
               format_real(g.spacing()), r.value, law, relative_gap(r.value, law), r.error_bound,
               r.saturated ? std::string("saturated") : std::string()});
    }
    auto const fm = fit_growth(measured);
    auto const fe = fit_growth(exact);
    t.add({std::string("checkerboard-divergence"), std::string("fit"), std::string("exponent"),
           fm.exponent, fe.exponent, relative_gap(fm.exponent, fe.exponent), {},
           std::string(fm.stabilizing ? "stabilizing" : "divergent")});
    emit(t, cfg);
    return saturated ? exit_saturated : exit_ok;
}

int study_strong_probe(RunConfig const& cfg)
{
    Input const in = load_input(cfg);
    if (in.dim() != 2)
        throw InvalidInput("the strong-boundary probe supports 2-D inputs");
    BoundaryNotion notion = BoundaryNotion::parse(cfg.notion);
    if (notion.kind != BoundaryNotion::Kind::strong)
        notion = BoundaryNotion::strong(0.25);
    Window const w = integration_window(in.set, in.domain);
    Bounds box = w.box;
    if (w.sphere && w.sphere->radius >= 0)
    {
        Vec const r = make_vec(w.sphere->radius, w.sphere->radius);
        box = overlap(box, Bounds::box(w.sphere->center - r, w.sphere->center + r), 2);
    }
    if (!box.is_finite())
        throw UnboundedWindow("the probe needs a bounded boundary region");
    FractionOptions const opts = fraction_options(cfg);
    auto const offset = default_offset();

    Table t{{"study", "case", "resolution", "spacing", "delta", "on_boundary", "mu_e1", "mu_e2"},
            {},
            "finite-resolution probe, no claim"};
    for (int n : {16, 32, 64})
    {
        double const s = std::max(box.hi[0] - box.lo[0], box.hi[1] - box.lo[1]) / n;
        int const nx = static_cast<int>(std::ceil((box.hi[0] - box.lo[0]) / s)) + 4;
        int const ny = static_cast<int>(std::ceil((box.hi[1] - box.lo[1]) / s)) + 4;
        RadiusSchedule const sched = schedule(cfg, RadiusSchedule{4 * s, 0.5, 3, 3});
        std::vector<std::uint8_t> on(static_cast<std::size_t>(nx) * ny);
        std::int64_t total = 0;
        for (int j = 0; j < ny; ++j)
        {
            for (int i = 0; i < nx; ++i)
            {
                Vec const x = make_vec(box.lo[0] + (i - 2 + offset[0]) * s,
                                       box.lo[1] + (j - 2 + offset[1]) * s);
                auto label = classify_point(in.set, x, notion, sched, cfg.tol, opts);
                bool const b = label.verdict == Verdict::on_boundary;
                on[static_cast<std::size_t>(j) * nx + i] = b;
                total += b;
            }
        }
        // Runs of labelled samples along each axis approximate crossings.
        auto runs = [&](bool along_x) {
            std::int64_t count = 0;
            int const outer = along_x ? ny : nx;
            int const inner = along_x ? nx : ny;
            for (int a = 0; a < outer; ++a)
            {
                bool prev = false;
                for (int b = 0; b < inner; ++b)
                {
                    std::size_t const idx = along_x ? static_cast<std::size_t>(a) * nx + b
                                                    : static_cast<std::size_t>(b) * nx + a;
                    bool const cur = on[idx] != 0;
                    count += cur && !prev;
                    prev = cur;
                }
            }
            return static_cast<double>(count) * s;
        };
        t.add({std::string("strong-boundary-probe"), in.name, std::int64_t{n}, s, notion.delta,
               total, runs(true), runs(false)});
    }
    emit(t, cfg);
    return exit_ok;
}
}  // namespace

//---------------------------------------------------------------------------//
// Commands
//---------------------------------------------------------------------------//
int run_variation(RunConfig const& cfg)
{
    Input const in = load_input(cfg);
    Table t = report_table();
    VariationReport rep;
    if (cfg.exact)
    {
        if (!in.grid)
            throw InvalidInput("--exact needs a raster input");
        if (!cfg.axis)
            throw InvalidInput("--exact needs --axis");
        rep = axis_variation_exact(*in.grid, *cfg.axis);
    }
    else
    {
        Vec tau;
        if (cfg.tau)
            tau = parse_direction(*cfg.tau, in.dim());
        else if (cfg.axis)
        {
            if (*cfg.axis < 0 || *cfg.axis >= in.dim())
                throw InvalidInput("--axis out of range");
            tau = unit_axis(*cfg.axis);
        }
        else
            throw InvalidInput("variation needs --tau or --axis");
        rep = directional_variation(in.set, in.domain, tau, grid_params(cfg, in.scene));
    }
    add_report(t, in.name, rep, in.dim());
    emit(t, cfg);
    return rep.saturated ? exit_saturated : exit_ok;
}

int run_perimeter(RunConfig const& cfg)
{
    Input const in = load_input(cfg);
    int const k = direction_count(cfg, in.scene, in.dim(), 360, 128);
    auto rep = crofton_perimeter(in.set, in.domain, DirectionSet::uniform(in.dim(), k),
                                 grid_params(cfg, in.scene));
    Table t = report_table();
    add_report(t, in.name, rep, in.dim());
    emit(t, cfg);
    return rep.saturated ? exit_saturated : exit_ok;
}

int run_classify(RunConfig const& cfg)
{
    Input const in = load_input(cfg);
    BoundaryNotion const notion = BoundaryNotion::parse(cfg.notion);
    FractionOptions const opts = fraction_options(cfg);

    if (cfg.points.empty())
    {
        if (!in.grid)
            throw InvalidInput("classify needs --point, or a raster input for a mask");
        if (!cfg.out)
            throw InvalidInput("mask output needs --out PATH");
        double const s = in.grid->spacing();
        RadiusSchedule const sched = schedule(cfg, RadiusSchedule{8 * s, 0.5, 4, 4});
        auto mask = classify_raster(*in.grid, notion, sched, cfg.tol, opts);
        RsetFile file = to_rset(*in.grid);
        file.payload = mask;
        write_rset_file(*cfg.out, file);

        std::array<std::int64_t, 4> counts{0, 0, 0, 0};
        for (auto code : mask)
            ++counts[code];
        Table t{{"case", "notion", "verdict", "code", "voxels"}, {}, {}};
        for (std::uint8_t c = 0; c < 4; ++c)
            t.add({in.name, notion.name(), std::string(to_string(static_cast<Verdict>(c))),
                   std::int64_t{c}, counts[c]});
        RunConfig summary = cfg;
        summary.out.reset();
        emit(t, summary);
        return exit_ok;
    }

    RadiusSchedule const sched = schedule(cfg, RadiusSchedule{});
    Table t{{"case", "x", "y", "z", "notion", "verdict", "upper_a", "lower_a", "upper_c",
             "lower_c", "threshold", "margin_a", "margin_c", "error_bound", "method"},
            {},
            {}};
    for (auto const& text : cfg.points)
    {
        Vec const x = parse_vec(text, in.dim(), "--point");
        auto label = classify_point(in.set, x, notion, sched, cfg.tol, opts);
        auto const& m = label.margins;
        t.add({in.name, x[0], x[1], in.dim() == 3 ? Cell{x[2]} : Cell{}, notion.name(),
               std::string(to_string(label.verdict)), m.upper_a, m.lower_a, m.upper_c, m.lower_c,
               m.threshold, m.margin_a, m.margin_c, m.error_bound,
               std::string(to_string(label.density_a.method))});
    }
    emit(t, cfg);
    return exit_ok;
}

int run_boundary(RunConfig const& cfg)
{
    Input const in = load_input(cfg);
    ExplicitBoundary const b = extract_boundary(in.set, in.domain);
    Table t{{"case", "record", "index", "axis", "orientation", "x0", "y0", "z0", "x1", "y1", "z1",
             "value"},
            {},
            {}};
    bool const d3 = b.dim == 3;
    auto z = [&](double v) { return d3 ? Cell{v} : Cell{}; };
    std::int64_t const pieces = b.kind == ExplicitBoundary::Kind::voxel_faces
                                    ? static_cast<std::int64_t>(b.faces.size())
                                : b.kind == ExplicitBoundary::Kind::poly_segments
                                    ? static_cast<std::int64_t>(b.segments.size())
                                    : std::int64_t{1};
    t.add({in.name, std::string(to_string(b.kind)), pieces, {}, {}, {}, {}, {}, {}, {}, {},
           b.total_measure()});
    switch (b.kind)
    {
        case ExplicitBoundary::Kind::voxel_faces:
            for (std::size_t i = 0; i < b.faces.size(); ++i)
            {
                auto const& f = b.faces[i];
                Vec lo, hi;
                for (int k = 0; k < b.dim; ++k)
                {
                    lo[k] = b.origin[k] + f.cell[k] * b.spacing;
                    hi[k] = k == f.axis ? lo[k] : lo[k] + b.spacing;
                }
                t.add({in.name, std::string("face"), static_cast<std::int64_t>(i),
                       std::int64_t{f.axis}, std::int64_t{f.orientation}, lo[0], lo[1], z(lo[2]),
                       hi[0], hi[1], z(hi[2]), b.spacing});
            }
            break;
        case ExplicitBoundary::Kind::poly_segments:
            for (std::size_t i = 0; i < b.segments.size(); ++i)
            {
                auto const& s = b.segments[i];
                t.add({in.name, std::string("segment"), static_cast<std::int64_t>(i), {}, {},
                       s.a[0], s.a[1], {}, s.b[0], s.b[1], {}, s.length()});
            }
            for (std::size_t i = 0; i < b.corners.size(); ++i)
            {
                auto const& c = b.corners[i];
                t.add({in.name, std::string("corner"), static_cast<std::int64_t>(i), {}, {}, c[0],
                       c[1], {}, {}, {}, {}, {}});
            }
            break;
        case ExplicitBoundary::Kind::sphere:
            t.add({in.name, std::string("sphere"), std::int64_t{0}, {}, {}, b.sphere.center[0],
                   b.sphere.center[1], z(b.sphere.center[2]), {}, {}, {}, b.sphere.radius});
            break;
    }
    emit(t, cfg);
    return exit_ok;
}

int run_verify(RunConfig const& cfg)
{
    std::vector<std::filesystem::path> cases;
    if (cfg.scene)
    {
        cases.push_back(*cfg.scene);
    }
    else
    {
        std::filesystem::path const dir = cfg.corpus.value_or(CROFTON_CORPUS_DIR);
        if (!std::filesystem::is_directory(dir))
            throw InvalidInput("corpus directory not found: " + dir.string());
        for (auto const& entry : std::filesystem::directory_iterator(dir))
        {
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                cases.push_back(entry.path());
        }
        std::sort(cases.begin(), cases.end());
        if (cases.empty())
            throw InvalidInput("corpus directory has no scene files: " + dir.string());
    }
    Table t = verify_table();
    VerifyTally tally;
    for (auto const& path : cases)
        verify_case(load_scene(path), cfg, t, tally);
    emit(t, cfg);
    if (tally.failed)
        return exit_check_failed;
    return tally.saturated ? exit_saturated : exit_ok;
}

int run_study(RunConfig const& cfg)
{
    if (cfg.kind == "h-refinement")
        return study_refinement(cfg, true);
    if (cfg.kind == "K-refinement")
        return study_refinement(cfg, false);
    if (cfg.kind == "checkerboard-divergence")
        return study_checkerboard(cfg);
    if (cfg.kind == "strong-boundary-probe")
        return study_strong_probe(cfg);
    throw InvalidInput("--kind must be h-refinement, K-refinement, checkerboard-divergence or "
                       "strong-boundary-probe");
}

}  // namespace crofton::cli

// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include <exception>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace crofton::cli;

namespace
{
void add_input_flags(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--scene", cfg.scene, "Scene file (JSON)");
    sub.add_option("--raster", cfg.raster, "Raster file (RSETv1)");
}

void add_common_flags(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--h", cfg.h, "Transversal line spacing");
    sub.add_option("--max-hits", cfg.max_hits, "Per-line hit cap");
    sub.add_option("--format", cfg.format, "Output format: csv or json");
    sub.add_option("--out", cfg.out, "Output path (default stdout)");
    sub.add_option("--seed", cfg.seed, "Random seed");
}

void add_schedule_flags(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--r0", cfg.r0, "Largest query radius");
    sub.add_option("--ratio", cfg.ratio, "Radius ratio in (0,1)");
    sub.add_option("--count", cfg.count, "Number of radii");
    sub.add_option("--window", cfg.window, "Tail radii used for upper/lower density");
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Directional variation, perimeter and boundary tools"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int(RunConfig const&)> run;

    auto* variation = app.add_subcommand("variation", "Directional variation along one direction");
    add_input_flags(*variation, cfg);
    add_common_flags(*variation, cfg);
    variation->add_option("--tau", cfg.tau, "Direction x,y[,z]");
    variation->add_option("--axis", cfg.axis, "Coordinate axis index");
    variation->add_flag("--exact", cfg.exact, "Face-count value for a raster along --axis");
    variation->callback([&] { run = run_variation; });

    auto* perimeter = app.add_subcommand("perimeter", "Direction-averaged perimeter");
    add_input_flags(*perimeter, cfg);
    add_common_flags(*perimeter, cfg);
    perimeter->add_option("--K", cfg.directions, "Number of directions");
    perimeter->callback([&] { run = run_perimeter; });

    auto* classify = app.add_subcommand("classify", "Boundary labels for points or raster voxels");
    add_input_flags(*classify, cfg);
    add_common_flags(*classify, cfg);
    add_schedule_flags(*classify, cfg);
    classify->add_option("--point", cfg.points, "Query point x,y[,z] (repeatable)");
    classify->add_option("--notion", cfg.notion, "essential | preponderant | strong:DELTA");
    classify->add_option("--tol", cfg.tol, "Threshold tolerance band");
    classify->add_option("--method", cfg.method, "auto | quadrature | montecarlo");
    classify->callback([&] { run = run_classify; });

    auto* boundary = app.add_subcommand("boundary", "Explicit boundary pieces");
    add_input_flags(*boundary, cfg);
    boundary->add_option("--format", cfg.format, "Output format: csv or json");
    boundary->add_option("--out", cfg.out, "Output path (default stdout)");
    boundary->callback([&] { run = run_boundary; });

    auto* verify = app.add_subcommand("verify", "Run identity checks over a scene corpus");
    verify->add_option("--scene", cfg.scene, "Single scene instead of the corpus");
    verify->add_option("--corpus", cfg.corpus, "Corpus directory");
    verify->add_option("--K", cfg.directions, "Number of directions");
    add_common_flags(*verify, cfg);
    verify->callback([&] { run = run_verify; });

    auto* study = app.add_subcommand("study", "Convergence tables and probes");
    add_input_flags(*study, cfg);
    add_common_flags(*study, cfg);
    add_schedule_flags(*study, cfg);
    study->add_option("--kind", cfg.kind,
                      "h-refinement | K-refinement | checkerboard-divergence | "
                      "strong-boundary-probe")
        ->required();
    study->add_option("--K", cfg.directions, "Number of directions");
    study->add_option("--notion", cfg.notion, "strong:DELTA for the probe");
    study->add_option("--tol", cfg.tol, "Threshold tolerance band");
    study->add_option("--method", cfg.method, "auto | quadrature | montecarlo");
    study->callback([&] { run = run_study; });

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::CallForAllHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }

    try
    {
        return run(cfg);
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_error;
}

// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crofton/density.hpp"

namespace crofton::cli
{
enum ExitCode : int
{
    exit_ok = 0,
    exit_error = 1,
    exit_saturated = 2,
    exit_check_failed = 3
};

struct RunConfig
{
    std::optional<std::filesystem::path> scene;
    std::optional<std::filesystem::path> raster;
    std::optional<std::filesystem::path> corpus;
    std::optional<std::string> tau;
    std::optional<int> axis;
    std::optional<int> directions;  // --K
    std::optional<double> h;
    std::optional<int> max_hits;
    double tol = 1e-2;
    std::string notion = "essential";
    std::string format = "csv";
    std::optional<std::filesystem::path> out;
    std::uint64_t seed = 1;
    bool exact = false;
    std::vector<std::string> points;
    std::string method = "auto";
    std::string kind;
    // Radius schedule; unset fields take the defaults for the input.
    std::optional<double> r0;
    std::optional<double> ratio;
    std::optional<int> count;
    std::optional<int> window;
};

int run_variation(RunConfig const& cfg);
int run_perimeter(RunConfig const& cfg);
int run_classify(RunConfig const& cfg);
int run_boundary(RunConfig const& cfg);
int run_verify(RunConfig const& cfg);
int run_study(RunConfig const& cfg);

}  // namespace crofton::cli

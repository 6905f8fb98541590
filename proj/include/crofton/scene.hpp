// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "set_expr.hpp"

namespace crofton
{
//! Exact value with its provenance ("closed form", "oracle", ...).
struct ReferenceValue
{
    double value;
    std::string provenance;
};

//! Directional reference P_tau for one direction.
struct DirectionalReference
{
    Vec direction;
    ReferenceValue reference;
};

//! Per-scene numerical settings; unset fields fall back to command defaults.
struct SceneParams
{
    std::optional<double> h;
    std::optional<int> directions;
    std::optional<int> max_hits;
    //! Directions for per-direction checks (unit vectors).
    std::vector<Vec> check_directions;
};

//---------------------------------------------------------------------------//
/*!
 * A set, its ambient domain, and optional reference values.
 *
 * Scene files are JSON:
 * \code
   {
     "name": "unit-square",
     "dim": 2,
     "domain": {"type": "all"},
     "set": {"type": "box", "lo": [0, 0], "hi": [1, 1]},
     "reference": {"perimeter": {"value": 4, "provenance": "closed form"}},
     "tolerance": 0.01
   }
 * \endcode
 *
 * Node types: half_space {normal, offset}, ball {center, radius},
 * box {lo, hi}, raster {path} or {origin, spacing, dims, rows},
 * union/intersection {children}, complement {child},
 * difference {left, right}. Domain types: all, open_box {lo, hi}.
 */
struct Scene
{
    std::string name;
    int dim = 2;
    Domain domain = Domain::all_space(2);
    SetExpr set = SetExpr::empty_set(2);
    std::optional<ReferenceValue> perimeter;
    std::vector<DirectionalReference> directional;
    double tolerance = 1e-2;
    SceneParams params;
};

//! Parse scene text. Raster paths resolve against base_dir.
Scene parse_scene(std::string_view text, std::filesystem::path const& base_dir = {});
Scene load_scene(std::filesystem::path const& path);

}  // namespace crofton

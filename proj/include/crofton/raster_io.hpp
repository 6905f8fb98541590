// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "set_expr.hpp"

namespace crofton
{
//---------------------------------------------------------------------------//
/*!
 * RSETv1 raster file.
 *
 * \verbatim
   RSETv1
   dim 2
   dims 4 3
   origin 0 0
   spacing 0.25
   data raw
   <prod(dims) bytes, first coordinate fastest>
 * \endverbatim
 *
 * Occupancy rasters use bytes {0, 1}; label masks use {0, 1, 2, 3}.
 */
struct RsetFile
{
    int dim = 2;
    std::array<int, 3> dims{1, 1, 1};
    Vec origin;
    double spacing = 1;
    std::vector<std::uint8_t> payload;
};

//! Read and validate; every payload byte must be <= max_code.
RsetFile read_rset(std::istream& is, std::uint8_t max_code = 1);
RsetFile read_rset_file(std::filesystem::path const& path, std::uint8_t max_code = 1);
void write_rset(std::ostream& os, RsetFile const& file);
void write_rset_file(std::filesystem::path const& path, RsetFile const& file);

RasterGrid to_grid(RsetFile file);
RsetFile to_rset(RasterGrid const& grid);

//! Shortest round-tripping decimal for a double (17 significant digits).
std::string format_real(double v);

}  // namespace crofton

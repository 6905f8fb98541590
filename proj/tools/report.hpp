// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace crofton::cli
{
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

/*!
 * Fixed-column table written as CSV (17 significant digits) or JSON.
 *
 * A banner becomes a leading "# ..." CSV line, or a "banner" field next to
 * "rows" in JSON.
 */
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::string banner;

    void add(std::vector<Cell> row);
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

}  // namespace crofton::cli

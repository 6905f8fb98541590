// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "crofton/raster_io.hpp"
#include "json.hpp"

namespace crofton::cli
{
namespace
{
std::string csv_escape(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

struct CsvCell
{
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::string const& s) const { return csv_escape(s); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
};

struct JsonCell
{
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::string const& s) const { return s; }
    nlohmann::ordered_json operator()(double v) const
    {
        if (!std::isfinite(v))
            return format_real(v);
        return v;
    }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
};
}  // namespace

void Table::add(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("table row width does not match the columns");
    rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const
{
    if (!banner.empty())
        os << "# " << banner << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << '\n';
    for (auto const& row : rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
        os << '\n';
    }
}

void Table::write_json(std::ostream& os) const
{
    auto array = nlohmann::ordered_json::array();
    for (auto const& row : rows)
    {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i)
            obj[columns[i]] = std::visit(JsonCell{}, row[i]);
        array.push_back(std::move(obj));
    }
    if (banner.empty())
    {
        os << array.dump(2) << '\n';
        return;
    }
    nlohmann::ordered_json doc;
    doc["banner"] = banner;
    doc["rows"] = std::move(array);
    os << doc.dump(2) << '\n';
}

}  // namespace crofton::cli

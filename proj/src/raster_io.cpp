// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/raster_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "crofton/error.hpp"

namespace crofton
{
namespace
{
std::string expect_line(std::istream& is, int lineno)
{
    std::string line;
    if (!std::getline(is, line))
        throw ParseError("RSETv1: unexpected end of header", lineno, 1);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

std::istringstream keyed(std::string const& line, char const* key, int lineno)
{
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word != key)
        throw ParseError(std::string("RSETv1: expected '") + key + "'", lineno, 1);
    return ss;
}

void expect_done(std::istringstream& ss, int lineno)
{
    std::string extra;
    if (ss >> extra)
        throw ParseError("RSETv1: trailing token '" + extra + "'", lineno,
                         static_cast<int>(ss.tellg()) - static_cast<int>(extra.size()) + 1);
}
}  // namespace

RsetFile read_rset(std::istream& is, std::uint8_t max_code)
{
    RsetFile f;
    if (expect_line(is, 1) != "RSETv1")
        throw ParseError("RSETv1: bad magic", 1, 1);

    {
        auto ss = keyed(expect_line(is, 2), "dim", 2);
        if (!(ss >> f.dim) || (f.dim != 2 && f.dim != 3))
            throw ParseError("RSETv1: dim must be 2 or 3", 2, 5);
        expect_done(ss, 2);
    }
    std::size_t count = 1;
    {
        auto ss = keyed(expect_line(is, 3), "dims", 3);
        for (int k = 0; k < f.dim; ++k)
        {
            if (!(ss >> f.dims[static_cast<unsigned>(k)]) || f.dims[static_cast<unsigned>(k)] <= 0)
                throw ParseError("RSETv1: dims must be positive integers", 3, 6);
            count *= static_cast<std::size_t>(f.dims[static_cast<unsigned>(k)]);
        }
        expect_done(ss, 3);
    }
    {
        auto ss = keyed(expect_line(is, 4), "origin", 4);
        for (int k = 0; k < f.dim; ++k)
        {
            if (!(ss >> f.origin[k]))
                throw ParseError("RSETv1: origin needs dim reals", 4, 8);
        }
        expect_done(ss, 4);
    }
    {
        auto ss = keyed(expect_line(is, 5), "spacing", 5);
        if (!(ss >> f.spacing) || !(f.spacing > 0))
            throw ParseError("RSETv1: spacing must be positive", 5, 9);
        expect_done(ss, 5);
    }
    if (expect_line(is, 6) != "data raw")
        throw ParseError("RSETv1: expected 'data raw'", 6, 1);

    f.payload.resize(count);
    is.read(reinterpret_cast<char*>(f.payload.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(is.gcount()) != count)
        throw ParseError("RSETv1: payload shorter than prod(dims) = " + std::to_string(count), 7,
                         1);
    if (is.peek() != std::char_traits<char>::eof())
        throw ParseError("RSETv1: payload longer than prod(dims)", 7, 1);
    for (std::size_t i = 0; i < count; ++i)
    {
        if (f.payload[i] > max_code)
            throw ParseError("RSETv1: payload byte " + std::to_string(i) + " out of range", 7,
                             1);
    }
    return f;
}

RsetFile read_rset_file(std::filesystem::path const& path, std::uint8_t max_code)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw ParseError("cannot open " + path.string());
    return read_rset(is, max_code);
}

void write_rset(std::ostream& os, RsetFile const& f)
{
    os << "RSETv1\n" << "dim " << f.dim << "\n" << "dims";
    for (int k = 0; k < f.dim; ++k)
        os << ' ' << f.dims[static_cast<unsigned>(k)];
    os << "\norigin";
    for (int k = 0; k < f.dim; ++k)
        os << ' ' << format_real(f.origin[k]);
    os << "\nspacing " << format_real(f.spacing) << "\ndata raw\n";
    os.write(reinterpret_cast<char const*>(f.payload.data()),
             static_cast<std::streamsize>(f.payload.size()));
}

void write_rset_file(std::filesystem::path const& path, RsetFile const& file)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw InvalidInput("cannot write " + path.string());
    write_rset(os, file);
}

RasterGrid to_grid(RsetFile file)
{
    return RasterGrid(file.dim, file.origin, file.spacing, file.dims, std::move(file.payload));
}

RsetFile to_rset(RasterGrid const& grid)
{
    RsetFile f;
    f.dim = grid.dim();
    f.dims = grid.dims();
    f.origin = grid.origin();
    f.spacing = grid.spacing();
    f.payload = grid.occupancy();
    return f;
}

std::string format_real(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace crofton

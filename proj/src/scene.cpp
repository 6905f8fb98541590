// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/scene.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "crofton/error.hpp"
#include "crofton/raster_io.hpp"

namespace crofton
{
namespace
{
using nlohmann::json;

class SchemaReader
{
  public:
    SchemaReader(int dim, std::filesystem::path base) : dim_(dim), base_(std::move(base)) {}

    [[noreturn]] static void fail(std::string const& where, std::string const& what)
    {
        throw ParseError("scene " + (where.empty() ? std::string("/") : where) + ": " + what);
    }

    template<class F>
    static auto wrap(std::string const& where, F&& f) -> decltype(f())
    {
        try
        {
            return f();
        }
        catch (InvalidInput const& e)
        {
            fail(where, e.what());
        }
    }

    static json const& member(json const& obj, char const* key, std::string const& where)
    {
        if (!obj.is_object())
            fail(where, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end())
            fail(where, std::string("missing '") + key + "'");
        return *it;
    }

    static double real(json const& v, std::string const& where)
    {
        if (!v.is_number())
            fail(where, "expected a number");
        return v.get<double>();
    }

    Vec point(json const& v, std::string const& where) const
    {
        if (!v.is_array() || static_cast<int>(v.size()) != dim_)
            fail(where, "expected an array of " + std::to_string(dim_) + " numbers");
        Vec p;
        for (int k = 0; k < dim_; ++k)
            p[k] = real(v[static_cast<std::size_t>(k)], where + "/" + std::to_string(k));
        return p;
    }

    Domain domain(json const& v, std::string const& where) const
    {
        auto type = member(v, "type", where);
        if (type == "all")
            return Domain::all_space(dim_);
        if (type == "open_box")
        {
            return wrap(where, [&] {
                return Domain::open_box(dim_, point(member(v, "lo", where), where + "/lo"),
                                        point(member(v, "hi", where), where + "/hi"));
            });
        }
        fail(where + "/type", "unknown domain type");
    }

    SetExpr node(json const& v, std::string const& where) const
    {
        json const& type_json = member(v, "type", where);
        if (!type_json.is_string())
            fail(where + "/type", "expected a string");
        std::string const type = type_json.get<std::string>();
        auto children = [&](char const* key) {
            json const& arr = member(v, key, where);
            if (!arr.is_array())
                fail(where + "/" + key, "expected an array");
            std::vector<SetExpr> out;
            for (std::size_t i = 0; i < arr.size(); ++i)
                out.push_back(node(arr[i], where + "/" + key + "/" + std::to_string(i)));
            return out;
        };
        return wrap(where, [&] {
            if (type == "half_space")
            {
                return SetExpr::half_space(dim_, point(member(v, "normal", where), where + "/normal"),
                                           real(member(v, "offset", where), where + "/offset"));
            }
            if (type == "ball")
            {
                return SetExpr::ball(dim_, point(member(v, "center", where), where + "/center"),
                                     real(member(v, "radius", where), where + "/radius"));
            }
            if (type == "box")
            {
                return SetExpr::box(dim_, point(member(v, "lo", where), where + "/lo"),
                                    point(member(v, "hi", where), where + "/hi"));
            }
            if (type == "raster")
                return raster(v, where);
            if (type == "union")
            {
                auto c = children("children");
                return c.empty() ? SetExpr::empty_set(dim_) : SetExpr::union_of(std::move(c));
            }
            if (type == "intersection")
                return SetExpr::intersection_of(children("children"));
            if (type == "complement")
                return SetExpr::complement(node(member(v, "child", where), where + "/child"));
            if (type == "difference")
            {
                return SetExpr::difference(node(member(v, "left", where), where + "/left"),
                                           node(member(v, "right", where), where + "/right"));
            }
            fail(where + "/type", "unknown node type '" + type + "'");
        });
    }

  private:
    int dim_;
    std::filesystem::path base_;

    SetExpr raster(json const& v, std::string const& where) const
    {
        RasterGrid grid = [&] {
            if (v.contains("path"))
            {
                auto const& p = member(v, "path", where);
                if (!p.is_string())
                    fail(where + "/path", "expected a string");
                return to_grid(read_rset_file(base_ / p.get<std::string>()));
            }
            // Inline: one string per row of '0'/'1', first coordinate along the string.
            Vec origin = point(member(v, "origin", where), where + "/origin");
            double spacing = real(member(v, "spacing", where), where + "/spacing");
            json const& rows = member(v, "rows", where);
            if (dim_ != 2 || !rows.is_array() || rows.empty())
                fail(where + "/rows", "inline rows need dim 2 and a non-empty array");
            std::size_t const width = rows[0].get<std::string>().size();
            std::vector<std::uint8_t> occ;
            for (std::size_t j = 0; j < rows.size(); ++j)
            {
                std::string const row = rows[j].get<std::string>();
                if (row.size() != width)
                    fail(where + "/rows/" + std::to_string(j), "ragged row");
                for (char c : row)
                {
                    if (c != '0' && c != '1')
                        fail(where + "/rows/" + std::to_string(j), "rows hold only '0'/'1'");
                    occ.push_back(c == '1' ? 1 : 0);
                }
            }
            return RasterGrid(2, origin, spacing,
                              {static_cast<int>(width), static_cast<int>(rows.size()), 1},
                              std::move(occ));
        }();
        if (grid.dim() != dim_)
            fail(where, "raster dimension does not match the scene");
        return SetExpr::raster(std::move(grid));
    }
};

ReferenceValue reference_value(json const& v, std::string const& where)
{
    if (v.is_number())
        return {v.get<double>(), "unspecified"};
    ReferenceValue r{SchemaReader::real(SchemaReader::member(v, "value", where), where + "/value"),
                     "unspecified"};
    if (v.contains("provenance"))
        r.provenance = v["provenance"].get<std::string>();
    return r;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte)
{
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            col = 1;
        }
        else
        {
            ++col;
        }
    }
    return {line, col};
}
}  // namespace

Scene parse_scene(std::string_view text, std::filesystem::path const& base_dir)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (json::parse_error const& e)
    {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("scene syntax error: ") + e.what(), line, col);
    }

    Scene scene;
    try
    {
        json const& dim_json = SchemaReader::member(doc, "dim", "");
        if (!dim_json.is_number_integer() || (dim_json != 2 && dim_json != 3))
            SchemaReader::fail("/dim", "dim must be 2 or 3");
        scene.dim = dim_json.get<int>();
        SchemaReader reader(scene.dim, base_dir);
        scene.name = doc.value("name", std::string{});
        scene.domain = doc.contains("domain") ? reader.domain(doc["domain"], "/domain")
                                              : Domain::all_space(scene.dim);
        scene.set = reader.node(SchemaReader::member(doc, "set", ""), "/set");
        if (doc.contains("tolerance"))
            scene.tolerance = SchemaReader::real(doc["tolerance"], "/tolerance");
        if (doc.contains("reference"))
        {
            json const& ref = doc["reference"];
            if (ref.contains("perimeter"))
                scene.perimeter = reference_value(ref["perimeter"], "/reference/perimeter");
            if (ref.contains("p_tau"))
            {
                std::size_t i = 0;
                for (auto const& item : ref["p_tau"])
                {
                    std::string const where = "/reference/p_tau/" + std::to_string(i++);
                    Vec tau = reader.point(SchemaReader::member(item, "tau", where), where + "/tau");
                    scene.directional.push_back({normalized(tau), reference_value(item, where)});
                }
            }
        }
        if (doc.contains("params"))
        {
            json const& p = doc["params"];
            if (p.contains("h"))
                scene.params.h = SchemaReader::real(p["h"], "/params/h");
            if (p.contains("K"))
                scene.params.directions = p["K"].get<int>();
            if (p.contains("max_hits"))
                scene.params.max_hits = p["max_hits"].get<int>();
            if (p.contains("directions"))
            {
                std::size_t i = 0;
                for (auto const& d : p["directions"])
                {
                    scene.params.check_directions.push_back(normalized(
                        reader.point(d, "/params/directions/" + std::to_string(i++))));
                }
            }
        }
    }
    catch (json::exception const& e)
    {
        throw ParseError(std::string("scene schema error: ") + e.what());
    }
    return scene;
}

Scene load_scene(std::filesystem::path const& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    std::string const text = ss.str();
    Scene s = parse_scene(text, path.parent_path());
    if (s.name.empty())
        s.name = path.stem().string();
    return s;
}

}  // namespace crofton

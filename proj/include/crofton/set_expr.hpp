// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "interval_set.hpp"
#include "vec.hpp"

namespace crofton
{
//---------------------------------------------------------------------------//
/*!
 * Line {z + t tau} with unit direction and base point orthogonal to it.
 */
struct Line
{
    Vec direction;
    Vec base;

    //! Validate a direction/base pair.
    static Line make(Vec direction, Vec base);

    //! Line with the given direction through an arbitrary point. The point
    //! sits at parameter dot(point, direction).
    static Line through(Vec point, Vec direction);

    Vec at(double t) const { return base + t * direction; }
};

//---------------------------------------------------------------------------//
/*!
 * Axis-aligned box or "everything"/"nothing" marker.
 */
struct Bounds
{
    enum class Kind
    {
        empty,
        finite,
        unbounded
    };

    Kind kind = Kind::empty;
    Vec lo;
    Vec hi;

    static Bounds none() { return {}; }
    static Bounds everything() { return {Kind::unbounded, {}, {}}; }
    static Bounds box(Vec lo, Vec hi) { return {Kind::finite, lo, hi}; }

    bool is_empty() const { return kind == Kind::empty; }
    bool is_finite() const { return kind == Kind::finite; }
    bool is_unbounded() const { return kind == Kind::unbounded; }

    //! Euclidean diameter; zero when empty, infinite when unbounded.
    double diameter() const;
};

Bounds hull(Bounds const& a, Bounds const& b, int dim);
Bounds overlap(Bounds const& a, Bounds const& b, int dim);

//! Closed ball; used for enclosing windows.
struct Sphere
{
    Vec center;
    double radius;
};

//---------------------------------------------------------------------------//
/*!
 * Cubic-cell occupancy raster.
 *
 * Cell (i_1, ..., i_n) is the half-open box
 * prod_k [origin_k + i_k s, origin_k + (i_k + 1) s). Storage is row-major with
 * the first coordinate fastest.
 */
class RasterGrid
{
  public:
    using Index = std::array<int, 3>;

    RasterGrid(int dim, Vec origin, double spacing, Index dims,
               std::vector<std::uint8_t> occupancy);

    int dim() const { return dim_; }
    Vec const& origin() const { return origin_; }
    double spacing() const { return spacing_; }
    Index const& dims() const { return dims_; }
    std::size_t cell_count() const { return occupancy_.size(); }
    std::vector<std::uint8_t> const& occupancy() const { return occupancy_; }

    //! Linear offset of a cell inside the raster.
    std::size_t linear(Index const& idx) const
    {
        return static_cast<std::size_t>(idx[0])
               + static_cast<std::size_t>(dims_[0])
                     * (static_cast<std::size_t>(idx[1])
                        + static_cast<std::size_t>(dims_[1]) * static_cast<std::size_t>(idx[2]));
    }
    bool in_range(Index const& idx) const;
    //! Occupancy with everything outside the raster empty.
    bool occupied(Index const& idx) const
    {
        return in_range(idx) && occupancy_[linear(idx)] != 0;
    }
    Index unravel(std::size_t linear) const;

    //! Cell containing x under the half-open convention, if any.
    std::optional<Index> cell_of(Vec const& x) const;
    Vec cell_lower(Index const& idx) const;
    Vec cell_center(Index const& idx) const;
    Vec upper() const;
    std::size_t occupied_count() const;

    friend bool operator==(RasterGrid const&, RasterGrid const&) = default;

  private:
    int dim_;
    Vec origin_;
    double spacing_;
    Index dims_;
    std::vector<std::uint8_t> occupancy_;
};

//---------------------------------------------------------------------------//
/*!
 * Ambient open set: all of space or an open box.
 */
class Domain
{
  public:
    static Domain all_space(int dim);
    static Domain open_box(int dim, Vec lo, Vec hi);

    int dim() const { return dim_; }
    bool is_all_space() const { return !box_; }
    Vec const& lo() const { return box_->first; }
    Vec const& hi() const { return box_->second; }

    bool contains(Vec const& x) const;
    IntervalSet trace(Line const& line) const;
    Bounds bounds() const;

  private:
    int dim_ = 2;
    std::optional<std::pair<Vec, Vec>> box_;
};

//---------------------------------------------------------------------------//
namespace node
{
struct HalfSpace;
struct Ball;
struct Box;
struct Raster;
struct Union;
struct Intersection;
struct Complement;
struct Difference;
}  // namespace node

//---------------------------------------------------------------------------//
/*!
 * Immutable CSG expression over analytic primitives and raster leaves.
 *
 * Copies share the underlying tree. Leaves are identified by node address,
 * so a leaf shared between branches is recognized as the same set.
 */
class SetExpr
{
  public:
    using Data = std::variant<node::HalfSpace, node::Ball, node::Box, node::Raster,
                              node::Union, node::Intersection, node::Complement,
                              node::Difference>;

    static SetExpr half_space(int dim, Vec normal, double offset);
    static SetExpr ball(int dim, Vec center, double radius);
    static SetExpr box(int dim, Vec lo, Vec hi);
    static SetExpr raster(RasterGrid grid);
    static SetExpr raster(std::shared_ptr<RasterGrid const> grid);
    static SetExpr union_of(std::vector<SetExpr> children);
    static SetExpr intersection_of(std::vector<SetExpr> children);
    static SetExpr complement(SetExpr child);
    static SetExpr difference(SetExpr left, SetExpr right);
    static SetExpr empty_set(int dim);

    int dim() const;
    Data const& data() const;
    //! Stable identity of this node.
    void const* id() const { return node_.get(); }
    bool is_leaf() const;

    template<class T>
    T const* as() const;

  private:
    struct Node;
    std::shared_ptr<Node const> node_;

    explicit SetExpr(std::shared_ptr<Node const> n) : node_(std::move(n)) {}
    static SetExpr make(int dim, Data data);
};

namespace node
{
//! Open half-space {x : normal . x < offset}.
struct HalfSpace
{
    Vec normal;
    double offset;
};
//! Open ball.
struct Ball
{
    Vec center;
    double radius;
};
//! Half-open box [lo, hi).
struct Box
{
    Vec lo;
    Vec hi;
};
struct Raster
{
    std::shared_ptr<RasterGrid const> grid;
};
//! Union of zero children is the empty set.
struct Union
{
    std::vector<SetExpr> children;
};
//! Intersection of zero children is all of space.
struct Intersection
{
    std::vector<SetExpr> children;
};
struct Complement
{
    SetExpr child;
};
struct Difference
{
    SetExpr left;
    SetExpr right;
};
}  // namespace node

//! Pointwise membership.
bool contains(SetExpr const& expr, Vec const& x);

//! Canonical trace {t : base + t direction in A}, exact up to null sets.
IntervalSet trace(SetExpr const& expr, Line const& line);

//! Trace of a raster leaf by incremental cell traversal.
IntervalSet trace_raster(RasterGrid const& grid, Line const& line);

//! Box containing the set (complement-aware through De Morgan).
Bounds bounding_box(SetExpr const& expr);

//! Box containing the topological boundary of the set.
Bounds boundary_bounds(SetExpr const& expr);

//! Ball containing the union of all leaf boundaries, if bounded.
std::optional<Sphere> boundary_sphere(SetExpr const& expr);

template<class T>
T const* SetExpr::as() const
{
    return std::get_if<T>(&data());
}

//! Number of nodes in the tree.
std::size_t node_count(SetExpr const& expr);

}  // namespace crofton

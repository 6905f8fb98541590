// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>

#include <boost/container/small_vector.hpp>

namespace crofton
{
//! Open interval (lo, hi) of a line parameter; endpoints may be infinite.
struct Interval
{
    double lo;
    double hi;

    double length() const { return hi - lo; }
    friend bool operator==(Interval const&, Interval const&) = default;
};

//---------------------------------------------------------------------------//
/*!
 * Canonical finite union of open intervals.
 *
 * Intervals are sorted, pairwise disjoint, non-adjacent (each upper endpoint
 * is strictly below the next lower endpoint) and non-degenerate. Two raw
 * lists that differ by a null set of the line have the same canonical form,
 * which is what makes this the normal form of a trace.
 */
class IntervalSet
{
  public:
    using Storage = boost::container::small_vector<Interval, 4>;

    IntervalSet() = default;

    //! Sort, drop degenerate pieces, merge overlapping or touching pieces.
    static IntervalSet canonicalize(std::span<Interval const> raw);

    //! One interval, or the empty set if lo >= hi.
    static IntervalSet single(double lo, double hi);

    //! The whole line (-inf, inf).
    static IntervalSet whole_line();

    std::span<Interval const> intervals() const { return {data_.data(), data_.size()}; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    Interval const& operator[](std::size_t i) const { return data_[i]; }

    //! Total length (infinite if any piece is unbounded).
    double measure() const;

    //! Whether t lies inside one of the open pieces.
    bool contains(double t) const;

    //! Check the canonical-form invariants.
    bool is_canonical() const;

    friend bool operator==(IntervalSet const& a, IntervalSet const& b)
    {
        return a.data_ == b.data_;
    }

  private:
    Storage data_;

    friend IntervalSet combine(IntervalSet const&, IntervalSet const&, int);
};

enum class BooleanOp
{
    unite,
    intersect,
    subtract
};

//! Exact set operation by a linear merge over both endpoint sequences.
IntervalSet interval_boolean(IntervalSet const& a, IntervalSet const& b, BooleanOp op);

inline IntervalSet unite(IntervalSet const& a, IntervalSet const& b)
{
    return interval_boolean(a, b, BooleanOp::unite);
}
inline IntervalSet intersect(IntervalSet const& a, IntervalSet const& b)
{
    return interval_boolean(a, b, BooleanOp::intersect);
}
inline IntervalSet subtract(IntervalSet const& a, IntervalSet const& b)
{
    return interval_boolean(a, b, BooleanOp::subtract);
}
//! Complement within the line.
IntervalSet complement(IntervalSet const& a);

std::ostream& operator<<(std::ostream& os, IntervalSet const& s);

}  // namespace crofton

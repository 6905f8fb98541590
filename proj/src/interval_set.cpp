// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/interval_set.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace crofton
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

// Append keeping the canonical form: touching or overlapping pieces merge.
void push_merged(IntervalSet::Storage& out, Interval iv)
{
    if (!(iv.lo < iv.hi))
        return;
    if (!out.empty() && iv.lo <= out.back().hi)
    {
        out.back().hi = std::max(out.back().hi, iv.hi);
        return;
    }
    out.push_back(iv);
}

bool apply(int op, bool in_a, bool in_b)
{
    switch (static_cast<BooleanOp>(op))
    {
        case BooleanOp::unite: return in_a || in_b;
        case BooleanOp::intersect: return in_a && in_b;
        case BooleanOp::subtract: return in_a && !in_b;
    }
    return false;
}

// Endpoint k of a canonical set: even k are lower ends, odd k upper ends.
double endpoint(std::span<Interval const> s, std::size_t k)
{
    return (k % 2 == 0) ? s[k / 2].lo : s[k / 2].hi;
}
}  // namespace

IntervalSet IntervalSet::canonicalize(std::span<Interval const> raw)
{
    Storage tmp;
    tmp.reserve(raw.size());
    for (auto const& iv : raw)
    {
        if (iv.lo < iv.hi)
            tmp.push_back(iv);
    }
    std::sort(tmp.begin(), tmp.end(), [](Interval const& a, Interval const& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    IntervalSet result;
    for (auto const& iv : tmp)
        push_merged(result.data_, iv);
    return result;
}

IntervalSet IntervalSet::single(double lo, double hi)
{
    IntervalSet result;
    if (lo < hi)
        result.data_.push_back({lo, hi});
    return result;
}

IntervalSet IntervalSet::whole_line() { return single(-inf, inf); }

double IntervalSet::measure() const
{
    double total = 0;
    for (auto const& iv : data_)
        total += iv.hi - iv.lo;
    return total;
}

bool IntervalSet::contains(double t) const
{
    auto it = std::upper_bound(data_.begin(), data_.end(), t,
                               [](double v, Interval const& iv) { return v < iv.hi; });
    return it != data_.end() && it->lo < t;
}

bool IntervalSet::is_canonical() const
{
    for (std::size_t i = 0; i < data_.size(); ++i)
    {
        if (!(data_[i].lo < data_[i].hi))
            return false;
        if (i > 0 && !(data_[i - 1].hi < data_[i].lo))
            return false;
    }
    return true;
}

IntervalSet combine(IntervalSet const& a, IntervalSet const& b, int op)
{
    auto sa = a.intervals();
    auto sb = b.intervals();
    std::size_t const na = 2 * sa.size();
    std::size_t const nb = 2 * sb.size();
    std::size_t ia = 0;
    std::size_t ib = 0;
    bool in_a = false;
    bool in_b = false;
    bool inside = apply(op, false, false);
    double start = -inf;

    IntervalSet result;
    while (ia < na || ib < nb)
    {
        double const ta = ia < na ? endpoint(sa, ia) : inf;
        double const tb = ib < nb ? endpoint(sb, ib) : inf;
        double const t = std::min(ta, tb);
        if (ia < na && ta == t)
        {
            in_a = !in_a;
            ++ia;
        }
        if (ib < nb && tb == t)
        {
            in_b = !in_b;
            ++ib;
        }
        bool const now = apply(op, in_a, in_b);
        if (now && !inside)
            start = t;
        else if (!now && inside)
            push_merged(result.data_, {start, t});
        inside = now;
    }
    if (inside)
        push_merged(result.data_, {start, inf});
    return result;
}

IntervalSet interval_boolean(IntervalSet const& a, IntervalSet const& b, BooleanOp op)
{
    return combine(a, b, static_cast<int>(op));
}

IntervalSet complement(IntervalSet const& a)
{
    return subtract(IntervalSet::whole_line(), a);
}

std::ostream& operator<<(std::ostream& os, IntervalSet const& s)
{
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? ", " : "") << '(' << s[i].lo << ", " << s[i].hi << ')';
    return os << '}';
}

}  // namespace crofton

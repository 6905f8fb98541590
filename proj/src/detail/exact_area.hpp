// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "crofton/vec.hpp"

namespace crofton::detail
{
//! Convex polygon, counter-clockwise, planar.
using Polygon = std::vector<Vec>;

//! Keep the part of the polygon with dot(normal, x) < offset.
Polygon clip_polygon(Polygon const& poly, Vec const& normal, double offset);

//! Area of a counter-clockwise polygon.
double polygon_area(Polygon const& poly);

//! Area of disk(center, r) intersected with a counter-clockwise polygon.
double disk_polygon_area(Vec const& center, double r, Polygon const& poly);

//! Area of the intersection of two disks at distance d.
double disk_lens_area(double r1, double r2, double d);

//! Volume of the intersection of two balls at distance d.
double ball_lens_volume(double r1, double r2, double d);

//! Volume of {y in B(x, r) : normal . (y - x) < s}.
double ball_halfspace_volume(double r, double s);

//! Axis-aligned square [lo, lo + side]^2 as a polygon.
Polygon square(Vec const& lo, double side);

}  // namespace crofton::detail

// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "density.hpp"
#include "set_expr.hpp"

namespace crofton
{
//---------------------------------------------------------------------------//
// Point classification
//---------------------------------------------------------------------------//
struct BoundaryNotion
{
    enum class Kind
    {
        essential,
        preponderant,
        strong  //!< experimental: both lower densities at least delta
    };
    Kind kind = Kind::essential;
    double delta = 0;

    static BoundaryNotion essential() { return {Kind::essential, 0}; }
    static BoundaryNotion preponderant() { return {Kind::preponderant, 0}; }
    static BoundaryNotion strong(double delta);

    //! Parses "essential", "preponderant" or "strong:DELTA".
    static BoundaryNotion parse(std::string_view text);
    std::string name() const;
};

enum class Verdict : std::uint8_t
{
    interior_a = 0,
    interior_complement = 1,
    on_boundary = 2,
    uncertain = 3
};

std::string_view to_string(Verdict v);

/*!
 * Densities entering a verdict and their signed distances to the threshold.
 *
 * For essential and preponderant notions the upper densities are compared,
 * for the strong notion the lower ones.
 */
struct Margins
{
    double upper_a = 0;
    double upper_c = 0;
    double lower_a = 0;
    double lower_c = 0;
    double threshold = 0;
    double margin_a = 0;  //!< deciding density of A minus threshold
    double margin_c = 0;  //!< deciding density of the complement minus threshold
    double error_bound = 0;
};

struct BoundaryLabel
{
    BoundaryNotion notion;
    Verdict verdict = Verdict::uncertain;
    Margins margins;
    //! Raw per-radius fractions for auditing the thresholds.
    DensityEstimate density_a;
    DensityEstimate density_c;
};

//! Verdict from a density pair; pure threshold logic.
BoundaryLabel classify_densities(DensityEstimate const& a, DensityEstimate const& c,
                                 BoundaryNotion const& notion, double tol);

BoundaryLabel classify_point(SetExpr const& expr, Vec const& x, BoundaryNotion const& notion,
                             RadiusSchedule const& sched, double tol = 1e-2,
                             FractionOptions const& opts = {});

//! Verdict code per voxel center, row-major.
std::vector<std::uint8_t> classify_raster(RasterGrid const& grid, BoundaryNotion const& notion,
                                          RadiusSchedule const& sched, double tol = 1e-2,
                                          FractionOptions const& opts = {});

//---------------------------------------------------------------------------//
// Explicit boundaries
//---------------------------------------------------------------------------//
/*!
 * Axis-normal face between an occupied and an empty cell.
 *
 * \c cell holds the transverse cell indices; along \c axis it holds the
 * plane index p, so the face lies at origin[axis] + p * spacing.
 * Orientation +1 means the occupied cell is on the low side.
 */
struct AxisFace
{
    int axis;
    int orientation;
    RasterGrid::Index cell;
};

struct Segment
{
    Vec a;
    Vec b;
    double length() const { return norm(b - a); }
};

struct ExplicitBoundary
{
    enum class Kind
    {
        voxel_faces,
        poly_segments,
        sphere
    };

    Kind kind = Kind::poly_segments;
    int dim = 2;

    // voxel_faces
    Vec origin;
    double spacing = 0;
    std::vector<AxisFace> faces;

    // poly_segments
    std::vector<Segment> segments;
    //! Segment endpoints where the densities differ from 1/2.
    std::vector<Vec> corners;

    // sphere
    Sphere sphere{};

    //! H^{n-1} measure of the boundary pieces.
    double total_measure() const;
    //! Faces normal to each axis.
    std::array<std::size_t, 3> face_counts() const;
};

std::string_view to_string(ExplicitBoundary::Kind k);

//! Exposed faces, treating everything outside the raster as empty.
ExplicitBoundary extract_boundary_voxel(RasterGrid const& grid);

//! Chord error of the disk polygonization relative to the radius.
inline constexpr double disk_chord_tolerance = 1e-4;

/*!
 * Segment soup covering the essential boundary of a 2-D analytic CSG set
 * inside the domain. Disks are replaced by inscribed polygons.
 */
ExplicitBoundary extract_boundary_poly(SetExpr const& expr, Domain const& domain);

//! Picks the voxel, sphere or polygon representation for an expression.
ExplicitBoundary extract_boundary(SetExpr const& expr, Domain const& domain);

}  // namespace crofton

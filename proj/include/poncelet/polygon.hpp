#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "poncelet/conics.hpp"

namespace poncelet {

/// Closed polygon: vertex i joins vertex (i + 1) mod N. Self-intersecting
/// (star) polygons are allowed.
class Polygon {
public:
    /// Throws GeometryError if fewer than 3 vertices or two consecutive
    /// vertices closer than 1e-12 times the diameter.
    explicit Polygon(std::vector<Point2> vertices);

    std::size_t size() const noexcept { return vertices_.size(); }
    std::span<const Point2> vertices() const noexcept { return vertices_; }
    /// Cyclic access; any integer index is wrapped.
    const Point2& operator[](std::ptrdiff_t i) const;

    Polygon scaled(double sx, double sy) const;
    double diameter() const;

private:
    std::vector<Point2> vertices_;
};

/// Cosine of the angle at each vertex between the edges to its two
/// neighbours. No turning-number correction is applied for star polygons.
std::vector<double> internal_cosines(const Polygon& poly);

double perimeter(const Polygon& poly);

/// Signed area of a triangle (positive for counter-clockwise order).
double signed_area(const Point2& p, const Point2& q, const Point2& r);

struct TriangleRadii {
    double inradius;
    double circumradius;
};

/// Throws GeometryError unless poly is a nondegenerate triangle.
TriangleRadii triangle_radii(const Polygon& tri);

/// Minimal sum of squared vertex distances over the 2N cyclic relabelings
/// and reversals of q. Both polygons must have the same size.
double dihedral_match_distance(const Polygon& p, const Polygon& q);

}  // namespace poncelet

#pragma once

#include "poncelet/conics.hpp"
#include "poncelet/polygon.hpp"

namespace poncelet {

/// Billiard state: a point and a unit direction (normalised on construction).
class Ray {
public:
    /// Throws DomainError for a zero direction.
    Ray(Point2 origin, Point2 direction);

    const Point2& origin() const noexcept { return origin_; }
    const Point2& direction() const noexcept { return direction_; }
    Ray reversed() const { return {origin_, -direction_}; }

private:
    Point2 origin_;
    Point2 direction_;
};

/// Fly to the far intersection with the table and reflect about the tangent there.
/// Throws GeometryError for a ray tangent to the table.
Ray reflect_step(const Ray& ray, const Ellipse& table);

struct TraceResult {
    Polygon polygon;      ///< start.origin followed by the first n-1 impacts
    double closure_error; ///< |origin_n - origin_0| + |direction_n - direction_0|
};

TraceResult trace_closure(const Ray& start, const Ellipse& table, int n);

/// Dual-conic residual of the line through p and q against `conic`; zero iff tangent.
double tangency_residual(const Point2& p, const Point2& q, const Ellipse& conic);

/// Largest tangency residual over the polygon's edges.
double max_tangency_residual(const Polygon& poly, const Ellipse& conic);

/// Largest violation (radians) of the reflection law over the vertices.
/// Throws DomainError for a vertex off the table by more than 1e-8.
double reflection_residual(const Polygon& poly, const Ellipse& table);

}  // namespace poncelet

#include "poncelet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

double cross(const Point2& u, const Point2& v) { return u.x() * v.y() - u.y() * v.x(); }

// Signed angle from `from` to `to`.
double signed_angle(const Point2& from, const Point2& to) {
    return std::atan2(cross(from, to), from.dot(to));
}

double wrap_angle(double x) { return std::remainder(x, 2.0 * std::numbers::pi); }

}  // namespace

Ray::Ray(Point2 origin, Point2 direction) : origin_(std::move(origin)) {
    const double len = direction.norm();
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw DomainError("ray direction must be a nonzero finite vector");
    }
    direction_ = direction / len;
}

Ray reflect_step(const Ray& ray, const Ellipse& table) {
    const Point2& o = ray.origin();
    const Point2& d = ray.direction();
    const double ia2 = 1.0 / (table.a() * table.a());
    const double ib2 = 1.0 / (table.b() * table.b());
    const double A = d.x() * d.x() * ia2 + d.y() * d.y() * ib2;
    const double B = 2.0 * (o.x() * d.x() * ia2 + o.y() * d.y() * ib2);
    const double C = table.level(o);
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) {
        throw GeometryError("reflect_step: ray misses the table");
    }
    // q-form keeps the near root (~0 when starting on the table) from cancelling.
    const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
    double far = q / A;
    if (q != 0.0) {
        far = std::max(far, C / q);
    }
    const double scale = std::max(table.a(), table.b());
    if (!(far > 1e-10 * scale)) {
        throw GeometryError("reflect_step: ray is tangent to the table");
    }
    const Point2 hit = o + far * d;
    const Point2 normal = table.normal_at(hit).normalized();
    return {hit, d - 2.0 * d.dot(normal) * normal};
}

TraceResult trace_closure(const Ray& start, const Ellipse& table, int n) {
    if (n < 3) {
        throw DomainError("trace_closure needs n >= 3");
    }
    std::vector<Point2> pts{start.origin()};
    Ray ray = start;
    for (int i = 0; i < n; ++i) {
        ray = reflect_step(ray, table);
        if (i + 1 < n) {
            pts.push_back(ray.origin());
        }
    }
    const double err = (ray.origin() - start.origin()).norm() + (ray.direction() - start.direction()).norm();
    return {Polygon(std::move(pts)), err};
}

double tangency_residual(const Point2& p, const Point2& q, const Ellipse& conic) {
    const Point2 edge = q - p;
    if (edge.norm() == 0.0) {
        throw GeometryError("tangency_residual: p == q");
    }
    // Line {x : nrm . x = h}; tangent to the ellipse iff a^2 nx^2 + b^2 ny^2 = h^2.
    const Point2 nrm = Point2(edge.y(), -edge.x()).normalized();
    const double h = nrm.dot(p);
    const double dual = conic.a() * conic.a() * nrm.x() * nrm.x() + conic.b() * conic.b() * nrm.y() * nrm.y();
    const double scale = std::max(conic.a(), conic.b());
    if (std::abs(h) > 1e-12 * scale) {
        return std::abs(dual / (h * h) - 1.0);
    }
    // Line through the centre: no ux + vy = 1 form, use the homogeneous one.
    return std::abs(dual - h * h);
}

double max_tangency_residual(const Polygon& poly, const Ellipse& conic) {
    double worst = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        worst = std::max(worst, tangency_residual(poly[i], poly[i + 1], conic));
    }
    return worst;
}

double reflection_residual(const Polygon& poly, const Ellipse& table) {
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    double worst = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        if (std::abs(table.level(p)) > 1e-8) {
            throw DomainError("reflection_residual: vertex off the table");
        }
        const Point2 grad = table.normal_at(p);
        const Point2 tangent = Point2(-grad.y(), grad.x()).normalized();
        const Point2 incoming = (p - poly[i - 1]).normalized();
        const Point2 outgoing = (poly[i + 1] - p).normalized();
        // Mirror law: angle(incoming, tangent) == angle(tangent, outgoing).
        const double mismatch = signed_angle(incoming, tangent) - signed_angle(tangent, outgoing);
        worst = std::max(worst, std::abs(wrap_angle(mismatch)));
    }
    return worst;
}

}  // namespace poncelet

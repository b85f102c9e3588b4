#include "poncelet/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

std::ptrdiff_t wrap(std::ptrdiff_t i, std::size_t n) {
    const auto sn = static_cast<std::ptrdiff_t>(n);
    return ((i % sn) + sn) % sn;
}

void require_triangle(const Polygon& tri) {
    if (tri.size() != 3) {
        throw GeometryError("triangle expected");
    }
}

}  // namespace

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw GeometryError("polygon needs at least 3 vertices");
    }
    for (const auto& v : vertices_) {
        if (!v.allFinite()) {
            throw GeometryError("polygon vertex is not finite");
        }
    }
    const double min_sep = 1e-12 * diameter();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& next = vertices_[(i + 1) % vertices_.size()];
        if ((next - vertices_[i]).norm() <= min_sep) {
            throw GeometryError("zero-length polygon edge");
        }
    }
}

const Point2& Polygon::operator[](std::ptrdiff_t i) const {
    return vertices_[static_cast<std::size_t>(wrap(i, vertices_.size()))];
}

Polygon Polygon::scaled(double sx, double sy) const {
    std::vector<Point2> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) {
        out.emplace_back(sx * v.x(), sy * v.y());
    }
    return Polygon(std::move(out));
}

double Polygon::diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
            d = std::max(d, (vertices_[i] - vertices_[j]).norm());
        }
    }
    return d;
}

std::vector<double> internal_cosines(const Polygon& poly) {
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    std::vector<double> out;
    out.reserve(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Point2 back = poly[i - 1] - poly[i];
        const Point2 fwd = poly[i + 1] - poly[i];
        const double len = back.norm() * fwd.norm();
        if (len == 0.0) {
            throw GeometryError("zero-length polygon edge");
        }
        out.push_back(back.dot(fwd) / len);
    }
    return out;
}

double perimeter(const Polygon& poly) {
    double sum = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        sum += (poly[i + 1] - poly[i]).norm();
    }
    return sum;
}

double signed_area(const Point2& p, const Point2& q, const Point2& r) {
    const Point2 u = q - p;
    const Point2 v = r - p;
    return 0.5 * (u.x() * v.y() - u.y() * v.x());
}

TriangleRadii triangle_radii(const Polygon& tri) {
    require_triangle(tri);
    const double area = std::abs(signed_area(tri[0], tri[1], tri[2]));
    const double l0 = (tri[1] - tri[2]).norm();
    const double l1 = (tri[2] - tri[0]).norm();
    const double l2 = (tri[0] - tri[1]).norm();
    if (area <= 1e-14 * (l0 * l0 + l1 * l1 + l2 * l2)) {
        throw GeometryError("degenerate (collinear) triangle");
    }
    return {2.0 * area / (l0 + l1 + l2), l0 * l1 * l2 / (4.0 * area)};
}

double dihedral_match_distance(const Polygon& p, const Polygon& q) {
    if (p.size() != q.size()) {
        throw GeometryError("polygons differ in vertex count");
    }
    const auto n = static_cast<std::ptrdiff_t>(p.size());
    double best = std::numeric_limits<double>::infinity();
    for (int dir : {1, -1}) {
        for (std::ptrdiff_t shift = 0; shift < n; ++shift) {
            double sum = 0.0;
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                sum += (p[i] - q[shift + dir * i]).squaredNorm();
            }
            best = std::min(best, sum);
        }
    }
    return best;
}

}  // namespace poncelet

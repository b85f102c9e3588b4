#include "poncelet/families.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

constexpr double kOnConicTol = 1e-9;

void require_acute(const Polygon& tri) {
    for (double c : internal_cosines(tri)) {
        if (!(c > 0.0)) {
            throw DomainError("triangle is not acute");
        }
    }
}

void check_turning(int n, int tau) {
    if (n < 3) {
        throw DomainError("periodic family needs n >= 3");
    }
    if (tau < 1) {
        throw DomainError("turning number must be >= 1");
    }
    if (std::gcd(n, tau) != 1) {
        throw DomainError("n and tau must be coprime");
    }
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Incircle: return "incircle";
        case FamilyKind::Confocal: return "confocal";
        case FamilyKind::Circumcircle: return "circumcircle";
        case FamilyKind::Excentral: return "excentral";
        case FamilyKind::BilliardN: return "billiard";
    }
    return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
    for (auto kind : {FamilyKind::Incircle, FamilyKind::Confocal, FamilyKind::Circumcircle,
                      FamilyKind::Excentral, FamilyKind::BilliardN}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

void FamilySpec::validate() const {
    const Ellipse axes(a, b);
    if (kind == FamilyKind::BilliardN) {
        check_turning(n, tau);
        if (a < b) {
            throw DomainError("billiard caustic needs a >= b; swap axes first");
        }
    }
}

Polygon incircle_triangle(double a, double b, double t) {
    const Ellipse outer(a, b);
    const double c2 = outer.c_sq();
    const double ct = std::cos(t);
    const double st = std::sin(t);
    const double ab = a + b;
    const double w1 = std::sqrt(c2 * ab * ab * ct * ct + 2.0 * a * b * b * b + b * b * b * b);
    const double w2 = -a * b / ((c2 * ct * ct + b * b) * ab);
    return Polygon({
        {a * ct, b * st},
        {w2 * (a * a * ct - w1 * st), w2 * (b * b * st + w1 * ct)},
        {w2 * (a * a * ct + w1 * st), w2 * (b * b * st - w1 * ct)},
    });
}

Polygon confocal_triangle(double a, double b, double t) {
    return incircle_triangle(a, b, t).scaled(confocal_scale(a, b), 1.0);
}

Polygon circumcircle_triangle(double a, double b, double phi) {
    const Ellipse caustic(a, b);
    const double c2 = caustic.c_sq();
    const double ab = a + b;
    const double u = std::cos(phi);
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    // The (a+b) factor is squared here; with a single power the vertices
    // leave the circle of radius a+b.
    const double radicand = a * a * a * (a + 2.0 * b) - c2 * ab * ab * u * u;
    if (radicand < -1e-12 * ab * ab * ab * ab) {
        throw DomainError("circumcircle parametrization radicand is negative");
    }
    const double w = std::sqrt(std::max(0.0, radicand));
    const double den = (u * u - 1.0) * a * a - b * b * u * u;
    const double mirror = std::sin(phi) < 0.0 ? -1.0 : 1.0;
    return Polygon({
        {ab * u, mirror * ab * s},
        {(b * b * u - s * w) * a / den, mirror * (s * a * a + w * u) * b / den},
        {(b * b * u + s * w) * a / den, mirror * (s * a * a - w * u) * b / den},
    });
}

Polygon excentral_family_triangle(double a, double b, double phi) {
    return circumcircle_triangle(a, b, phi).scaled(excentral_scale(a, b), 1.0);
}

Polygon excentral_of(const Polygon& tri) {
    triangle_radii(tri);  // rejects non-triangles and collinear input
    const std::array<double, 3> len{
        (tri[1] - tri[2]).norm(),
        (tri[2] - tri[0]).norm(),
        (tri[0] - tri[1]).norm(),
    };
    std::vector<Point2> out;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const double w = -len[i] + len[j] + len[k];
        out.emplace_back((-len[i] * tri[i] + len[j] * tri[j] + len[k] * tri[k]) / w);
    }
    return Polygon(std::move(out));
}

Polygon orthic_of(const Polygon& tri) {
    triangle_radii(tri);
    require_acute(tri);
    std::vector<Point2> feet;
    for (int i = 0; i < 3; ++i) {
        const Point2& base = tri[i + 1];
        const Point2 dir = tri[i + 2] - base;
        feet.emplace_back(base + (tri[i] - base).dot(dir) / dir.squaredNorm() * dir);
    }
    return Polygon(std::move(feet));
}

Polygon outer_polygon(const Polygon& poly, const Ellipse& outer) {
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (std::abs(outer.level(poly[i])) > kOnConicTol) {
            throw DomainError("outer_polygon: vertex " + std::to_string(i) + " is off the outer ellipse");
        }
    }
    std::vector<Point2> out;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        // Tangent at p is {x : normal(p) . x = 1}.
        const Point2 n1 = outer.normal_at(poly[i]);
        const Point2 n2 = outer.normal_at(poly[i + 1]);
        const double det = n1.x() * n2.y() - n1.y() * n2.x();
        if (std::abs(det) <= 1e-12 * n1.norm() * n2.norm()) {
            throw GeometryError("outer_polygon: parallel tangents at consecutive vertices");
        }
        out.emplace_back((n2.y() - n1.y()) / det, (n1.x() - n2.x()) / det);
    }
    return Polygon(std::move(out));
}

UniversalMeasure universal_measure(double a_c, double b_c, int n, int tau) {
    const Ellipse caustic(a_c, b_c);
    check_turning(n, tau);
    if (a_c < b_c) {
        throw DomainError("billiard_periodic: caustic needs a_c >= b_c; swap axes first");
    }
    const EllipticModulusSq m_sq((a_c * a_c - b_c * b_c) / (a_c * a_c));
    const double K = complete_K(m_sq);
    const double step = 4.0 * tau * K / n;
    const double half_cn = jacobi_sn_cn_dn(0.5 * step, m_sq).cn;
    if (!(half_cn > 0.0)) {
        throw DomainError("universal-measure parametrization breaks down for this (n, tau)");
    }
    const double b = b_c / half_cn;
    const double a = std::sqrt(b * b + caustic.c_sq());
    return {m_sq, K, step, Ellipse(a, b)};
}

Polygon billiard_periodic(double a_c, double b_c, int n, int tau, double u) {
    const auto um = universal_measure(a_c, b_c, n, tau);
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const auto j = jacobi_sn_cn_dn(u + i * um.step, um.m_sq);
        pts.emplace_back(-um.outer.a() * j.sn, um.outer.b() * j.cn);
    }
    return Polygon(std::move(pts));
}

Ellipse solve_confocal_caustic(double alpha, double beta, int n, int tau) {
    const Ellipse outer(alpha, beta);
    check_turning(n, tau);
    if (!(alpha > beta)) {
        throw DomainError("solve_confocal_caustic needs alpha > beta");
    }
    if (2 * tau >= n) {
        throw NoSolutionError("no confocal caustic: cn(2 tau K / n) <= 0 for every caustic");
    }
    const double c2 = outer.c_sq();
    const double ratio = 2.0 * tau / n;
    auto g = [&](double b_c) {
        const double a_c = std::sqrt(b_c * b_c + c2);
        const EllipticModulusSq m_sq(c2 / (a_c * a_c));
        const double cn = jacobi_sn_cn_dn(ratio * complete_K(m_sq), m_sq).cn;
        return b_c / cn - beta;
    };

    // Near b_c = 0 the parameter m^2 rounds to 1.
    const double eps = 1e-6 * beta;
    const double lo = eps;
    const double hi = beta - eps;
    const double g_lo = g(lo);
    const double g_hi = g(hi);
    if (!(g_lo < 0.0 && g_hi > 0.0)) {
        throw NoSolutionError("no (" + std::to_string(n) + "," + std::to_string(tau) +
                              ")-periodic confocal caustic: no sign change");
    }
    auto converged = [](double x, double y) {
        return std::abs(x - y) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(x, y);
    };
    std::uintmax_t max_iter = 200;
    const auto [left, right] = boost::math::tools::bisect(g, lo, hi, converged, max_iter);
    const double left_res = std::abs(g(left));
    const double right_res = std::abs(g(right));
    const double b_c = left_res <= right_res ? left : right;
    if (std::min(left_res, right_res) > 1e-12 * beta) {
        throw NoSolutionError("confocal caustic bisection did not converge");
    }
    return {std::sqrt(b_c * b_c + c2), b_c};
}

double family_period(const FamilySpec& spec) {
    spec.validate();
    if (spec.kind == FamilyKind::BilliardN) {
        return 4.0 * universal_measure(spec.a, spec.b, spec.n, spec.tau).quarter_period;
    }
    return 2.0 * std::numbers::pi;
}

Polygon family_member(const FamilySpec& spec, double param) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::Incircle: return incircle_triangle(spec.a, spec.b, param);
        case FamilyKind::Confocal: return confocal_triangle(spec.a, spec.b, param);
        case FamilyKind::Circumcircle: return circumcircle_triangle(spec.a, spec.b, param);
        case FamilyKind::Excentral: return excentral_family_triangle(spec.a, spec.b, param);
        case FamilyKind::BilliardN: return billiard_periodic(spec.a, spec.b, spec.n, spec.tau, param);
    }
    throw DomainError("unknown family kind");
}

Ellipse family_outer(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::Incircle: return {spec.a, spec.b};
        case FamilyKind::Confocal: return {confocal_scale(spec.a, spec.b) * spec.a, spec.b};
        case FamilyKind::Circumcircle: return {spec.a + spec.b, spec.a + spec.b};
        case FamilyKind::Excentral: {
            const double R = spec.a + spec.b;
            return {excentral_scale(spec.a, spec.b) * R, R};
        }
        case FamilyKind::BilliardN: return universal_measure(spec.a, spec.b, spec.n, spec.tau).outer;
    }
    throw DomainError("unknown family kind");
}

Ellipse family_caustic(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::Incircle: {
            const double r = derived_radii(spec.a, spec.b).inradius;
            return {r, r};
        }
        case FamilyKind::Confocal: {
            const double r = derived_radii(spec.a, spec.b).inradius;
            return {confocal_scale(spec.a, spec.b) * r, r};
        }
        case FamilyKind::Circumcircle: return {spec.a, spec.b};
        case FamilyKind::Excentral: return {excentral_scale(spec.a, spec.b) * spec.a, spec.b};
        case FamilyKind::BilliardN: return {spec.a, spec.b};
    }
    throw DomainError("unknown family kind");
}

}  // namespace poncelet

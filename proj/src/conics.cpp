#include "poncelet/conics.hpp"

#include <algorithm>
#include <cmath>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

// Positive root of A x^2 + B x + C = 0 with A > 0, C < 0 (roots of opposite sign).
double positive_root(double A, double B, double C) {
    const double q = -0.5 * (B + std::copysign(std::sqrt(B * B - 4.0 * A * C), B));
    const double r1 = q / A;
    const double r2 = C / q;
    return std::max(r1, r2);
}

}  // namespace

Ellipse::Ellipse(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("ellipse semi-axes must be positive and finite");
    }
}

Point2 Ellipse::point_at(double t) const { return {a_ * std::cos(t), b_ * std::sin(t)}; }

double Ellipse::level(const Point2& p) const {
    const double x = p.x() / a_;
    const double y = p.y() / b_;
    return x * x + y * y - 1.0;
}

Point2 Ellipse::normal_at(const Point2& p) const {
    return {p.x() / (a_ * a_), p.y() / (b_ * b_)};
}

ConicPair::ConicPair(Ellipse outer, Ellipse caustic) : outer_(outer), caustic_(caustic) {
    if (!(caustic.a() < outer.a()) || !(caustic.b() < outer.b())) {
        throw DomainError("caustic must lie strictly inside the outer ellipse");
    }
}

bool ConicPair::is_confocal(double tol) const {
    const double scale = std::max(outer_.a() * outer_.a(), outer_.b() * outer_.b());
    return std::abs(outer_.c_sq() - caustic_.c_sq()) <= tol * scale;
}

double cayley_residual(const ConicPair& pair) {
    return pair.caustic().a() / pair.outer().a() + pair.caustic().b() / pair.outer().b() - 1.0;
}

DerivedRadii derived_radii(double a, double b) {
    const Ellipse e(a, b);
    return {a * b / (a + b), a + b, 0.5 * (a + b)};
}

double confocal_scale(double a, double b) {
    const Ellipse e(a, b);
    const double b3 = b * b * b;
    const double a3 = a * a * a;
    return std::sqrt((b3 * b + 2.0 * a * b3) / (a3 * a + 2.0 * b * a3));
}

double excentral_scale(double a, double b) {
    const Ellipse e(a, b);
    return std::sqrt((2.0 * b * b + a * b) / (2.0 * a * a + a * b));
}

double confocal_delta(double alpha, double beta) {
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    return std::sqrt(a2 * a2 - a2 * b2 + b2 * b2);
}

double r_over_R_confocal(double alpha, double beta) {
    const Ellipse e(alpha, beta);
    if (alpha == beta) {
        return 0.5;
    }
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    const double delta = confocal_delta(alpha, beta);
    const double gap = a2 - b2;
    return 2.0 * (delta - b2) * (a2 - delta) / (gap * gap);
}

Ellipse excentral_locus_axes(double alpha, double beta) {
    const Ellipse e(alpha, beta);
    const double delta = confocal_delta(alpha, beta);
    return {(beta * beta + delta) / alpha, (alpha * alpha + delta) / beta};
}

Ellipse circumcircle_caustic_for_confocal(double alpha, double beta) {
    const Ellipse e(alpha, beta);
    // beta a^2 + 2 (beta^2 - alpha^2) a - alpha^2 beta = 0
    const double a = positive_root(beta, 2.0 * (beta * beta - alpha * alpha), -alpha * alpha * beta);
    return {a, beta};
}

Ellipse incircle_outer_for_confocal(double alpha, double beta) {
    const Ellipse e(alpha, beta);
    // alpha^2 a^2 + 2 beta (alpha^2 - beta^2) a - beta^4 = 0
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    const double a = positive_root(a2, 2.0 * beta * (a2 - b2), -b2 * b2);
    return {a, beta};
}

}  // namespace poncelet

#include "poncelet/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

constexpr int kMaxAgmDepth = 32;
constexpr double kAgmGap = 1e-16;

}  // namespace

EllipticModulusSq::EllipticModulusSq(double m_sq) : m_sq_(m_sq) {
    if (!(m_sq >= 0.0)) {
        throw DomainError("elliptic parameter m^2 must be non-negative");
    }
    if (m_sq >= 1.0) {
        throw DomainError("elliptic parameter m^2 >= 1: caustic degenerates to segment");
    }
}

double complete_K(EllipticModulusSq m_sq) {
    double a = 1.0;
    double b = std::sqrt(1.0 - m_sq.value());
    for (int i = 0; i < kMaxAgmDepth && std::abs(a - b) > kAgmGap * a; ++i) {
        const double next_a = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next_a;
    }
    return std::numbers::pi / (a + b);
}

JacobiValues jacobi_sn_cn_dn(double u, EllipticModulusSq m_sq) {
    const double m = m_sq.value();
    // remainder() is odd in u, which keeps sn odd and cn even after reduction.
    const double period = 4.0 * complete_K(m_sq);
    u = std::remainder(u, period);

    std::array<double, kMaxAgmDepth + 1> a{};
    std::array<double, kMaxAgmDepth + 1> c{};
    a[0] = 1.0;
    double b = std::sqrt(1.0 - m);
    c[0] = std::sqrt(m);
    int depth = 0;
    while (depth < kMaxAgmDepth && std::abs(c[depth]) > kAgmGap) {
        a[depth + 1] = 0.5 * (a[depth] + b);
        c[depth + 1] = 0.5 * (a[depth] - b);
        b = std::sqrt(a[depth] * b);
        ++depth;
    }

    double phi = std::ldexp(a[depth] * u, depth);
    for (int n = depth; n > 0; --n) {
        phi = 0.5 * (phi + std::asin(c[n] / a[n] * std::sin(phi)));
    }

    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    return {sn, cn, std::sqrt(1.0 - m * sn * sn)};
}

}  // namespace poncelet

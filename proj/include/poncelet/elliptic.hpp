#pragma once

namespace poncelet {

/// Jacobi parameter m^2 (square of the elliptic modulus), restricted to [0, 1).
class EllipticModulusSq {
public:
    /// Throws DomainError when m_sq < 0 or m_sq >= 1.
    explicit EllipticModulusSq(double m_sq);

    double value() const noexcept { return m_sq_; }

private:
    double m_sq_;
};

/// Complete elliptic integral of the first kind, K(m) = pi / (2 AGM(1, sqrt(1 - m^2))).
double complete_K(EllipticModulusSq m_sq);

struct JacobiValues {
    double sn;
    double cn;
    double dn;
};

/// sn, cn and dn by the AGM / descending Landen phase recursion.
/// The argument is first reduced modulo 4K.
JacobiValues jacobi_sn_cn_dn(double u, EllipticModulusSq m_sq);

}  // namespace poncelet

#pragma once

#include <Eigen/Core>

namespace poncelet {

using Point2 = Eigen::Vector2d;

/// Origin-centred, axis-aligned ellipse x^2/a^2 + y^2/b^2 = 1.
///
/// Semi-axes are positional (a along x, b along y) and not sorted: affine
/// images may make the x semi-axis the minor one, in which case c_sq() < 0
/// and the foci sit on the y axis.
class Ellipse {
public:
    /// Throws DomainError unless a > 0 and b > 0.
    Ellipse(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c_sq() const noexcept { return a_ * a_ - b_ * b_; }
    bool is_circle() const noexcept { return a_ == b_; }

    Point2 point_at(double t) const;
    /// x^2/a^2 + y^2/b^2 - 1; zero on the curve, negative inside.
    double level(const Point2& p) const;
    /// Gradient of the level function at p (outward normal direction, unnormalised).
    Point2 normal_at(const Point2& p) const;
    Ellipse scaled(double sx, double sy) const { return {sx * a_, sy * b_}; }

private:
    double a_;
    double b_;
};

/// Outer conic and a concentric caustic strictly inside it.
class ConicPair {
public:
    /// Throws DomainError unless caustic.a < outer.a and caustic.b < outer.b.
    ConicPair(Ellipse outer, Ellipse caustic);

    const Ellipse& outer() const noexcept { return outer_; }
    const Ellipse& caustic() const noexcept { return caustic_; }
    bool is_confocal(double tol = 1e-12) const;

private:
    Ellipse outer_;
    Ellipse caustic_;
};

/// a_c/a + b_c/b - 1; zero iff the pair carries a family of Poncelet triangles.
double cayley_residual(const ConicPair& pair);

struct DerivedRadii {
    double inradius;                     ///< r = ab/(a+b), incircle family
    double circumradius;                 ///< R = a+b, circumcircle family with caustic (a, b)
    double incircle_family_circumradius; ///< (a+b)/2, invariant circumradius of the incircle family
};

DerivedRadii derived_radii(double a, double b);

/// Scale along x taking the incircle family of outer (a, b) to a confocal family.
double confocal_scale(double a, double b);

/// Scale along x taking the circumcircle family with caustic (a, b) to an excentral family.
double excentral_scale(double a, double b);

/// sqrt(alpha^4 - alpha^2 beta^2 + beta^4).
double confocal_delta(double alpha, double beta);

/// Invariant r/R of the 3-periodics of the confocal pair with outer (alpha, beta).
/// At alpha == beta the removable singularity is replaced by its limit 1/2.
double r_over_R_confocal(double alpha, double beta);

/// Ellipse traced by the excenters of the confocal 3-periodics with outer (alpha, beta).
Ellipse excentral_locus_axes(double alpha, double beta);

/// Inverse of Lemma-2 scaling: the caustic (a, b) of the circumcircle family whose
/// excentral image has parent confocal outer (alpha, beta), i.e. b = beta and
/// excentral_scale(a, b) * a = alpha.
Ellipse circumcircle_caustic_for_confocal(double alpha, double beta);

/// Inverse of the confocal scaling: incircle-family outer (a, b) with b = beta and
/// confocal_scale(a, b) * a = alpha.
Ellipse incircle_outer_for_confocal(double alpha, double beta);

}  // namespace poncelet

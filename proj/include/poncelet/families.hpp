#pragma once

#include <optional>
#include <string_view>

#include "poncelet/conics.hpp"
#include "poncelet/elliptic.hpp"
#include "poncelet/polygon.hpp"

namespace poncelet {

enum class FamilyKind { Incircle, Confocal, Circumcircle, Excentral, BilliardN };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// A one-parameter polygon family.
///
/// Meaning of (a, b) depends on the kind:
///  - Incircle, Confocal: semi-axes of the incircle family's outer ellipse
///    (the confocal family is its image under confocal_scale).
///  - Circumcircle, Excentral: semi-axes of the circumcircle family's caustic.
///  - BilliardN: semi-axes of the confocal caustic, a >= b; the outer
///    ellipse follows from the universal-measure closure.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Incircle;
    double a = 1.0;
    double b = 1.0;
    int n = 3;
    int tau = 1;

    /// Throws DomainError on invalid parameters.
    void validate() const;
};

// Triangle families -----------------------------------------------------------

/// Incircle-family triangle with P1 = (a cos t, b sin t); all sides tangent to
/// the circle of radius ab/(a+b).
Polygon incircle_triangle(double a, double b, double t);

/// diag(confocal_scale(a, b), 1) applied to incircle_triangle(a, b, t).
Polygon confocal_triangle(double a, double b, double t);

/// Triangle inscribed in the circle of radius a+b with P1 at polar angle phi,
/// circumscribing the ellipse (a, b). The lower half-circle is produced by
/// mirroring the upper-branch construction in the x axis.
Polygon circumcircle_triangle(double a, double b, double phi);

/// diag(excentral_scale(a, b), 1) applied to circumcircle_triangle(a, b, phi).
Polygon excentral_family_triangle(double a, double b, double phi);

/// Vertex i is the excenter opposite vertex i.
Polygon excentral_of(const Polygon& tri);

/// Feet of the three altitudes; vertex i is the foot from vertex i.
/// Throws DomainError for non-acute input.
Polygon orthic_of(const Polygon& tri);

/// Vertex i is the intersection of the tangents to `outer` at poly[i] and poly[i+1].
Polygon outer_polygon(const Polygon& poly, const Ellipse& outer);

// Universal-measure N-periodics ------------------------------------------------

struct UniversalMeasure {
    EllipticModulusSq m_sq;
    double quarter_period;  ///< K(m)
    double step;            ///< 4 tau K / n
    Ellipse outer;
};

/// Closure data of the (n, tau) billiard family with caustic (a_c, b_c).
/// Throws DomainError for a_c < b_c, n < 3, tau < 1, gcd(n, tau) != 1, or when
/// cn(step/2) <= 0.
UniversalMeasure universal_measure(double a_c, double b_c, int n, int tau);

/// P_i = (-a sn(u + i step), b cn(u + i step)), i = 1..n.
Polygon billiard_periodic(double a_c, double b_c, int n, int tau, double u);

/// Caustic confocal with the outer (alpha, beta) carrying an (n, tau)
/// periodic family. Throws NoSolutionError when none exists.
Ellipse solve_confocal_caustic(double alpha, double beta, int n, int tau);

// Family dispatch ---------------------------------------------------------------

/// Length of one full sweep of the family parameter: 2 pi, or 4K for BilliardN.
double family_period(const FamilySpec& spec);
Polygon family_member(const FamilySpec& spec, double param);
/// Conic every member is inscribed in.
Ellipse family_outer(const FamilySpec& spec);
/// Conic every member's sides are tangent to.
Ellipse family_caustic(const FamilySpec& spec);

}  // namespace poncelet

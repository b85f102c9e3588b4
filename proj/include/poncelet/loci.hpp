#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "poncelet/families.hpp"

namespace poncelet {

/// Point (c1, c2, c3) of cosine space, each |ci| < 1.
class CosineTriple {
public:
    /// Throws DomainError unless every |ci| < 1.
    CosineTriple(double c1, double c2, double c3);

    /// Internal cosines of a triangle; also checks that the three angles sum
    /// to pi within 1e-9.
    static CosineTriple of_triangle(const Polygon& tri);

    double c1() const noexcept { return c_[0]; }
    double c2() const noexcept { return c_[1]; }
    double c3() const noexcept { return c_[2]; }
    const Eigen::Vector3d& vec() const noexcept { return c_; }

private:
    Eigen::Vector3d c_;
};

/// Orthonormal basis of the plane orthogonal to (1, 1, 1):
/// u_hat = (1, -1, 0)/sqrt(2) and v_hat = (1, 1, 1) x u_hat normalised,
/// i.e. (1, 1, -2)/sqrt(6). This orientation is the one in which the
/// plectrum cubic below vanishes on the swept triples.
struct PlaneBasis {
    Eigen::Vector3d u_hat;
    Eigen::Vector3d v_hat;

    static const PlaneBasis& standard();
};

struct PlanePoint {
    double u;
    double v;
};

PlanePoint plane_project(const Eigen::Vector3d& p);
PlanePoint plane_project(const CosineTriple& triple);

/// 3 sqrt(6) (3u^2 - v^2) v - 9 (k - 3)(u^2 + v^2) + (2k - 3)(k + 3)^2
double cubic_residual(double u, double v, double k);

/// 2 c1 c2 (c1 + c2) - 2 (c1^2 + c2^2) - 2 (k + 1) c1 c2 + 2k (c1 + c2) + 1 - k^2
double pick_residual(double c1, double c2, double k);

struct SphereTiteicaResiduals {
    double sphere;   ///< c1^2 + c2^2 + c3^2 + 2k' - 1
    double titeica;  ///< c1 c2 c3 - k'
};

SphereTiteicaResiduals sphere_titeica_residuals(const CosineTriple& triple, double k_prime);

/// 2 c1 c2 c3 + c1^2 + c2^2 + c3^2 - 1 (k' eliminated).
double union_residual(const CosineTriple& triple);

/// Componentwise natural log; throws DomainError if any ci <= 0.
Eigen::Vector3d log_cosine(const CosineTriple& triple);

enum class LocusSpace { Cosine, LogCosine };

struct LocusSample {
    double param;
    CosineTriple triple;
    Eigen::Vector3d coords;  ///< cosines, or their logs in LogCosine space
    PlanePoint plane;        ///< projection of coords
    std::optional<double> cubic;
    std::optional<double> pick;
    std::optional<double> sphere;
    std::optional<double> titeica;
    std::optional<double> union_surface;
};

/// n_samples points over one family period (closed-open grid), in parameter
/// order, with every applicable residual attached. Triangle families only;
/// LogCosine needs an acute family (Circumcircle or Excentral).
std::vector<LocusSample> sample_locus(const FamilySpec& spec, int n_samples, LocusSpace space);

/// Parametrised curve in R^d.
using CurveFn = std::function<Eigen::VectorXd(double)>;

/// Projected (u, v) cosine (or log-cosine) curve of a triangle family.
CurveFn plane_curve(const FamilySpec& spec, LocusSpace space = LocusSpace::Cosine);

/// Raw cosine-triple curve of a triangle family.
CurveFn cosine_space_curve(const FamilySpec& spec);

/// sup over samples of A of the distance to the continuous curve B: the
/// sampled local minima of the distance to B that lie within one chord of the
/// nearest sample are refined by Brent minimisation over the neighbouring
/// parameter bracket.
double directed_hausdorff(const CurveFn& a, double period_a, const CurveFn& b, double period_b,
                          int n_samples = 2048);

double symmetric_hausdorff(const CurveFn& a, double period_a, const CurveFn& b, double period_b,
                           int n_samples = 2048);

}  // namespace poncelet

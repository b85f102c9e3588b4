#include "poncelet/loci.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Geometry>
#include <boost/math/tools/minima.hpp>

#include "poncelet/errors.hpp"
#include "poncelet/invariants.hpp"

namespace poncelet {

namespace {

bool is_acute_family(FamilyKind kind) {
    return kind == FamilyKind::Circumcircle || kind == FamilyKind::Excentral;
}

bool has_cubic(const FamilySpec& spec) {
    return spec.kind == FamilyKind::Incircle || spec.kind == FamilyKind::Confocal ||
           (spec.kind == FamilyKind::BilliardN && spec.n == 3);
}

void require_triangle_family(const FamilySpec& spec) {
    spec.validate();
    if (spec.kind == FamilyKind::BilliardN && spec.n != 3) {
        throw DomainError("cosine-space loci are defined for triangle families only");
    }
}

}  // namespace

CosineTriple::CosineTriple(double c1, double c2, double c3) : c_(c1, c2, c3) {
    for (double c : {c1, c2, c3}) {
        if (!(std::abs(c) < 1.0)) {
            throw DomainError("cosine triple component outside (-1, 1)");
        }
    }
}

CosineTriple CosineTriple::of_triangle(const Polygon& tri) {
    if (tri.size() != 3) {
        throw GeometryError("cosine triple needs a triangle");
    }
    const auto c = internal_cosines(tri);
    const double angle_sum = std::acos(c[0]) + std::acos(c[1]) + std::acos(c[2]);
    if (std::abs(angle_sum - std::numbers::pi) > 1e-9) {
        throw GeometryError("triangle angles do not sum to pi");
    }
    return {c[0], c[1], c[2]};
}

const PlaneBasis& PlaneBasis::standard() {
    static const PlaneBasis basis = [] {
        const Eigen::Vector3d ones(1.0, 1.0, 1.0);
        const Eigen::Vector3d u = ones.cross(Eigen::Vector3d::UnitZ()).normalized();
        const Eigen::Vector3d v = ones.cross(u).normalized();
        return PlaneBasis{u, v};
    }();
    return basis;
}

PlanePoint plane_project(const Eigen::Vector3d& p) {
    const auto& basis = PlaneBasis::standard();
    return {p.dot(basis.u_hat), p.dot(basis.v_hat)};
}

PlanePoint plane_project(const CosineTriple& triple) { return plane_project(triple.vec()); }

double cubic_residual(double u, double v, double k) {
    const double u2 = u * u;
    const double v2 = v * v;
    return 3.0 * std::sqrt(6.0) * (3.0 * u2 - v2) * v - 9.0 * (k - 3.0) * (u2 + v2) +
           (2.0 * k - 3.0) * (k + 3.0) * (k + 3.0);
}

double pick_residual(double c1, double c2, double k) {
    return 2.0 * c1 * c2 * (c1 + c2) - 2.0 * (c1 * c1 + c2 * c2) - 2.0 * (k + 1.0) * c1 * c2 +
           2.0 * k * (c1 + c2) + 1.0 - k * k;
}

SphereTiteicaResiduals sphere_titeica_residuals(const CosineTriple& triple, double k_prime) {
    const auto& c = triple.vec();
    return {c.squaredNorm() + 2.0 * k_prime - 1.0, c.prod() - k_prime};
}

double union_residual(const CosineTriple& triple) {
    const auto& c = triple.vec();
    return 2.0 * c.prod() + c.squaredNorm() - 1.0;
}

Eigen::Vector3d log_cosine(const CosineTriple& triple) {
    const auto& c = triple.vec();
    if (!(c.minCoeff() > 0.0)) {
        throw DomainError("log-cosine needs an acute triangle");
    }
    return c.array().log().matrix();
}

std::vector<LocusSample> sample_locus(const FamilySpec& spec, int n_samples, LocusSpace space) {
    require_triangle_family(spec);
    if (n_samples < 3) {
        throw DomainError("sample_locus needs at least 3 samples");
    }
    if (space == LocusSpace::LogCosine && !is_acute_family(spec.kind)) {
        throw DomainError("log-cosine locus needs an acute family (circumcircle or excentral)");
    }
    const double period = family_period(spec);
    const auto k = closed_form_target(spec, Quantity::CosineSum);
    const auto k_prime = closed_form_target(spec, Quantity::CosineProduct);

    std::vector<LocusSample> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double t = period * i / n_samples;
        const auto triple = CosineTriple::of_triangle(family_member(spec, t));
        const Eigen::Vector3d coords = space == LocusSpace::LogCosine ? log_cosine(triple) : triple.vec();
        LocusSample s{t, triple, coords, plane_project(coords), {}, {}, {}, {}, {}};
        if (has_cubic(spec) && k) {
            const auto cosine_plane = plane_project(triple);
            s.cubic = cubic_residual(cosine_plane.u, cosine_plane.v, *k);
            s.pick = pick_residual(triple.c1(), triple.c2(), *k);
        }
        if (is_acute_family(spec.kind) && k_prime) {
            const auto st = sphere_titeica_residuals(triple, *k_prime);
            s.sphere = st.sphere;
            s.titeica = st.titeica;
            s.union_surface = union_residual(triple);
        }
        out.push_back(std::move(s));
    }
    return out;
}

CurveFn plane_curve(const FamilySpec& spec, LocusSpace space) {
    require_triangle_family(spec);
    return [spec, space](double t) {
        const auto triple = CosineTriple::of_triangle(family_member(spec, t));
        const auto p = plane_project(space == LocusSpace::LogCosine ? log_cosine(triple) : triple.vec());
        return Eigen::VectorXd(Eigen::Vector2d(p.u, p.v));
    };
}

CurveFn cosine_space_curve(const FamilySpec& spec) {
    require_triangle_family(spec);
    return [spec](double t) {
        return Eigen::VectorXd(CosineTriple::of_triangle(family_member(spec, t)).vec());
    };
}

double directed_hausdorff(const CurveFn& a, double period_a, const CurveFn& b, double period_b, int n_samples) {
    if (n_samples < 8) {
        throw DomainError("Hausdorff comparison needs at least 8 samples");
    }
    std::vector<Eigen::VectorXd> sa;
    std::vector<Eigen::VectorXd> sb;
    sa.reserve(static_cast<std::size_t>(n_samples));
    sb.reserve(static_cast<std::size_t>(n_samples));
    const double ha = period_a / n_samples;
    const double hb = period_b / n_samples;
    for (int i = 0; i < n_samples; ++i) {
        sa.push_back(a(ha * i));
        sb.push_back(b(hb * i));
    }

    // Largest gap between consecutive samples of b bounds how far a sampled
    // local minimum can sit from the true one.
    double chord = 0.0;
    for (std::size_t j = 0; j < sb.size(); ++j) {
        chord = std::max(chord, (sb[(j + 1) % sb.size()] - sb[j]).norm());
    }

    const std::size_t nb = sb.size();
    std::vector<double> d2(nb);
    double worst = 0.0;
    for (const auto& p : sa) {
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nb; ++j) {
            d2[j] = (sb[j] - p).squaredNorm();
            best_d2 = std::min(best_d2, d2[j]);
        }
        // b may fold back on itself, so the nearest sample need not bracket the
        // nearest point; refine every local minimum that could still win.
        const double reach = std::sqrt(best_d2) + chord;
        double best = best_d2;
        auto dist2 = [&](double t) { return (b(t) - p).squaredNorm(); };
        for (std::size_t j = 0; j < nb; ++j) {
            const double prev = d2[(j + nb - 1) % nb];
            const double next = d2[(j + 1) % nb];
            if (d2[j] > prev || d2[j] > next || d2[j] > reach * reach) continue;
            const double t0 = hb * static_cast<double>(j);
            std::uintmax_t iters = 100;
            const auto [t_star, d2_star] = boost::math::tools::brent_find_minima(
                dist2, t0 - hb, t0 + hb, std::numeric_limits<double>::digits, iters);
            (void)t_star;
            best = std::min(best, d2_star);
        }
        worst = std::max(worst, std::sqrt(best));
    }
    return worst;
}

double symmetric_hausdorff(const CurveFn& a, double period_a, const CurveFn& b, double period_b, int n_samples) {
    return std::max(directed_hausdorff(a, period_a, b, period_b, n_samples),
                    directed_hausdorff(b, period_b, a, period_a, n_samples));
}

}  // namespace poncelet

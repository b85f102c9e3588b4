#include "poncelet/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

Quantity headline_quantity(FamilyKind kind) {
    return kind == FamilyKind::Circumcircle || kind == FamilyKind::Excentral ? Quantity::CosineProduct
                                                                             : Quantity::CosineSum;
}

// Minimise f over [lo, hi] and return the minimum value.
double refine_min(const std::function<double(double)>& f, double lo, double hi) {
    std::uintmax_t iters = 200;
    const auto [x, fx] = boost::math::tools::brent_find_minima(f, lo, hi, std::numeric_limits<double>::digits, iters);
    (void)x;
    return fx;
}

}  // namespace

double cosine_sum_target(double a, double b) {
    const Ellipse e(a, b);
    return 1.0 + 2.0 * a * b / ((a + b) * (a + b));
}

double cosine_product_target(double a, double b) {
    const Ellipse e(a, b);
    return a * b / (2.0 * (a + b) * (a + b));
}

CosineRange cosine_extremes(double a, double b, ExtremesKind kind) {
    const Ellipse e(a, b);
    const double s = a + b;
    double lo = 0.0;
    double hi = 0.0;
    if (kind == ExtremesKind::IncircleFamily) {
        lo = 1.0 - 2.0 * a * a / (s * s);
        hi = 1.0 - 2.0 * b * b / (s * s);
    } else {
        lo = b / s;
        hi = a / s;
    }
    return {std::min(lo, hi), std::max(lo, hi)};
}

std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::CosineSum: return "cosine_sum";
        case Quantity::CosineProduct: return "cosine_product";
        case Quantity::Perimeter: return "perimeter";
        case Quantity::OrthicInradius: return "orthic_inradius";
        case Quantity::OrthicCircumradius: return "orthic_circumradius";
    }
    return "unknown";
}

std::vector<Quantity> applicable_quantities(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Incircle: return {Quantity::CosineSum};
        case FamilyKind::Confocal: return {Quantity::CosineSum, Quantity::Perimeter};
        case FamilyKind::Circumcircle:
            return {Quantity::CosineProduct, Quantity::OrthicInradius, Quantity::OrthicCircumradius};
        case FamilyKind::Excentral: return {Quantity::CosineProduct};
        case FamilyKind::BilliardN: return {Quantity::CosineSum, Quantity::Perimeter};
    }
    return {};
}

std::optional<double> closed_form_target(const FamilySpec& spec, Quantity q) {
    spec.validate();
    switch (q) {
        case Quantity::CosineSum:
            if (spec.kind == FamilyKind::Incircle || spec.kind == FamilyKind::Confocal) {
                return cosine_sum_target(spec.a, spec.b);
            }
            if (spec.kind == FamilyKind::BilliardN && spec.n == 3) {
                const Ellipse outer = family_outer(spec);
                return 1.0 + r_over_R_confocal(outer.a(), outer.b());
            }
            if (spec.kind == FamilyKind::BilliardN && spec.n == 4) {
                return 0.0;
            }
            return std::nullopt;
        case Quantity::CosineProduct:
            if (spec.kind == FamilyKind::Circumcircle || spec.kind == FamilyKind::Excentral) {
                return cosine_product_target(spec.a, spec.b);
            }
            return std::nullopt;
        case Quantity::OrthicInradius:
            // r_h = 2 R cosA cosB cosC with R = a + b.
            if (spec.kind == FamilyKind::Circumcircle) {
                return 2.0 * (spec.a + spec.b) * cosine_product_target(spec.a, spec.b);
            }
            return std::nullopt;
        case Quantity::OrthicCircumradius:
            // Orthic circumcircle is the nine-point circle, radius R/2.
            if (spec.kind == FamilyKind::Circumcircle) {
                return 0.5 * (spec.a + spec.b);
            }
            return std::nullopt;
        case Quantity::Perimeter: return std::nullopt;
    }
    return std::nullopt;
}

double evaluate_quantity(const Polygon& poly, Quantity q) {
    switch (q) {
        case Quantity::CosineSum: {
            const auto c = internal_cosines(poly);
            double s = 0.0;
            for (double x : c) s += x;
            return s;
        }
        case Quantity::CosineProduct: {
            const auto c = internal_cosines(poly);
            double p = 1.0;
            for (double x : c) p *= x;
            return p;
        }
        case Quantity::Perimeter: return perimeter(poly);
        case Quantity::OrthicInradius: return triangle_radii(orthic_of(poly)).inradius;
        case Quantity::OrthicCircumradius: return triangle_radii(orthic_of(poly)).circumradius;
    }
    throw DomainError("unknown quantity");
}

InvariantReport sweep(const FamilySpec& spec, Quantity q, int n_samples, double tol) {
    if (n_samples < 8) {
        throw DomainError("sweep needs at least 8 samples");
    }
    if (!(tol > 0.0)) {
        throw DomainError("sweep tolerance must be positive");
    }
    const double period = family_period(spec);
    std::vector<double> values(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        values[static_cast<std::size_t>(i)] = evaluate_quantity(family_member(spec, period * i / n_samples), q);
    }

    CompensatedSum acc;
    for (double v : values) acc.add(v);
    const double mean = acc.value() / n_samples;
    double dev = 0.0;
    for (double v : values) dev = std::max(dev, std::abs(v - mean));

    InvariantReport report;
    report.quantity = std::string(to_string(q));
    report.samples = n_samples;
    report.mean = mean;
    report.max_abs_deviation = dev;
    report.closed_form_target = closed_form_target(spec, q);
    report.tolerance = q == Quantity::Perimeter ? tol * std::abs(mean) : tol;
    report.passed = dev <= report.tolerance &&
                    (!report.closed_form_target || std::abs(mean - *report.closed_form_target) <= report.tolerance);
    return report;
}

InvariantReport sweep(const FamilySpec& spec, int n_samples, double tol) {
    return sweep(spec, headline_quantity(spec.kind), n_samples, tol);
}

std::vector<InvariantReport> sweep_all(const FamilySpec& spec, int n_samples, double tol) {
    std::vector<InvariantReport> out;
    for (Quantity q : applicable_quantities(spec)) {
        out.push_back(sweep(spec, q, n_samples, tol));
    }
    return out;
}

CosineRange swept_cosine_extremes(const FamilySpec& spec, int grid) {
    if (grid < 8) {
        throw DomainError("extreme search needs at least 8 grid points");
    }
    const double period = family_period(spec);
    const double h = period / grid;
    // The first vertex visits every position on the outer conic, so its
    // cosine alone ranges over the whole family.
    auto first_cos = [&](double t) { return internal_cosines(family_member(spec, t)).front(); };

    int i_min = 0;
    int i_max = 0;
    double v_min = std::numeric_limits<double>::infinity();
    double v_max = -v_min;
    for (int i = 0; i < grid; ++i) {
        const double v = first_cos(h * i);
        if (v < v_min) { v_min = v; i_min = i; }
        if (v > v_max) { v_max = v; i_max = i; }
    }
    const double lo = refine_min(first_cos, h * (i_min - 1), h * (i_min + 1));
    const double hi = -refine_min([&](double t) { return -first_cos(t); }, h * (i_max - 1), h * (i_max + 1));
    return {std::min(lo, v_min), std::max(hi, v_max)};
}

}  // namespace poncelet

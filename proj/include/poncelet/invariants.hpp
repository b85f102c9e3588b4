#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/families.hpp"

namespace poncelet {

/// k = 1 + 2ab/(a+b)^2, cosine sum of the incircle family with outer (a, b)
/// and of its confocal image.
double cosine_sum_target(double a, double b);

/// k' = ab / (2 (a+b)^2), cosine product of the circumcircle family with
/// caustic (a, b) and of its excentral image.
double cosine_product_target(double a, double b);

enum class ExtremesKind { IncircleFamily, CircumcircleFamily };

struct CosineRange {
    double c_min;
    double c_max;
};

/// Closed-form range of a single internal cosine over the family.
CosineRange cosine_extremes(double a, double b, ExtremesKind kind);

enum class Quantity { CosineSum, CosineProduct, Perimeter, OrthicInradius, OrthicCircumradius };

std::string_view to_string(Quantity q);

struct InvariantReport {
    std::string quantity;
    int samples = 0;
    double mean = 0.0;
    double max_abs_deviation = 0.0;   ///< max |sample - mean|
    std::optional<double> closed_form_target;
    double tolerance = 0.0;           ///< absolute tolerance actually applied
    bool passed = false;
};

/// Quantities the family is known to conserve, in report order.
std::vector<Quantity> applicable_quantities(const FamilySpec& spec);

/// Closed-form value of `q` for the family, when one is known.
std::optional<double> closed_form_target(const FamilySpec& spec, Quantity q);

/// Evaluate `q` on one family member.
double evaluate_quantity(const Polygon& poly, Quantity q);

/// Sample the parameter uniformly over one period (closed-open grid) and
/// summarise `q`. Perimeter uses `tol` relative to the mean perimeter.
InvariantReport sweep(const FamilySpec& spec, Quantity q, int n_samples, double tol = 1e-9);

/// Sweep of the family's headline quantity (cosine sum or cosine product).
InvariantReport sweep(const FamilySpec& spec, int n_samples, double tol = 1e-9);

/// One report per applicable quantity.
std::vector<InvariantReport> sweep_all(const FamilySpec& spec, int n_samples, double tol = 1e-9);

/// Min and max of a single internal cosine over the family, located on a
/// coarse grid and refined by Brent minimisation in the family parameter.
CosineRange swept_cosine_extremes(const FamilySpec& spec, int grid = 1024);

}  // namespace poncelet

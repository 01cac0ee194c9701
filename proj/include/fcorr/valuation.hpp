#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fcorr/matrix.hpp"

namespace fcorr {

/// Category scores: one real number per ordinal class.
using Valuation = std::vector<double>;

/// Feasible sets for the correlation maximization.
enum class ValuationClass { Sup, II, ID, Mon, CO, Anti, CoAnti };

std::string_view to_string(ValuationClass cls);
std::optional<ValuationClass> valuation_class_from_string(std::string_view name);

/// All seven classes in reporting order.
inline constexpr ValuationClass kAllClasses[] = {
    ValuationClass::Sup, ValuationClass::II,   ValuationClass::ID,    ValuationClass::Mon,
    ValuationClass::CO,  ValuationClass::Anti, ValuationClass::CoAnti};

/// Weighted variance below this is treated as degenerate.
inline constexpr double kDegeneracyTol = 1e-12;

/// Affinely rescales scores to weighted mean 0 and weighted second moment 1
/// under the given marginal weights (nonnegative, summing to 1). The map has
/// positive scale, so order relations are preserved. Throws std::domain_error
/// when the weighted variance is below kDegeneracyTol.
Valuation standardize(const Valuation& scores, const std::vector<double>& weights);

/// A pair of valuations standardized against the matrix's own marginals.
struct StandardizedPair {
    Valuation f;
    Valuation g;
};

StandardizedPair make_standardized_pair(const ConfusionMatrix& m, const Valuation& f,
                                        const Valuation& g);

/// Pearson correlation of the two category scores under the joint mass.
/// Invariant under positive affine changes of either argument. Throws
/// std::domain_error when either score vector is degenerate under the
/// matching marginal.
double correlation(const ConfusionMatrix& m, const Valuation& f, const Valuation& g);

/// sum_ij f_i p_ij g_j. Equals correlation() when (f, g) is standardized.
double bilinear_form(const ConfusionMatrix& m, const Valuation& f, const Valuation& g);

/// Exact sign-test membership (no tolerance):
///   II   both coordinatewise nondecreasing
///   ID   f nondecreasing, g nonincreasing
///   CO   (f_i-f_j)(g_i-g_j) >= 0 for all i,j
///   Anti (f_i-f_j)(g_i-g_j) <= 0 for all i,j
///   Mon  each of f and g monotone (either direction)
///   CoAnti CO or Anti; Sup always true.
/// Throws std::invalid_argument on a length mismatch.
bool pair_class_check(const Valuation& f, const Valuation& g, ValuationClass cls);

/// Nonnegative disagreement weights w_ij with zero diagonal for the built-in
/// schemes.
struct WeightMatrix {
    std::size_t d = 0;
    std::vector<double> w;  // row-major

    double at(std::size_t i, std::size_t j) const { return w[i * d + j]; }
};

enum class WeightKind { Indicator, Linear, Quadratic };

std::string_view to_string(WeightKind kind);

/// indicator [i != j], linear |i - j|, quadratic (i - j)^2; categories are
/// indexed from 1, which matters only in that differences are the same as
/// 0-based.
WeightMatrix weight_scheme(WeightKind kind, std::size_t d);

/// w_ij = (f_i - g_j)^2.
WeightMatrix score_weights(const Valuation& f, const Valuation& g);

/// 1 - (sum w_ij p_ij) / (sum w_ij p_i. p_.j). Throws std::domain_error when
/// the expected disagreement is ~0.
double weighted_kappa(const ConfusionMatrix& m, const WeightMatrix& w);

}  // namespace fcorr

#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "fcorr/matrix.hpp"
#include "fcorr/valuation.hpp"

namespace fcorr {

struct SolverOptions {
    int restarts = 64;
    int max_iterations = 500;
    double convergence_tol = 1e-10;  // absolute improvement threshold
    std::uint64_t seed = 1;
    int report_precision = 6;
};

enum class SolveRoute { Spectral, Alternating, PermutationSearch, PermutationSearchHeuristic };

std::string_view to_string(SolveRoute route);

/// Outcome of one coefficient maximization. f_opt/g_opt are standardized,
/// expanded to the full class count, and satisfy pair_class_check for klass;
/// correlation(m, f_opt, g_opt) reproduces value to 1e-6.
struct CoefficientReport {
    double value = 0.0;
    Valuation f_opt;
    Valuation g_opt;
    ValuationClass klass = ValuationClass::Sup;
    SolveRoute route = SolveRoute::Alternating;
    int starts_used = 0;
    long long iterations_total = 0;
    bool converged = true;
};

/// Maximal correlation over all non-degenerate pairs. Computed exactly as the
/// second-largest singular value of Q_ij = p_ij / sqrt(p_i. p_.j) restricted
/// to positive-marginal rows and columns; the optimal pair comes from the
/// matching singular vectors divided by sqrt(marginals). Deterministic.
CoefficientReport sup_correlation(const ConfusionMatrix& m);

enum class MonotoneDirection { II, ID };

/// Maximal correlation over nondecreasing-nondecreasing (II) or
/// nondecreasing-nonincreasing (ID) pairs. ID is solved as II on the
/// column-reversed matrix with the g-side reversed back.
///
/// Each restart draws Gaussian scores and alternates exact conditional
/// maximizations: the conditional regression b_j = (sum_i f_i p_ij) / p_.j is
/// projected onto the monotone cone (pool-adjacent-violators) and
/// standardized; when the projection collapses to a constant the maximizer
/// lies on a cone face and is taken over step vectors and block-mean
/// stationary candidates instead. The objective never decreases, so the best
/// value over restarts is reported together with its arguments.
///
/// The restart stream is derived from opts.seed and the matrix content, which
/// makes results reproducible and makes identical sub-matrices solve
/// identically wherever they appear.
CoefficientReport optimize_monotone(const ConfusionMatrix& m, MonotoneDirection direction,
                                    const SolverOptions& opts = {});

/// A feasible set for the generic driver: per-side cone projections applied
/// to the conditional-regression update before standardization.
struct FeasibleSet {
    ValuationClass klass = ValuationClass::Sup;
    std::function<std::vector<double>(std::vector<double>, const std::vector<double>&)> project_f;
    std::function<std::vector<double>(std::vector<double>, const std::vector<double>&)> project_g;
};

/// Built-in sets for Sup (identity projection), II and ID (isotonic cones).
FeasibleSet feasible_set_for(ValuationClass cls);

/// Slow generic multi-start hill climb over the given feasible set. Serves as
/// an independent cross-check of the dedicated routes. Deterministic for a
/// fixed seed.
CoefficientReport multi_start_generic(const ConfusionMatrix& m, const FeasibleSet& set,
                                      const SolverOptions& opts = {});

}  // namespace fcorr

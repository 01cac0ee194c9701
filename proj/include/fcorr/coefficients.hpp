#pragma once

#include <map>
#include <string>

#include "fcorr/matrix.hpp"
#include "fcorr/solver.hpp"
#include "fcorr/valuation.hpp"

namespace fcorr {

/// All seven coefficients plus the built-in kappa family for one matrix.
struct CoefficientProfile {
    std::size_t d = 0;
    double mass_deficit = 0.0;
    ClassMap class_map;
    std::map<ValuationClass, CoefficientReport> coefficients;
    std::map<std::string, double> kappa;  // indicator / linear / quadratic

    const CoefficientReport& at(ValuationClass cls) const { return coefficients.at(cls); }
    double value(ValuationClass cls) const { return coefficients.at(cls).value; }
};

/// Maximal correlation over comonotone pairs: the maximum of the II
/// coefficient over joint relabelings of the classes. Exhaustive over all d!
/// relabelings for d <= 7; above that a seeded local search over the
/// pairwise-swap neighborhood (200 restarts) is used and the route is flagged
/// as heuristic. The optimal scores are pulled back to the original order.
CoefficientReport co_correlation(const ConfusionMatrix& m, const SolverOptions& opts = {});

/// Maximal correlation over antimonotone pairs: same search with the ID
/// objective inside.
CoefficientReport anti_correlation(const ConfusionMatrix& m, const SolverOptions& opts = {});

/// max(II, ID); ties prefer II.
CoefficientReport mon_correlation(const ConfusionMatrix& m, const SolverOptions& opts = {});

/// max(CO, ANTI); ties prefer CO.
CoefficientReport coanti_correlation(const ConfusionMatrix& m, const SolverOptions& opts = {});

/// Computes every coefficient plus the built-in kappas. Fully null classes
/// (no row and no column mass) are collapsed before optimization and the
/// optimal scores are re-expanded afterwards; the ClassMap records the
/// bookkeeping. Verifies the max-decomposition and ordering invariants before
/// returning and throws std::logic_error if they fail.
CoefficientProfile full_profile(const ConfusionMatrix& m, const SolverOptions& opts = {});

}  // namespace fcorr

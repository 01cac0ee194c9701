#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "fcorr/coefficients.hpp"
#include "fcorr/matrix.hpp"

namespace fcorr {

/// Default lexicographic step order for comparing two matrices.
inline constexpr std::array<ValuationClass, 4> kDefaultCompareOrder = {
    ValuationClass::CO, ValuationClass::Anti, ValuationClass::II, ValuationClass::ID};

/// Outcome of the lexicographic comparison of two confusion matrices.
struct Verdict {
    enum class Outcome { FirstInferior, FirstSuperior, Incomparable };

    struct Step {
        ValuationClass coefficient;
        double first = 0.0;
        double second = 0.0;
        bool decided = false;
    };

    Outcome outcome = Outcome::Incomparable;
    std::optional<ValuationClass> deciding_step;  // empty iff Incomparable
    std::vector<Step> steps;                      // every examined pair, in order
};

std::string_view to_string(Verdict::Outcome outcome);

/// Compares M against N step by step. For CO and II a smaller value loses;
/// for ANTI and ID a larger value loses. Values within epsilon tie and pass
/// control to the next step; four ties mean the comparison fails
/// (Incomparable). The step order may be overridden.
Verdict compare(const ConfusionMatrix& first, const ConfusionMatrix& second,
                double epsilon = 1e-4, const SolverOptions& opts = {},
                const std::vector<ValuationClass>& order = {kDefaultCompareOrder.begin(),
                                                            kDefaultCompareOrder.end()});

/// Same comparison on precomputed profiles.
Verdict compare_profiles(const CoefficientProfile& first, const CoefficientProfile& second,
                         double epsilon = 1e-4,
                         const std::vector<ValuationClass>& order = {kDefaultCompareOrder.begin(),
                                                                     kDefaultCompareOrder.end()});

}  // namespace fcorr

#include "fcorr/comparator.hpp"

#include <stdexcept>

namespace fcorr {

std::string_view to_string(Verdict::Outcome outcome) {
    switch (outcome) {
        case Verdict::Outcome::FirstInferior: return "FirstInferior";
        case Verdict::Outcome::FirstSuperior: return "FirstSuperior";
        case Verdict::Outcome::Incomparable: return "Incomparable";
    }
    return "?";
}

Verdict compare_profiles(const CoefficientProfile& first, const CoefficientProfile& second,
                         double epsilon, const std::vector<ValuationClass>& order) {
    if (epsilon < 0.0) throw std::invalid_argument("compare: epsilon must be >= 0");
    if (order.empty()) throw std::invalid_argument("compare: empty step order");

    Verdict verdict;
    for (ValuationClass step : order) {
        bool larger_loses;
        switch (step) {
            case ValuationClass::CO:
            case ValuationClass::II: larger_loses = false; break;
            case ValuationClass::Anti:
            case ValuationClass::ID: larger_loses = true; break;
            default:
                throw std::invalid_argument("compare: step order may use CO, ANTI, II, ID only");
        }
        const double a = first.value(step);
        const double b = second.value(step);
        Verdict::Step record{step, a, b, false};
        if (!verdict.deciding_step) {
            const double lo = larger_loses ? -a : a;  // orient so smaller loses
            const double hi = larger_loses ? -b : b;
            if (lo < hi - epsilon) {
                verdict.outcome = Verdict::Outcome::FirstInferior;
                verdict.deciding_step = step;
                record.decided = true;
            } else if (hi < lo - epsilon) {
                verdict.outcome = Verdict::Outcome::FirstSuperior;
                verdict.deciding_step = step;
                record.decided = true;
            }
        }
        verdict.steps.push_back(record);
    }
    return verdict;
}

Verdict compare(const ConfusionMatrix& first, const ConfusionMatrix& second, double epsilon,
                const SolverOptions& opts, const std::vector<ValuationClass>& order) {
    return compare_profiles(full_profile(first, opts), full_profile(second, opts), epsilon, order);
}

}  // namespace fcorr

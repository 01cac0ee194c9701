#include "fcorr/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fcorr/random.hpp"

namespace fcorr {

namespace {

constexpr std::size_t kExhaustiveLimit = 7;
constexpr int kHeuristicRestarts = 200;

struct PermSearchResult {
    double value = -2.0;
    std::vector<std::size_t> perm;
    CoefficientReport inner;
    long long starts = 0;
    long long iterations = 0;
};

/// Evaluates the monotone coefficient on the jointly relabeled matrix.
CoefficientReport solve_relabeled(const ConfusionMatrix& m, const std::vector<std::size_t>& perm,
                                  MonotoneDirection dir, const SolverOptions& opts) {
    return optimize_monotone(m.permute_jointly(perm), dir, opts);
}

void track_best(PermSearchResult& best, const std::vector<std::size_t>& perm,
                CoefficientReport&& rep) {
    best.starts += rep.starts_used;
    best.iterations += rep.iterations_total;
    if (rep.value > best.value) {
        best.value = rep.value;
        best.perm = perm;
        best.inner = std::move(rep);
    }
}

PermSearchResult exhaustive_search(const ConfusionMatrix& m, MonotoneDirection dir,
                                   const SolverOptions& opts) {
    const std::size_t d = m.dim();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    PermSearchResult best;
    do {
        track_best(best, perm, solve_relabeled(m, perm, dir, opts));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

PermSearchResult heuristic_search(const ConfusionMatrix& m, MonotoneDirection dir,
                                  const SolverOptions& opts) {
    const std::size_t d = m.dim();
    GaussianStream rng(mix_seed(opts.seed ^ mix_seed(m.fingerprint() + 0x9c)));
    PermSearchResult best;
    std::vector<std::size_t> perm(d);
    for (int restart = 0; restart < kHeuristicRestarts; ++restart) {
        std::iota(perm.begin(), perm.end(), 0);
        if (restart > 0) {  // restart 0 keeps the identity labeling
            for (std::size_t i = d - 1; i > 0; --i) {
                std::swap(perm[i], perm[rng.raw() % (i + 1)]);
            }
        }
        CoefficientReport start = solve_relabeled(m, perm, dir, opts);
        double local = start.value;
        track_best(best, perm, std::move(start));
        bool improved = true;
        while (improved && best.value < 1.0 - 1e-12) {
            improved = false;
            for (std::size_t i = 0; i < d && !improved; ++i) {
                for (std::size_t j = i + 1; j < d && !improved; ++j) {
                    std::swap(perm[i], perm[j]);
                    CoefficientReport rep = solve_relabeled(m, perm, dir, opts);
                    const double trial = rep.value;
                    track_best(best, perm, std::move(rep));
                    if (trial > local + 1e-12) {
                        local = trial;
                        improved = true;
                    } else {
                        std::swap(perm[i], perm[j]);
                    }
                }
            }
        }
        if (best.value >= 1.0 - 1e-12) break;  // nothing can beat 1
    }
    return best;
}

CoefficientReport permutation_search(const ConfusionMatrix& m, MonotoneDirection dir,
                                     ValuationClass klass, const SolverOptions& opts) {
    const std::size_t d = m.dim();
    const bool exhaustive = d <= kExhaustiveLimit;
    PermSearchResult best =
        exhaustive ? exhaustive_search(m, dir, opts) : heuristic_search(m, dir, opts);

    // Pull the optimal scores back through the relabeling.
    CoefficientReport rep;
    rep.value = best.value;
    rep.f_opt.resize(d);
    rep.g_opt.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        rep.f_opt[best.perm[i]] = best.inner.f_opt[i];
        rep.g_opt[best.perm[i]] = best.inner.g_opt[i];
    }
    rep.klass = klass;
    rep.route = exhaustive ? SolveRoute::PermutationSearch : SolveRoute::PermutationSearchHeuristic;
    rep.starts_used = static_cast<int>(std::min<long long>(best.starts, INT32_MAX));
    rep.iterations_total = best.iterations;
    rep.converged = best.inner.converged;
    return rep;
}

CoefficientReport pick_max(CoefficientReport preferred, CoefficientReport other,
                           ValuationClass klass) {
    CoefficientReport rep = (other.value > preferred.value) ? std::move(other) : std::move(preferred);
    rep.klass = klass;
    return rep;
}

}  // namespace

CoefficientReport co_correlation(const ConfusionMatrix& m, const SolverOptions& opts) {
    return permutation_search(m, MonotoneDirection::II, ValuationClass::CO, opts);
}

CoefficientReport anti_correlation(const ConfusionMatrix& m, const SolverOptions& opts) {
    return permutation_search(m, MonotoneDirection::ID, ValuationClass::Anti, opts);
}

CoefficientReport mon_correlation(const ConfusionMatrix& m, const SolverOptions& opts) {
    return pick_max(optimize_monotone(m, MonotoneDirection::II, opts),
                    optimize_monotone(m, MonotoneDirection::ID, opts), ValuationClass::Mon);
}

CoefficientReport coanti_correlation(const ConfusionMatrix& m, const SolverOptions& opts) {
    return pick_max(co_correlation(m, opts), anti_correlation(m, opts), ValuationClass::CoAnti);
}

CoefficientProfile full_profile(const ConfusionMatrix& m, const SolverOptions& opts) {
    auto [core, class_map] = m.collapse_null_classes();

    CoefficientProfile profile;
    profile.d = m.dim();
    profile.mass_deficit = m.mass_deficit();
    profile.class_map = class_map;

    auto& coeffs = profile.coefficients;
    coeffs.emplace(ValuationClass::Sup, sup_correlation(core));
    coeffs.emplace(ValuationClass::II, optimize_monotone(core, MonotoneDirection::II, opts));
    coeffs.emplace(ValuationClass::ID, optimize_monotone(core, MonotoneDirection::ID, opts));
    coeffs.emplace(ValuationClass::CO, co_correlation(core, opts));
    coeffs.emplace(ValuationClass::Anti, anti_correlation(core, opts));
    coeffs.emplace(ValuationClass::Mon,
                   pick_max(CoefficientReport(coeffs.at(ValuationClass::II)),
                            CoefficientReport(coeffs.at(ValuationClass::ID)), ValuationClass::Mon));
    coeffs.emplace(ValuationClass::CoAnti,
                   pick_max(CoefficientReport(coeffs.at(ValuationClass::CO)),
                            CoefficientReport(coeffs.at(ValuationClass::Anti)),
                            ValuationClass::CoAnti));

    // Re-expand optimal scores to the original class count: a dropped class
    // copies the nearest kept class (ties -> lower index).
    if (!class_map.empty()) {
        const auto& kept = class_map.kept;
        for (auto& [cls, rep] : coeffs) {
            Valuation f(profile.d), g(profile.d);
            for (std::size_t k = 0; k < kept.size(); ++k) {
                f[kept[k]] = rep.f_opt[k];
                g[kept[k]] = rep.g_opt[k];
            }
            std::size_t k = 0;
            for (std::size_t i = 0; i < profile.d; ++i) {
                while (k < kept.size() && kept[k] < i) ++k;
                if (k < kept.size() && kept[k] == i) continue;
                std::size_t src;
                if (k == 0) {
                    src = 0;
                } else if (k == kept.size()) {
                    src = kept.size() - 1;
                } else {
                    src = (i - kept[k - 1] <= kept[k] - i) ? k - 1 : k;
                }
                f[i] = rep.f_opt[src];
                g[i] = rep.g_opt[src];
            }
            rep.f_opt = std::move(f);
            rep.g_opt = std::move(g);
        }
    }

    profile.kappa["indicator"] = weighted_kappa(m, weight_scheme(WeightKind::Indicator, m.dim()));
    profile.kappa["linear"] = weighted_kappa(m, weight_scheme(WeightKind::Linear, m.dim()));
    profile.kappa["quadratic"] = weighted_kappa(m, weight_scheme(WeightKind::Quadratic, m.dim()));

    const double ii = profile.value(ValuationClass::II);
    const double id = profile.value(ValuationClass::ID);
    const double co = profile.value(ValuationClass::CO);
    const double anti = profile.value(ValuationClass::Anti);
    const double mon = profile.value(ValuationClass::Mon);
    const double coanti = profile.value(ValuationClass::CoAnti);
    const double sup = profile.value(ValuationClass::Sup);
    if (mon != std::max(ii, id) || coanti != std::max(co, anti)) {
        throw std::logic_error("profile: max-decomposition invariant failed");
    }
    if (std::abs(mon) > coanti + 1e-6 || coanti > sup + 1e-6) {
        throw std::logic_error("profile: coefficient ordering invariant failed");
    }
    return profile;
}

}  // namespace fcorr

#pragma once

#include <cstdint>

#include "fcorr/matrix.hpp"
#include "fcorr/valuation.hpp"

namespace fcorr {

struct McOptions {
    long long accepted_samples = 1'000'000;
    std::uint64_t seed = 1;
    long long max_draws = 1'000'000'000;
};

struct McEstimate {
    double value = 0.0;           // maximum correlation over accepted pairs
    long long accepted = 0;
    long long draws = 0;          // pair attempts, including rejected ones
    double acceptance_rate = 0.0;
    bool exhausted = false;       // max_draws hit before accepted_samples
};

/// Rejection estimator: draw independent standard-Gaussian score vectors,
/// keep the pairs that satisfy the class membership, standardize them and
/// record the correlation; the estimate is the running maximum. Membership is
/// checked before standardization -- a positive affine map cannot change it.
/// A lower bound of the exact coefficient by construction; deterministic for
/// a fixed seed, and the k-th accepted pair does not depend on the target
/// count, so estimates grow monotonically in accepted_samples.
///
/// cls must be one of SUP, II, ID, CO, ANTI (the compound classes are maxima
/// of these). Throws std::invalid_argument otherwise, std::domain_error on a
/// degenerate matrix. Exhausting max_draws sets .exhausted instead of
/// throwing so the caller can inspect the acceptance rate.
McEstimate mc_estimate(const ConfusionMatrix& m, ValuationClass cls, const McOptions& opts = {});

}  // namespace fcorr

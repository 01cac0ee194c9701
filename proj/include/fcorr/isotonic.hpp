#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fcorr {

/// Result of a weighted least-squares nondecreasing fit.
struct IsotonicFit {
    std::vector<double> fitted;                            // nondecreasing
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) pooled ranges
};

/// Pool-adjacent-violators: the unique minimizer of sum w_i (y_i - x_i)^2
/// over nondecreasing x. Left-to-right sweep; idempotent on monotone input.
/// Throws std::invalid_argument on a length mismatch or nonpositive weight.
IsotonicFit pava(std::span<const double> y, std::span<const double> w);

}  // namespace fcorr

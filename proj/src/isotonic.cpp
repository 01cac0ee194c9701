#include "fcorr/isotonic.hpp"

#include <stdexcept>

namespace fcorr {

IsotonicFit pava(std::span<const double> y, std::span<const double> w) {
    if (y.size() != w.size()) throw std::invalid_argument("pava: length mismatch");
    const std::size_t n = y.size();
    IsotonicFit fit;
    fit.fitted.resize(n);
    if (n == 0) return fit;

    // Stack of merged blocks: (mean, weight, count).
    std::vector<double> mean(n), weight(n);
    std::vector<std::size_t> count(n);
    std::size_t top = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(w[i] > 0.0)) throw std::invalid_argument("pava: nonpositive weight");
        mean[top] = y[i];
        weight[top] = w[i];
        count[top] = 1;
        ++top;
        while (top > 1 && mean[top - 2] > mean[top - 1]) {
            const double wsum = weight[top - 2] + weight[top - 1];
            mean[top - 2] = (mean[top - 2] * weight[top - 2] + mean[top - 1] * weight[top - 1]) / wsum;
            weight[top - 2] = wsum;
            count[top - 2] += count[top - 1];
            --top;
        }
    }
    std::size_t pos = 0;
    for (std::size_t b = 0; b < top; ++b) {
        fit.blocks.emplace_back(pos, pos + count[b]);
        for (std::size_t k = 0; k < count[b]; ++k) fit.fitted[pos++] = mean[b];
    }
    return fit;
}

}  // namespace fcorr

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "fcorr/matrix.hpp"
#include "fcorr/random.hpp"

namespace testutil {

/// Deterministic random matrix: positive cells with a configurable share
/// zeroed out, normalized by construction inside ConfusionMatrix.
inline fcorr::ConfusionMatrix random_matrix(std::uint64_t seed, std::size_t d,
                                            double zero_share = 0.3) {
    fcorr::GaussianStream rng(fcorr::mix_seed(seed));
    while (true) {
        std::vector<std::vector<double>> cells(d, std::vector<double>(d, 0.0));
        double total = 0.0;
        for (auto& row : cells) {
            for (double& c : row) {
                const double u = rng.uniform01();
                if (u >= zero_share) {
                    c = u * u;
                    total += c;
                }
            }
        }
        if (!(total > 0.0)) continue;
        // require at least two active rows and columns so coefficients exist
        std::size_t rows = 0, cols = 0;
        for (std::size_t i = 0; i < d; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                r += cells[i][j];
                c += cells[j][i];
            }
            rows += r > 0.0;
            cols += c > 0.0;
        }
        if (rows < 2 || cols < 2) continue;
        return fcorr::ConfusionMatrix::from_cells(cells);
    }
}

/// Product matrix p_ij = r_i * c_j from random positive marginals.
inline fcorr::ConfusionMatrix product_matrix(std::uint64_t seed, std::size_t d) {
    fcorr::GaussianStream rng(fcorr::mix_seed(seed ^ 0x77));
    std::vector<double> r(d), c(d);
    double sr = 0.0, sc = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        r[i] = 0.05 + rng.uniform01();
        c[i] = 0.05 + rng.uniform01();
        sr += r[i];
        sc += c[i];
    }
    std::vector<std::vector<double>> cells(d, std::vector<double>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) cells[i][j] = (r[i] / sr) * (c[j] / sc);
    }
    return fcorr::ConfusionMatrix::from_cells(cells);
}

inline fcorr::ConfusionMatrix diagonal_matrix(std::uint64_t seed, std::size_t d) {
    fcorr::GaussianStream rng(fcorr::mix_seed(seed ^ 0xd1a6));
    std::vector<std::vector<double>> cells(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) cells[i][i] = 0.1 + rng.uniform01();
    return fcorr::ConfusionMatrix::from_cells(cells);
}

inline fcorr::ConfusionMatrix antidiagonal_matrix(std::uint64_t seed, std::size_t d) {
    fcorr::GaussianStream rng(fcorr::mix_seed(seed ^ 0xa2d1));
    std::vector<std::vector<double>> cells(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) cells[i][d - 1 - i] = 0.1 + rng.uniform01();
    return fcorr::ConfusionMatrix::from_cells(cells);
}

}  // namespace testutil

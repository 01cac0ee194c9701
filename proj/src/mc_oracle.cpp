#include "fcorr/mc_oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fcorr/random.hpp"

namespace fcorr {

namespace {

bool sorted_up(const std::vector<double>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1]) return false;
    }
    return true;
}

bool sorted_down(const std::vector<double>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < v[i + 1]) return false;
    }
    return true;
}

}  // namespace

McEstimate mc_estimate(const ConfusionMatrix& m, ValuationClass cls, const McOptions& opts) {
    switch (cls) {
        case ValuationClass::Sup:
        case ValuationClass::II:
        case ValuationClass::ID:
        case ValuationClass::CO:
        case ValuationClass::Anti: break;
        default:
            throw std::invalid_argument("mc_estimate: compound classes are maxima of basic ones");
    }
    if (opts.accepted_samples < 1 || opts.max_draws < opts.accepted_samples) {
        throw std::invalid_argument("mc_estimate: bad sample budget");
    }
    const std::size_t d = m.dim();
    const auto& pr = m.row_marginals();
    const auto& pc = m.col_marginals();
    {
        std::size_t rows = 0, cols = 0;
        for (std::size_t i = 0; i < d; ++i) {
            rows += pr[i] > 0.0;
            cols += pc[i] > 0.0;
        }
        if (rows < 2 || cols < 2) throw std::domain_error("mc_estimate: degenerate matrix");
    }

    GaussianStream rng(mix_seed(opts.seed ^ 0x6d63ull));
    McEstimate est;
    est.value = -std::numeric_limits<double>::infinity();
    std::vector<double> f(d), g(d);

    const bool f_must_rise = (cls == ValuationClass::II || cls == ValuationClass::ID);
    while (est.accepted < opts.accepted_samples && est.draws < opts.max_draws) {
        ++est.draws;
        rng.fill(f.data(), d);
        if (f_must_rise && !sorted_up(f)) continue;
        rng.fill(g.data(), d);
        bool ok = true;
        switch (cls) {
            case ValuationClass::Sup: break;
            case ValuationClass::II: ok = sorted_up(g); break;
            case ValuationClass::ID: ok = sorted_down(g); break;
            case ValuationClass::CO: ok = pair_class_check(f, g, ValuationClass::CO); break;
            default: ok = pair_class_check(f, g, ValuationClass::Anti); break;
        }
        if (!ok) continue;

        // Standardize against the marginals; Gaussian draws are almost surely
        // non-degenerate but a collapsed projection is treated as a rejection.
        double mf = 0.0, sf = 0.0, mg = 0.0, sg = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            mf += f[i] * pr[i];
            sf += f[i] * f[i] * pr[i];
            mg += g[i] * pc[i];
            sg += g[i] * g[i] * pc[i];
        }
        const double vf = sf - mf * mf;
        const double vg = sg - mg * mg;
        if (!(vf > kDegeneracyTol) || !(vg > kDegeneracyTol)) continue;

        double corr = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < d; ++j) row += m.at(i, j) * g[j];
            corr += f[i] * row;
        }
        corr = (corr - mf * mg) / std::sqrt(vf * vg);
        ++est.accepted;
        if (corr > est.value) est.value = corr;
    }
    est.acceptance_rate =
        est.draws > 0 ? static_cast<double>(est.accepted) / static_cast<double>(est.draws) : 0.0;
    est.exhausted = est.accepted < opts.accepted_samples;
    return est;
}

}  // namespace fcorr

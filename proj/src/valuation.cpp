#include "fcorr/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace fcorr {

std::string_view to_string(ValuationClass cls) {
    switch (cls) {
        case ValuationClass::Sup: return "SUP";
        case ValuationClass::II: return "II";
        case ValuationClass::ID: return "ID";
        case ValuationClass::Mon: return "MON";
        case ValuationClass::CO: return "CO";
        case ValuationClass::Anti: return "ANTI";
        case ValuationClass::CoAnti: return "COANTI";
    }
    return "?";
}

std::optional<ValuationClass> valuation_class_from_string(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (ValuationClass cls : kAllClasses) {
        if (up == to_string(cls)) return cls;
    }
    return std::nullopt;
}

std::string_view to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::Indicator: return "indicator";
        case WeightKind::Linear: return "linear";
        case WeightKind::Quadratic: return "quadratic";
    }
    return "?";
}

Valuation standardize(const Valuation& scores, const std::vector<double>& weights) {
    if (scores.size() != weights.size()) {
        throw std::invalid_argument("standardize: length mismatch");
    }
    double mean = 0.0, second = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        mean += scores[i] * weights[i];
        second += scores[i] * scores[i] * weights[i];
    }
    const double var = second - mean * mean;
    if (!(var > kDegeneracyTol)) {
        throw std::domain_error("standardize: degenerate valuation (weighted variance ~ 0)");
    }
    const double scale = 1.0 / std::sqrt(var);
    Valuation out(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) out[i] = (scores[i] - mean) * scale;
    return out;
}

StandardizedPair make_standardized_pair(const ConfusionMatrix& m, const Valuation& f,
                                        const Valuation& g) {
    return {standardize(f, m.row_marginals()), standardize(g, m.col_marginals())};
}

double bilinear_form(const ConfusionMatrix& m, const Valuation& f, const Valuation& g) {
    const std::size_t d = m.dim();
    if (f.size() != d || g.size() != d) throw std::invalid_argument("bilinear_form: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < d; ++j) row += m.at(i, j) * g[j];
        s += f[i] * row;
    }
    return s;
}

double correlation(const ConfusionMatrix& m, const Valuation& f, const Valuation& g) {
    const std::size_t d = m.dim();
    if (f.size() != d || g.size() != d) throw std::invalid_argument("correlation: length mismatch");
    const auto& pr = m.row_marginals();
    const auto& pc = m.col_marginals();
    double mf = 0.0, sf = 0.0, mg = 0.0, sg = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        mf += f[i] * pr[i];
        sf += f[i] * f[i] * pr[i];
        mg += g[i] * pc[i];
        sg += g[i] * g[i] * pc[i];
    }
    const double vf = sf - mf * mf;
    const double vg = sg - mg * mg;
    if (!(vf > kDegeneracyTol) || !(vg > kDegeneracyTol)) {
        throw std::domain_error("correlation: degenerate valuation");
    }
    return (bilinear_form(m, f, g) - mf * mg) / std::sqrt(vf * vg);
}

namespace {

bool nondecreasing(const Valuation& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1]) return false;
    }
    return true;
}

bool nonincreasing(const Valuation& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < v[i + 1]) return false;
    }
    return true;
}

bool comonotone(const Valuation& f, const Valuation& g) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if ((f[i] - f[j]) * (g[i] - g[j]) < 0.0) return false;
        }
    }
    return true;
}

bool antimonotone(const Valuation& f, const Valuation& g) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if ((f[i] - f[j]) * (g[i] - g[j]) > 0.0) return false;
        }
    }
    return true;
}

}  // namespace

bool pair_class_check(const Valuation& f, const Valuation& g, ValuationClass cls) {
    if (f.size() != g.size()) throw std::invalid_argument("pair_class_check: length mismatch");
    switch (cls) {
        case ValuationClass::Sup: return true;
        case ValuationClass::II: return nondecreasing(f) && nondecreasing(g);
        case ValuationClass::ID: return nondecreasing(f) && nonincreasing(g);
        case ValuationClass::Mon:
            return (nondecreasing(f) || nonincreasing(f)) && (nondecreasing(g) || nonincreasing(g));
        case ValuationClass::CO: return comonotone(f, g);
        case ValuationClass::Anti: return antimonotone(f, g);
        case ValuationClass::CoAnti: return comonotone(f, g) || antimonotone(f, g);
    }
    return false;
}

WeightMatrix weight_scheme(WeightKind kind, std::size_t d) {
    if (d < 2) throw std::invalid_argument("weight_scheme: d must be >= 2");
    WeightMatrix wm{d, std::vector<double>(d * d, 0.0)};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = static_cast<double>(i) - static_cast<double>(j);
            switch (kind) {
                case WeightKind::Indicator: wm.w[i * d + j] = (i != j) ? 1.0 : 0.0; break;
                case WeightKind::Linear: wm.w[i * d + j] = std::abs(diff); break;
                case WeightKind::Quadratic: wm.w[i * d + j] = diff * diff; break;
            }
        }
    }
    return wm;
}

WeightMatrix score_weights(const Valuation& f, const Valuation& g) {
    if (f.size() != g.size()) throw std::invalid_argument("score_weights: length mismatch");
    const std::size_t d = f.size();
    WeightMatrix wm{d, std::vector<double>(d * d)};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = f[i] - g[j];
            wm.w[i * d + j] = diff * diff;
        }
    }
    return wm;
}

double weighted_kappa(const ConfusionMatrix& m, const WeightMatrix& wm) {
    const std::size_t d = m.dim();
    if (wm.d != d) throw std::invalid_argument("weighted_kappa: weight size mismatch");
    const auto& pr = m.row_marginals();
    const auto& pc = m.col_marginals();
    double observed = 0.0, expected = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            observed += wm.at(i, j) * m.at(i, j);
            expected += wm.at(i, j) * pr[i] * pc[j];
        }
    }
    if (!(expected > kDegeneracyTol)) {
        throw std::domain_error("weighted_kappa: zero expected disagreement");
    }
    return 1.0 - observed / expected;
}

}  // namespace fcorr

#include "fcorr/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "fcorr/isotonic.hpp"
#include "fcorr/random.hpp"

namespace fcorr {

std::string_view to_string(SolveRoute route) {
    switch (route) {
        case SolveRoute::Spectral: return "spectral";
        case SolveRoute::Alternating: return "alternating";
        case SolveRoute::PermutationSearch: return "permutation-search";
        case SolveRoute::PermutationSearchHeuristic: return "permutation-search(heuristic)";
    }
    return "?";
}

namespace {

// Rows/columns with positive marginals; scores of the other classes cannot
// affect any correlation and are interpolated after the solve.
struct ActiveView {
    std::vector<std::size_t> rows, cols;
    std::vector<double> cell;  // r x c, row-major
    std::vector<double> wr, wc;
    std::size_t r = 0, c = 0;
};

ActiveView build_active(const ConfusionMatrix& m) {
    ActiveView v;
    const std::size_t d = m.dim();
    for (std::size_t i = 0; i < d; ++i) {
        if (m.row_marginals()[i] > 0.0) v.rows.push_back(i);
        if (m.col_marginals()[i] > 0.0) v.cols.push_back(i);
    }
    v.r = v.rows.size();
    v.c = v.cols.size();
    if (v.r < 2 || v.c < 2) {
        throw std::domain_error("solver: degenerate matrix (needs 2 rows and 2 columns with mass)");
    }
    v.cell.resize(v.r * v.c);
    v.wr.resize(v.r);
    v.wc.resize(v.c);
    for (std::size_t i = 0; i < v.r; ++i) {
        v.wr[i] = m.row_marginals()[v.rows[i]];
        for (std::size_t j = 0; j < v.c; ++j) v.cell[i * v.c + j] = m.at(v.rows[i], v.cols[j]);
    }
    for (std::size_t j = 0; j < v.c; ++j) v.wc[j] = m.col_marginals()[v.cols[j]];
    return v;
}

/// Fill inactive classes with the value of the nearest active class
/// (ties -> lower index); preserves monotonicity of the active subsequence.
Valuation expand_scores(const std::vector<double>& reduced, const std::vector<std::size_t>& active,
                        std::size_t d) {
    Valuation full(d, 0.0);
    for (std::size_t k = 0; k < active.size(); ++k) full[active[k]] = reduced[k];
    std::size_t k = 0;  // index of first active >= i
    for (std::size_t i = 0; i < d; ++i) {
        while (k < active.size() && active[k] < i) ++k;
        if (k < active.size() && active[k] == i) continue;
        if (k == 0) {
            full[i] = reduced[0];
        } else if (k == active.size()) {
            full[i] = reduced[k - 1];
        } else {
            const std::size_t dl = i - active[k - 1];
            const std::size_t dr = active[k] - i;
            full[i] = (dl <= dr) ? reduced[k - 1] : reduced[k];
        }
    }
    return full;
}

struct CondResult {
    std::vector<double> x;
    double value = -std::numeric_limits<double>::infinity();
};

/// max <x,b>_w over nondecreasing x with weighted mean 0 and second moment 1
/// (weights sum to 1). The isotonic projection standardized is the exact
/// maximizer whenever it is non-constant. Otherwise the maximum sits on a
/// cone face: every 2-block step vector is a candidate, and for k >= 3 blocks
/// the stationary candidate is the standardized vector of block means (either
/// sign), kept when nondecreasing.
CondResult cond_max(const std::vector<double>& b, const std::vector<double>& w) {
    const std::size_t m = b.size();
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += b[i] * w[i];
    std::vector<double> bc(m);
    for (std::size_t i = 0; i < m; ++i) bc[i] = b[i] - mean;

    IsotonicFit fit = pava(bc, w);
    double var = 0.0;
    for (std::size_t i = 0; i < m; ++i) var += fit.fitted[i] * fit.fitted[i] * w[i];
    if (var > kDegeneracyTol) {
        const double scale = 1.0 / std::sqrt(var);
        CondResult res;
        res.x.resize(m);
        double value = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            res.x[i] = fit.fitted[i] * scale;
            value += w[i] * res.x[i] * b[i];
        }
        res.value = value;
        return res;
    }

    CondResult best;
    auto consider = [&](const std::vector<double>& cand) {
        for (std::size_t i = 0; i + 1 < m; ++i) {
            if (cand[i] > cand[i + 1]) return;
        }
        double value = 0.0;
        for (std::size_t i = 0; i < m; ++i) value += w[i] * cand[i] * b[i];
        if (value > best.value) {
            best.value = value;
            best.x = cand;
        }
    };

    std::vector<double> cand(m);
    double wl = 0.0;
    for (std::size_t t = 1; t < m; ++t) {
        wl += w[t - 1];
        const double wr = 1.0 - wl;
        if (!(wl > 0.0) || !(wr > 0.0)) continue;
        const double lo = -std::sqrt(wr / wl);
        const double hi = std::sqrt(wl / wr);
        for (std::size_t i = 0; i < m; ++i) cand[i] = (i < t) ? lo : hi;
        consider(cand);
    }

    if (m <= 16) {
        const std::uint32_t masks = 1u << (m - 1);
        std::vector<double> u(m);
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
            if (std::popcount(mask) < 2) continue;  // 2-block faces already covered
            std::size_t begin = 0;
            for (std::size_t end = 1; end <= m; ++end) {
                if (end == m || (mask >> (end - 1) & 1u)) {
                    double bw = 0.0, bs = 0.0;
                    for (std::size_t i = begin; i < end; ++i) {
                        bw += w[i];
                        bs += w[i] * bc[i];
                    }
                    const double blk = bw > 0.0 ? bs / bw : 0.0;
                    for (std::size_t i = begin; i < end; ++i) u[i] = blk;
                    begin = end;
                }
            }
            double mu = 0.0, second = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                mu += u[i] * w[i];
                second += u[i] * u[i] * w[i];
            }
            const double uvar = second - mu * mu;
            if (!(uvar > kDegeneracyTol)) continue;
            const double scale = 1.0 / std::sqrt(uvar);
            for (double sign : {1.0, -1.0}) {
                for (std::size_t i = 0; i < m; ++i) cand[i] = sign * (u[i] - mu) * scale;
                consider(cand);
            }
        }
    }
    return best;
}

struct ReducedSolve {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> f, g;
    long long iterations = 0;
    bool converged = false;
};

ReducedSolve alternate_monotone(const ActiveView& v, const SolverOptions& opts,
                                std::uint64_t stream_seed) {
    GaussianStream rng(stream_seed);
    ReducedSolve best;
    std::vector<double> f(v.r), b(v.c), a(v.r);
    for (int start = 0; start < opts.restarts; ++start) {
        rng.fill(f.data(), v.r);
        double val = -std::numeric_limits<double>::infinity();
        std::vector<double> g;
        bool converged = false;
        for (int it = 0; it < opts.max_iterations; ++it) {
            for (std::size_t j = 0; j < v.c; ++j) {
                double s = 0.0;
                for (std::size_t i = 0; i < v.r; ++i) s += f[i] * v.cell[i * v.c + j];
                b[j] = s / v.wc[j];
            }
            CondResult gres = cond_max(b, v.wc);
            g = std::move(gres.x);
            for (std::size_t i = 0; i < v.r; ++i) {
                double s = 0.0;
                for (std::size_t j = 0; j < v.c; ++j) s += v.cell[i * v.c + j] * g[j];
                a[i] = s / v.wr[i];
            }
            CondResult fres = cond_max(a, v.wr);
            f = std::move(fres.x);
            ++best.iterations;
            // Exact conditional updates cannot decrease the objective.
            if (fres.value + 1e-9 < val) {
                throw std::logic_error("solver: alternating objective decreased");
            }
            if (fres.value - val < opts.convergence_tol) {
                val = std::max(val, fres.value);
                converged = true;
                break;
            }
            val = fres.value;
        }
        if (val > best.value) {
            best.value = val;
            best.f = f;
            best.g = g;
            best.converged = converged;
        }
    }
    return best;
}

std::uint64_t solve_stream_seed(const ConfusionMatrix& m, const SolverOptions& opts,
                                std::uint64_t tag) {
    return mix_seed(opts.seed ^ mix_seed(m.fingerprint() + tag));
}

}  // namespace

CoefficientReport optimize_monotone(const ConfusionMatrix& m, MonotoneDirection direction,
                                    const SolverOptions& opts) {
    if (direction == MonotoneDirection::ID) {
        CoefficientReport rep = optimize_monotone(m.reverse_columns(), MonotoneDirection::II, opts);
        std::reverse(rep.g_opt.begin(), rep.g_opt.end());
        rep.klass = ValuationClass::ID;
        return rep;
    }
    const ActiveView v = build_active(m);
    const ReducedSolve best = alternate_monotone(v, opts, solve_stream_seed(m, opts, 0x11));

    CoefficientReport rep;
    rep.value = best.value;
    rep.f_opt = expand_scores(best.f, v.rows, m.dim());
    rep.g_opt = expand_scores(best.g, v.cols, m.dim());
    rep.klass = ValuationClass::II;
    rep.route = SolveRoute::Alternating;
    rep.starts_used = opts.restarts;
    rep.iterations_total = best.iterations;
    rep.converged = best.converged;
    return rep;
}

CoefficientReport sup_correlation(const ConfusionMatrix& m) {
    const ActiveView v = build_active(m);
    Eigen::MatrixXd q(v.r, v.c);
    for (std::size_t i = 0; i < v.r; ++i) {
        for (std::size_t j = 0; j < v.c; ++j) {
            q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                v.cell[i * v.c + j] / std::sqrt(v.wr[i] * v.wc[j]);
        }
    }
    // Deflate the trivial singular pair (1, sqrt(wr), sqrt(wc)); the top
    // remaining singular value is the coefficient. This stays stable when the
    // spectrum has ties at 1.
    Eigen::VectorXd sr(v.r), sc(v.c);
    for (std::size_t i = 0; i < v.r; ++i) sr(static_cast<Eigen::Index>(i)) = std::sqrt(v.wr[i]);
    for (std::size_t j = 0; j < v.c; ++j) sc(static_cast<Eigen::Index>(j)) = std::sqrt(v.wc[j]);
    q -= sr * sc.transpose();

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(q, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double sigma = svd.singularValues()(0);

    std::vector<double> f(v.r), g(v.c);
    if (sigma > 1e-12) {
        Eigen::VectorXd u = svd.matrixU().col(0);
        Eigen::VectorXd w = svd.matrixV().col(0);
        for (std::size_t i = 0; i < v.r; ++i) {
            f[i] = u(static_cast<Eigen::Index>(i)) / std::sqrt(v.wr[i]);
        }
        for (std::size_t j = 0; j < v.c; ++j) {
            g[j] = w(static_cast<Eigen::Index>(j)) / std::sqrt(v.wc[j]);
        }
    } else {
        // independent matrix: every pair attains the supremum 0, report the
        // index scores
        for (std::size_t i = 0; i < v.r; ++i) f[i] = static_cast<double>(i);
        for (std::size_t j = 0; j < v.c; ++j) g[j] = static_cast<double>(j);
    }
    f = standardize(f, v.wr);
    g = standardize(g, v.wc);

    double val = 0.0;
    for (std::size_t i = 0; i < v.r; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < v.c; ++j) row += v.cell[i * v.c + j] * g[j];
        val += f[i] * row;
    }
    if (val < 0.0) {
        for (double& x : g) x = -x;
    }
    double drift = 0.0;  // orient toward increasing class index
    for (std::size_t i = 0; i < v.r; ++i) drift += f[i] * static_cast<double>(i);
    if (drift < 0.0) {
        for (double& x : f) x = -x;
        for (double& x : g) x = -x;
    }

    CoefficientReport rep;
    rep.value = std::min(1.0, std::max(0.0, sigma));
    rep.f_opt = expand_scores(f, v.rows, m.dim());
    rep.g_opt = expand_scores(g, v.cols, m.dim());
    rep.klass = ValuationClass::Sup;
    rep.route = SolveRoute::Spectral;
    rep.starts_used = 1;
    rep.iterations_total = 0;
    rep.converged = true;
    return rep;
}

FeasibleSet feasible_set_for(ValuationClass cls) {
    auto identity = [](std::vector<double> scores, const std::vector<double>&) { return scores; };
    auto isotone = [](std::vector<double> scores, const std::vector<double>& weights) {
        return pava(scores, weights).fitted;
    };
    auto antitone = [](std::vector<double> scores, const std::vector<double>& weights) {
        for (double& s : scores) s = -s;
        std::vector<double> fit = pava(scores, weights).fitted;
        for (double& s : fit) s = -s;
        return fit;
    };
    switch (cls) {
        case ValuationClass::Sup: return {cls, identity, identity};
        case ValuationClass::II: return {cls, isotone, isotone};
        case ValuationClass::ID: return {cls, isotone, antitone};
        default: throw std::invalid_argument("feasible_set_for: unsupported class");
    }
}

CoefficientReport multi_start_generic(const ConfusionMatrix& m, const FeasibleSet& set,
                                      const SolverOptions& opts) {
    const ActiveView v = build_active(m);
    GaussianStream rng(solve_stream_seed(m, opts, 0xf5 + static_cast<std::uint64_t>(set.klass)));

    double best_val = -std::numeric_limits<double>::infinity();
    std::vector<double> best_f, best_g;
    bool best_converged = false;
    long long iterations = 0;
    int failures = 0;

    std::vector<double> raw_f(v.r), raw_g(v.c), b(v.c), a(v.r);
    auto value_of = [&](const std::vector<double>& f, const std::vector<double>& g) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.r; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < v.c; ++j) row += v.cell[i * v.c + j] * g[j];
            s += f[i] * row;
        }
        return s;
    };

    for (int start = 0; start < opts.restarts; ++start) {
        rng.fill(raw_f.data(), v.r);
        rng.fill(raw_g.data(), v.c);
        try {
            std::vector<double> f = standardize(set.project_f(raw_f, v.wr), v.wr);
            std::vector<double> g = standardize(set.project_g(raw_g, v.wc), v.wc);
            double val = value_of(f, g);
            bool converged = false;
            for (int it = 0; it < opts.max_iterations; ++it) {
                ++iterations;
                for (std::size_t j = 0; j < v.c; ++j) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < v.r; ++i) s += f[i] * v.cell[i * v.c + j];
                    b[j] = s / v.wc[j];
                }
                std::vector<double> g_next = standardize(set.project_g(b, v.wc), v.wc);
                for (std::size_t i = 0; i < v.r; ++i) {
                    double s = 0.0;
                    for (std::size_t j = 0; j < v.c; ++j) s += v.cell[i * v.c + j] * g_next[j];
                    a[i] = s / v.wr[i];
                }
                std::vector<double> f_next = standardize(set.project_f(a, v.wr), v.wr);
                const double next = value_of(f_next, g_next);
                if (next < val + opts.convergence_tol) {
                    if (next > val) {
                        f = std::move(f_next);
                        g = std::move(g_next);
                        val = next;
                    }
                    converged = true;
                    break;
                }
                f = std::move(f_next);
                g = std::move(g_next);
                val = next;
            }
            if (val > best_val) {
                best_val = val;
                best_f = f;
                best_g = g;
                best_converged = converged;
            }
        } catch (const std::domain_error&) {
            ++failures;  // projection collapsed this start
        }
    }
    if (best_f.empty()) {
        throw std::domain_error("multi_start_generic: projection failed in every restart");
    }

    CoefficientReport rep;
    rep.value = best_val;
    rep.f_opt = expand_scores(best_f, v.rows, m.dim());
    rep.g_opt = expand_scores(best_g, v.cols, m.dim());
    rep.klass = set.klass;
    rep.route = SolveRoute::Alternating;
    rep.starts_used = opts.restarts - failures;
    rep.iterations_total = iterations;
    rep.converged = best_converged;
    return rep;
}

}  // namespace fcorr

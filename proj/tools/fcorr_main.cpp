#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcorr/coefficients.hpp"
#include "fcorr/comparator.hpp"
#include "fcorr/fixtures.hpp"
#include "fcorr/mc_oracle.hpp"
#include "fcorr/report.hpp"

namespace {

constexpr int kExitInput = 2;       // parse / validation problem
constexpr int kExitDegenerate = 3;  // matrix cannot support any coefficient
constexpr int kExitInvariant = 4;   // internal consistency violated

struct Input {
    fcorr::ConfusionMatrix matrix;
    std::string name;
};

Input load_one(const std::string& spec) {
    if (const fcorr::Fixture* fx = fcorr::find_fixture(spec)) {
        return {fx->matrix(), fx->name};
    }
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {fcorr::ConfusionMatrix::parse(buf.str()), spec};
}

std::vector<Input> gather_inputs(const std::vector<std::string>& fixtures,
                                 const std::vector<std::string>& files, std::size_t expected) {
    std::vector<Input> inputs;
    for (const std::string& name : fixtures) {
        const fcorr::Fixture* fx = fcorr::find_fixture(name);
        if (!fx) throw std::invalid_argument("unknown fixture: " + name);
        inputs.push_back({fx->matrix(), fx->name});
    }
    for (const std::string& path : files) inputs.push_back(load_one(path));
    if (inputs.size() != expected) {
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " input(s), got " + std::to_string(inputs.size()));
    }
    return inputs;
}

std::vector<fcorr::ValuationClass> parse_order(const std::string& text) {
    std::vector<fcorr::ValuationClass> order;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto cls = fcorr::valuation_class_from_string(tok);
        if (!cls) throw std::invalid_argument("unknown coefficient in --order: " + tok);
        order.push_back(*cls);
    }
    if (order.empty()) throw std::invalid_argument("--order must name at least one coefficient");
    return order;
}

int effective_digits(int digits_flag, const std::string& format,
                     const fcorr::SolverOptions& sopts) {
    if (digits_flag > 0) return digits_flag;
    return format == "json" ? sopts.report_precision : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"functional correlation coefficients and comparisons for confusion matrices"};
    app.require_subcommand(1);

    std::string format = "table";
    int digits = 0;  // 0 = per-format default (json 6, table 4)
    fcorr::SolverOptions sopts;
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--digits", digits, "decimal digits in reports (default: 4 table, 6 json)");
    app.add_option("--restarts", sopts.restarts, "solver restarts per maximization")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", sopts.seed, "seed for reproducible restarts");

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "compute the seven coefficients and kappas");
    std::vector<std::string> co_fixtures, co_files;
    coeffs->add_option("--fixture", co_fixtures, "built-in matrix name (see 'fixtures')");
    coeffs->add_option("file", co_files, "CSV or JSON matrix file");

    // compare
    auto* compare = app.add_subcommand("compare", "rank two matrices with the step-down rule");
    std::vector<std::string> cmp_fixtures, cmp_files;
    double epsilon = 1e-4;
    std::string order_text = "CO,ANTI,II,ID";
    compare->add_option("--fixture", cmp_fixtures, "built-in matrix name (repeatable)");
    compare->add_option("file", cmp_files, "CSV or JSON matrix file");
    compare->add_option("--epsilon", epsilon, "tie tolerance for coefficient equality")
        ->check(CLI::NonNegativeNumber);
    compare->add_option("--order", order_text, "step order, e.g. CO,ANTI,II,ID");

    // mc-check
    auto* mc = app.add_subcommand("mc-check", "compare the rejection estimator with the solver");
    std::vector<std::string> mc_fixtures, mc_files;
    std::string mc_class = "SUP";
    fcorr::McOptions mopts;
    mopts.accepted_samples = 100000;
    mc->add_option("--fixture", mc_fixtures, "built-in matrix name");
    mc->add_option("file", mc_files, "CSV or JSON matrix file");
    mc->add_option("--class", mc_class, "coefficient class: SUP, II, ID, CO or ANTI");
    mc->add_option("--samples", mopts.accepted_samples, "accepted sample target")
        ->check(CLI::PositiveNumber);
    mc->add_option("--max-draws", mopts.max_draws, "cap on total draws");

    // kappa
    auto* kappa = app.add_subcommand("kappa", "weighted kappa for the built-in weight schemes");
    std::vector<std::string> ka_fixtures, ka_files;
    std::string weights = "all";
    kappa->add_option("--fixture", ka_fixtures, "built-in matrix name");
    kappa->add_option("file", ka_files, "CSV or JSON matrix file");
    kappa->add_option("--weights", weights, "indicator, linear, quadratic or all")
        ->check(CLI::IsMember({"indicator", "linear", "quadratic", "all"}));

    // fixtures
    auto* fixtures_cmd = app.add_subcommand("fixtures", "list the built-in matrices");

    for (auto* sub : {coeffs, compare, mc, kappa, fixtures_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (coeffs->parsed()) {
            auto in = gather_inputs(co_fixtures, co_files, 1);
            const auto profile = fcorr::full_profile(in[0].matrix, sopts);
            const int dg = effective_digits(digits, format, sopts);
            if (format == "json") {
                std::cout << fcorr::dump_json(
                    fcorr::profile_to_json(in[0].matrix, profile, sopts, dg));
            } else {
                std::cout << in[0].name << "\n"
                          << fcorr::profile_to_table(in[0].matrix, profile, dg);
            }
        } else if (compare->parsed()) {
            auto in = gather_inputs(cmp_fixtures, cmp_files, 2);
            const auto order = parse_order(order_text);
            const auto verdict = fcorr::compare(in[0].matrix, in[1].matrix, epsilon, sopts, order);
            const int dg = effective_digits(digits, format, sopts);
            if (format == "json") {
                std::cout << fcorr::dump_json(
                    fcorr::verdict_to_json(verdict, in[0].name, in[1].name, epsilon, sopts, dg));
            } else {
                std::cout << fcorr::verdict_to_table(verdict, in[0].name, in[1].name, epsilon, dg);
            }
        } else if (mc->parsed()) {
            auto in = gather_inputs(mc_fixtures, mc_files, 1);
            const auto cls = fcorr::valuation_class_from_string(mc_class);
            if (!cls) throw std::invalid_argument("unknown --class: " + mc_class);
            mopts.seed = sopts.seed;
            const auto estimate = fcorr::mc_estimate(in[0].matrix, *cls, mopts);
            double exact = 0.0;
            switch (*cls) {
                case fcorr::ValuationClass::Sup:
                    exact = fcorr::sup_correlation(in[0].matrix).value;
                    break;
                case fcorr::ValuationClass::II:
                    exact = fcorr::optimize_monotone(in[0].matrix, fcorr::MonotoneDirection::II,
                                                     sopts)
                                .value;
                    break;
                case fcorr::ValuationClass::ID:
                    exact = fcorr::optimize_monotone(in[0].matrix, fcorr::MonotoneDirection::ID,
                                                     sopts)
                                .value;
                    break;
                case fcorr::ValuationClass::CO:
                    exact = fcorr::co_correlation(in[0].matrix, sopts).value;
                    break;
                default: exact = fcorr::anti_correlation(in[0].matrix, sopts).value; break;
            }
            const int dg = effective_digits(digits, format, sopts);
            if (format == "json") {
                std::cout << fcorr::dump_json(
                    fcorr::mc_check_to_json(*cls, estimate, exact, mopts, dg));
            } else {
                std::cout << in[0].name << "\n"
                          << fcorr::mc_check_to_table(*cls, estimate, exact, dg);
            }
            if (estimate.exhausted) return kExitInput;
            if (estimate.value > exact + 1e-6) {
                std::cerr << "invariant violation: the sample maximum exceeds the exact value\n";
                return kExitInvariant;
            }
        } else if (kappa->parsed()) {
            auto in = gather_inputs(ka_fixtures, ka_files, 1);
            std::map<std::string, double> kappas;
            for (fcorr::WeightKind kind : {fcorr::WeightKind::Indicator, fcorr::WeightKind::Linear,
                                           fcorr::WeightKind::Quadratic}) {
                const std::string name{fcorr::to_string(kind)};
                if (weights == "all" || weights == name) {
                    kappas[name] = fcorr::weighted_kappa(
                        in[0].matrix, fcorr::weight_scheme(kind, in[0].matrix.dim()));
                }
            }
            const int dg = effective_digits(digits, format, sopts);
            if (format == "json") {
                std::cout << fcorr::dump_json(fcorr::kappa_to_json(in[0].matrix, kappas, dg));
            } else {
                std::cout << fcorr::kappa_to_table(kappas, dg);
            }
        } else if (fixtures_cmd->parsed()) {
            for (const fcorr::Fixture& f : fcorr::fixture_set()) {
                std::printf("%-7s d=%zu", f.name.c_str(), f.raw_cells.size());
                if (!f.note.empty()) std::printf("  (%s)", f.note.c_str());
                std::printf("\n");
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "degenerate matrix: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}

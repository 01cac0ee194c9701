#include "fcorr/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fcorr {

double round_to(double x, int digits) {
    const double factor = std::pow(10.0, digits);
    const double r = std::round(x * factor) / factor;
    return r == 0.0 ? 0.0 : r;  // drop -0
}

namespace {

std::string fmt(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, round_to(x, digits));
    return buf;
}

Json vector_json(const Valuation& v, int digits) {
    Json arr = Json::array();
    for (double x : v) arr.push_back(round_to(x, digits));
    return arr;
}

Json matrix_json(const ConfusionMatrix& m, int digits) {
    Json mat;
    mat["d"] = m.dim();
    Json cells = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(round_to(m.at(i, j), digits));
        cells.push_back(std::move(row));
    }
    mat["cells"] = std::move(cells);
    if (!m.labels().empty()) mat["labels"] = m.labels();
    return mat;
}

}  // namespace

Json profile_to_json(const ConfusionMatrix& m, const CoefficientProfile& profile,
                     const SolverOptions& opts, int digits) {
    Json doc;
    doc["matrix"] = matrix_json(m, digits);
    Json coeffs;
    for (ValuationClass cls : kAllClasses) {
        const CoefficientReport& rep = profile.at(cls);
        Json c;
        c["value"] = round_to(rep.value, digits);
        c["f"] = vector_json(rep.f_opt, digits);
        c["g"] = vector_json(rep.g_opt, digits);
        c["route"] = std::string(to_string(rep.route));
        coeffs[std::string(to_string(cls))] = std::move(c);
    }
    doc["coefficients"] = std::move(coeffs);
    Json kappa;
    for (const char* name : {"indicator", "linear", "quadratic"}) {
        kappa[name] = round_to(profile.kappa.at(name), digits);
    }
    doc["kappa"] = std::move(kappa);
    Json meta;
    meta["seed"] = opts.seed;
    meta["restarts"] = opts.restarts;
    meta["mass_deficit"] = round_to(profile.mass_deficit, digits);
    doc["meta"] = std::move(meta);
    return doc;
}

std::string profile_to_table(const ConfusionMatrix& m, const CoefficientProfile& profile,
                             int digits) {
    std::ostringstream out;
    out << "d = " << m.dim() << "   mass deficit = " << fmt(profile.mass_deficit, digits);
    if (!profile.class_map.empty()) {
        out << "   null classes dropped:";
        for (std::size_t k : profile.class_map.dropped_rows) out << ' ' << (k + 1);
    }
    out << "\n\n";
    out << "coefficient   value";
    for (int i = 0; i < std::max(0, digits - 1); ++i) out << ' ';
    out << "route\n";
    for (ValuationClass cls : kAllClasses) {
        const CoefficientReport& rep = profile.at(cls);
        char line[160];
        std::snprintf(line, sizeof line, "%-12s %s   %s\n", std::string(to_string(cls)).c_str(),
                      fmt(rep.value, digits).c_str(), std::string(to_string(rep.route)).c_str());
        out << line;
    }
    out << "\noptimal scores (standardized)\n";
    for (ValuationClass cls : kAllClasses) {
        const CoefficientReport& rep = profile.at(cls);
        out << "  " << to_string(cls) << "\tf:";
        for (double x : rep.f_opt) out << ' ' << fmt(x, digits);
        out << "\tg:";
        for (double x : rep.g_opt) out << ' ' << fmt(x, digits);
        out << '\n';
    }
    out << "\nkappa:";
    for (const char* name : {"indicator", "linear", "quadratic"}) {
        out << "  " << name << " = " << fmt(profile.kappa.at(name), digits);
    }
    out << '\n';
    return out.str();
}

Json verdict_to_json(const Verdict& verdict, const std::string& first_name,
                     const std::string& second_name, double epsilon, const SolverOptions& opts,
                     int digits) {
    Json doc;
    doc["first"] = first_name;
    doc["second"] = second_name;
    doc["outcome"] = std::string(to_string(verdict.outcome));
    if (verdict.deciding_step) {
        doc["deciding_step"] = std::string(to_string(*verdict.deciding_step));
    } else {
        doc["deciding_step"] = nullptr;
    }
    Json steps = Json::array();
    for (const auto& s : verdict.steps) {
        Json step;
        step["step"] = std::string(to_string(s.coefficient));
        step["first"] = round_to(s.first, digits);
        step["second"] = round_to(s.second, digits);
        step["decided"] = s.decided;
        steps.push_back(std::move(step));
    }
    doc["steps"] = std::move(steps);
    doc["epsilon"] = epsilon;
    Json meta;
    meta["seed"] = opts.seed;
    meta["restarts"] = opts.restarts;
    doc["meta"] = std::move(meta);
    return doc;
}

std::string verdict_to_table(const Verdict& verdict, const std::string& first_name,
                             const std::string& second_name, double epsilon, int digits) {
    std::ostringstream out;
    out << "comparing " << first_name << " vs " << second_name << "  (epsilon = " << epsilon
        << ")\n\n";
    out << "step    " << first_name << "  /  " << second_name << "\n";
    for (const auto& s : verdict.steps) {
        out << "  " << to_string(s.coefficient) << "\t" << fmt(s.first, digits) << "  /  "
            << fmt(s.second, digits) << (s.decided ? "   <- decided here" : "") << '\n';
    }
    out << '\n';
    switch (verdict.outcome) {
        case Verdict::Outcome::FirstInferior:
            out << first_name << " is inferior to " << second_name;
            break;
        case Verdict::Outcome::FirstSuperior:
            out << first_name << " is superior to " << second_name;
            break;
        case Verdict::Outcome::Incomparable:
            out << "comparison of " << first_name << " and " << second_name << " fails";
            break;
    }
    if (verdict.deciding_step) out << "  (decided at " << to_string(*verdict.deciding_step) << ")";
    out << '\n';
    return out.str();
}

Json mc_check_to_json(ValuationClass cls, const McEstimate& estimate, double exact,
                      const McOptions& opts, int digits) {
    Json doc;
    doc["class"] = std::string(to_string(cls));
    doc["estimate"] = round_to(estimate.value, digits);
    doc["exact"] = round_to(exact, digits);
    doc["gap"] = round_to(exact - estimate.value, digits);
    doc["accepted"] = estimate.accepted;
    doc["draws"] = estimate.draws;
    doc["acceptance_rate"] = estimate.acceptance_rate;
    doc["exhausted"] = estimate.exhausted;
    Json meta;
    meta["seed"] = opts.seed;
    meta["samples"] = opts.accepted_samples;
    doc["meta"] = std::move(meta);
    return doc;
}

std::string mc_check_to_table(ValuationClass cls, const McEstimate& estimate, double exact,
                              int digits) {
    std::ostringstream out;
    out << "class " << to_string(cls) << "\n";
    out << "  monte-carlo maximum : " << fmt(estimate.value, digits) << "  (" << estimate.accepted
        << " accepted / " << estimate.draws << " draws, rate " << estimate.acceptance_rate
        << ")\n";
    out << "  exact               : " << fmt(exact, digits) << "\n";
    out << "  gap (exact - mc)    : " << fmt(exact - estimate.value, digits) << "\n";
    if (estimate.exhausted) out << "  WARNING: draw budget exhausted before the sample target\n";
    return out.str();
}

Json kappa_to_json(const ConfusionMatrix& m, const std::map<std::string, double>& kappas,
                   int digits) {
    Json doc;
    doc["matrix"] = matrix_json(m, digits);
    Json k;
    for (const auto& [name, value] : kappas) k[name] = round_to(value, digits);
    doc["kappa"] = std::move(k);
    return doc;
}

std::string kappa_to_table(const std::map<std::string, double>& kappas, int digits) {
    std::ostringstream out;
    for (const auto& [name, value] : kappas) {
        out << name << " = " << fmt(value, digits) << '\n';
    }
    return out.str();
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace fcorr

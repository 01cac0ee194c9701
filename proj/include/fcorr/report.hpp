#pragma once

#include <string>

#include <json.hpp>

#include "fcorr/coefficients.hpp"
#include "fcorr/comparator.hpp"
#include "fcorr/mc_oracle.hpp"

namespace fcorr {

/// Rounds to the given number of decimals and normalizes -0 to 0 so emitted
/// documents are byte-stable.
double round_to(double x, int digits);

using Json = nlohmann::ordered_json;

Json profile_to_json(const ConfusionMatrix& m, const CoefficientProfile& profile,
                     const SolverOptions& opts, int digits);
std::string profile_to_table(const ConfusionMatrix& m, const CoefficientProfile& profile,
                             int digits);

Json verdict_to_json(const Verdict& verdict, const std::string& first_name,
                     const std::string& second_name, double epsilon, const SolverOptions& opts,
                     int digits);
std::string verdict_to_table(const Verdict& verdict, const std::string& first_name,
                             const std::string& second_name, double epsilon, int digits);

Json mc_check_to_json(ValuationClass cls, const McEstimate& estimate, double exact,
                      const McOptions& opts, int digits);
std::string mc_check_to_table(ValuationClass cls, const McEstimate& estimate, double exact,
                              int digits);

Json kappa_to_json(const ConfusionMatrix& m, const std::map<std::string, double>& kappas,
                   int digits);
std::string kappa_to_table(const std::map<std::string, double>& kappas, int digits);

/// Serializes with the fixed layout used everywhere (2-space indent, ordered
/// keys, trailing newline).
std::string dump_json(const Json& doc);

}  // namespace fcorr

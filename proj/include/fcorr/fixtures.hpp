#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcorr/matrix.hpp"
#include "fcorr/valuation.hpp"

namespace fcorr {

/// A named benchmark matrix shipped with the tool, together with the
/// reference coefficient values it is expected to reproduce (where known).
struct Fixture {
    std::string name;
    std::vector<std::vector<double>> raw_cells;            // as published, pre-normalization
    std::map<ValuationClass, double> reference;            // reference coefficient values
    std::string note;

    ConfusionMatrix matrix() const { return ConfusionMatrix::from_cells(raw_cells); }
};

/// All built-in fixtures in canonical order: CM0, CM1..CM6, CM10..CM12,
/// CM(A)..CM(D), plus the CM3' / CM5' variants that patch the suspected
/// 0.3285 -> 0.4285 entry so the grand total is ~1.
const std::vector<Fixture>& fixture_set();

/// Case-insensitive lookup; accepts aliases like CMA for CM(A) and CM3p for
/// CM3'.
const Fixture* find_fixture(std::string_view name);

}  // namespace fcorr

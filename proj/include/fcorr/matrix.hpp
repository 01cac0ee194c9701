#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fcorr {

/// Absolute tolerance for cell-level equality and mass checks. Inputs are
/// short decimals, so this is far tighter than anything downstream.
inline constexpr double kCellTol = 1e-12;

/// Bookkeeping for classes removed by collapse_null_classes. Indices are
/// 0-based positions in the original matrix.
struct ClassMap {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> dropped_rows;
    std::vector<std::size_t> dropped_cols;

    bool empty() const { return dropped_rows.empty() && dropped_cols.empty(); }
};

/// A validated d x d joint probability mass over ordinal classes.
///
/// Construction normalizes by the grand total and records the absolute
/// deviation of the raw total from 1 in mass_deficit(). Instances are
/// immutable after construction and safe to share across threads.
class ConfusionMatrix {
  public:
    /// Builds from a square array of nonnegative finite numbers (counts or
    /// probabilities). Throws std::invalid_argument on a non-square array,
    /// a negative or non-finite cell, an all-zero matrix, or d < 2.
    static ConfusionMatrix from_cells(const std::vector<std::vector<double>>& rows);

    /// Parses a CSV (one row per line, comma separated, no header) or a JSON
    /// document {"cells": [[...], ...], "labels": [...]}. The format is
    /// sniffed from the first non-space character.
    static ConfusionMatrix parse(std::string_view text);
    static ConfusionMatrix parse_csv(std::string_view text);
    static ConfusionMatrix parse_json(std::string_view text);

    std::size_t dim() const { return d_; }
    double at(std::size_t i, std::size_t j) const { return cells_[i * d_ + j]; }
    const std::vector<double>& cells() const { return cells_; }
    const std::vector<double>& row_marginals() const { return row_m_; }
    const std::vector<double>& col_marginals() const { return col_m_; }
    double mass_deficit() const { return mass_deficit_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// cell'(i,j) = cell(i, d-1-j); involution.
    ConfusionMatrix reverse_columns() const;

    /// cell'(i,j) = cell(perm[i], perm[j]) -- the same relabeling applied to
    /// rows and columns. Throws std::invalid_argument unless perm is a
    /// bijection on {0..d-1}.
    ConfusionMatrix permute_jointly(const std::vector<std::size_t>& perm) const;

    /// Removes classes that carry no mass at all (row and column marginals
    /// both zero); such classes cannot affect any coefficient. Classes with
    /// one-sided zero marginals are kept and handled inside the solvers.
    /// Throws std::domain_error if fewer than 2 classes survive.
    std::pair<ConfusionMatrix, ClassMap> collapse_null_classes() const;

    /// Content hash of the cell bytes; used to derive per-matrix solver
    /// streams so that joint relabelings reproduce identical inner solves.
    std::uint64_t fingerprint() const;

  private:
    ConfusionMatrix() = default;
    void finalize(double raw_total);

    std::size_t d_ = 0;
    std::vector<double> cells_;  // row-major
    std::vector<double> row_m_;
    std::vector<double> col_m_;
    double mass_deficit_ = 0.0;
    std::vector<std::string> labels_;
};

}  // namespace fcorr

#include "fcorr/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include <json.hpp>

namespace fcorr {

namespace {

double parse_number(std::string_view token, std::size_t line_no) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end) {
        throw std::invalid_argument("matrix parse: bad number on line " +
                                    std::to_string(line_no + 1) + ": '" +
                                    std::string(token) + "'");
    }
    return value;
}

}  // namespace

void ConfusionMatrix::finalize(double raw_total) {
    if (!(raw_total > 0.0)) {
        throw std::invalid_argument("matrix: all cells are zero");
    }
    for (double& c : cells_) c /= raw_total;
    mass_deficit_ = std::abs(raw_total - 1.0);

    row_m_.assign(d_, 0.0);
    col_m_.assign(d_, 0.0);
    for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) {
            row_m_[i] += at(i, j);
            col_m_[j] += at(i, j);
        }
    }
}

ConfusionMatrix ConfusionMatrix::from_cells(const std::vector<std::vector<double>>& rows) {
    const std::size_t d = rows.size();
    if (d < 2) throw std::invalid_argument("matrix: need at least 2 classes");
    ConfusionMatrix m;
    m.d_ = d;
    m.cells_.reserve(d * d);
    double total = 0.0;
    for (const auto& row : rows) {
        if (row.size() != d) throw std::invalid_argument("matrix: array is not square");
        for (double c : row) {
            if (!std::isfinite(c)) throw std::invalid_argument("matrix: non-finite cell");
            if (c < 0.0) throw std::invalid_argument("matrix: negative cell");
            m.cells_.push_back(c);
            total += c;
        }
    }
    m.finalize(total);
    return m;
}

ConfusionMatrix ConfusionMatrix::parse_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        // skip blank lines
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            ++line_no;
            continue;
        }
        std::vector<double> row;
        std::size_t cell_pos = 0;
        while (true) {
            std::size_t comma = line.find(',', cell_pos);
            std::string_view tok = line.substr(
                cell_pos, comma == std::string_view::npos ? std::string_view::npos : comma - cell_pos);
            row.push_back(parse_number(tok, line_no));
            if (comma == std::string_view::npos) break;
            cell_pos = comma + 1;
        }
        rows.push_back(std::move(row));
        ++line_no;
    }
    if (rows.empty()) throw std::invalid_argument("matrix parse: empty document");
    return from_cells(rows);
}

ConfusionMatrix ConfusionMatrix::parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("matrix parse: invalid JSON: ") + e.what());
    }
    const nlohmann::json* cells = nullptr;
    if (doc.is_array()) {
        cells = &doc;
    } else if (doc.is_object() && doc.contains("cells")) {
        cells = &doc["cells"];
    } else {
        throw std::invalid_argument("matrix parse: expected an array or {\"cells\": ...}");
    }
    if (!cells->is_array()) throw std::invalid_argument("matrix parse: \"cells\" is not an array");
    std::vector<std::vector<double>> rows;
    for (const auto& row : *cells) {
        if (!row.is_array()) throw std::invalid_argument("matrix parse: row is not an array");
        std::vector<double> r;
        for (const auto& v : row) {
            if (!v.is_number()) throw std::invalid_argument("matrix parse: cell is not a number");
            r.push_back(v.get<double>());
        }
        rows.push_back(std::move(r));
    }
    ConfusionMatrix m = from_cells(rows);
    if (doc.is_object() && doc.contains("labels")) {
        const auto& labels = doc["labels"];
        if (!labels.is_array() || labels.size() != m.d_) {
            throw std::invalid_argument("matrix parse: \"labels\" must list one name per class");
        }
        for (const auto& l : labels) m.labels_.push_back(l.get<std::string>());
    }
    return m;
}

ConfusionMatrix ConfusionMatrix::parse(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw std::invalid_argument("matrix parse: empty document");
    const char c = text[first];
    if (c == '{' || c == '[') return parse_json(text);
    return parse_csv(text);
}

ConfusionMatrix ConfusionMatrix::reverse_columns() const {
    ConfusionMatrix m;
    m.d_ = d_;
    m.labels_ = labels_;
    m.mass_deficit_ = mass_deficit_;
    m.cells_.resize(d_ * d_);
    for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) {
            m.cells_[i * d_ + j] = at(i, d_ - 1 - j);
        }
    }
    m.row_m_ = row_m_;
    m.col_m_.assign(col_m_.rbegin(), col_m_.rend());
    return m;
}

ConfusionMatrix ConfusionMatrix::permute_jointly(const std::vector<std::size_t>& perm) const {
    if (perm.size() != d_) throw std::invalid_argument("permute: wrong permutation length");
    std::vector<bool> seen(d_, false);
    for (std::size_t p : perm) {
        if (p >= d_ || seen[p]) throw std::invalid_argument("permute: not a bijection");
        seen[p] = true;
    }
    ConfusionMatrix m;
    m.d_ = d_;
    m.mass_deficit_ = mass_deficit_;
    m.cells_.resize(d_ * d_);
    m.row_m_.resize(d_);
    m.col_m_.resize(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        m.row_m_[i] = row_m_[perm[i]];
        m.col_m_[i] = col_m_[perm[i]];
        for (std::size_t j = 0; j < d_; ++j) {
            m.cells_[i * d_ + j] = at(perm[i], perm[j]);
        }
    }
    if (!labels_.empty()) {
        m.labels_.resize(d_);
        for (std::size_t i = 0; i < d_; ++i) m.labels_[i] = labels_[perm[i]];
    }
    return m;
}

std::pair<ConfusionMatrix, ClassMap> ConfusionMatrix::collapse_null_classes() const {
    ClassMap map;
    for (std::size_t k = 0; k < d_; ++k) {
        if (row_m_[k] == 0.0 && col_m_[k] == 0.0) {
            map.dropped_rows.push_back(k);
            map.dropped_cols.push_back(k);
        } else {
            map.kept.push_back(k);
        }
    }
    if (map.kept.size() < 2) {
        throw std::domain_error("collapse: fewer than 2 classes carry mass");
    }
    if (map.empty()) return {*this, map};

    ConfusionMatrix m;
    m.d_ = map.kept.size();
    m.mass_deficit_ = mass_deficit_;
    m.cells_.resize(m.d_ * m.d_);
    m.row_m_.resize(m.d_);
    m.col_m_.resize(m.d_);
    for (std::size_t i = 0; i < m.d_; ++i) {
        m.row_m_[i] = row_m_[map.kept[i]];
        m.col_m_[i] = col_m_[map.kept[i]];
        for (std::size_t j = 0; j < m.d_; ++j) {
            m.cells_[i * m.d_ + j] = at(map.kept[i], map.kept[j]);
        }
    }
    if (!labels_.empty()) {
        for (std::size_t k : map.kept) m.labels_.push_back(labels_[k]);
    }
    return {std::move(m), std::move(map)};
}

std::uint64_t ConfusionMatrix::fingerprint() const {
    // FNV-1a over the raw cell bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (double c : cells_) {
        std::uint64_t bits;
        std::memcpy(&bits, &c, sizeof bits);
        for (int k = 0; k < 8; ++k) {
            h ^= (bits >> (8 * k)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace fcorr

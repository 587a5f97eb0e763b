#include "orthodontia/diagram.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

#include "orthodontia/parse_error.hpp"
#include "orthodontia/polynomial.hpp"

namespace orthodontia {

RowSet RowSet::interval(int k) {
    if (k < 0 || k > kMaxVars) throw std::out_of_range("interval size out of range");
    RowSet s;
    s.bits_ = k == 32 ? ~0U : ((1U << k) - 1U);
    return s;
}

RowSet RowSet::from_rows(const std::vector<int>& rows) {
    RowSet s;
    for (int r : rows) s.insert(r);
    return s;
}

void RowSet::insert(int row) {
    if (row < 1 || row > kMaxVars) throw std::out_of_range("row " + std::to_string(row) + " out of range");
    bits_ |= 1U << (row - 1);
}

int RowSet::size() const { return std::popcount(bits_); }

int RowSet::smallest_missing_tooth() const {
    // bit i-1 clear and bit i set
    const std::uint32_t teeth = ~bits_ & (bits_ >> 1);
    return teeth == 0 ? 0 : std::countr_zero(teeth) + 1;
}

RowSet RowSet::with_rows_swapped(int r) const {
    RowSet s = *this;
    const bool a = contains(r);
    const bool b = contains(r + 1);
    if (a != b) {
        s.bits_ ^= 1U << (r - 1);
        s.bits_ ^= 1U << r;
    }
    return s;
}

std::vector<int> RowSet::rows() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

Diagram::Diagram(int nrows, std::vector<RowSet> columns) : nrows_(nrows), columns_(std::move(columns)) {
    if (nrows < 0 || nrows > kMaxVars) throw std::invalid_argument("diagram row count out of range");
    const RowSet all = RowSet::interval(nrows);
    for (const auto& c : columns_)
        if (!c.is_subset_of(all)) throw std::invalid_argument("diagram column has a row outside [n]");
}

bool Diagram::empty() const {
    for (const auto& c : columns_)
        if (!c.empty()) return false;
    return true;
}

int Diagram::box_count() const {
    int total = 0;
    for (const auto& c : columns_) total += c.size();
    return total;
}

int Diagram::row_count(int row) const {
    int total = 0;
    for (const auto& c : columns_) total += c.contains(row) ? 1 : 0;
    return total;
}

std::string Diagram::to_string() const {
    std::string out = "n=" + std::to_string(nrows_) + ";";
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (j > 0) out += ';';
        const auto rows = columns_[j].rows();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k > 0) out += ',';
            out += std::to_string(rows[k]);
        }
    }
    return out;
}

Diagram parse_diagram(std::string_view text) {
    if (text.substr(0, 2) != "n=") throw ParseError("diagram must start with 'n=<rows>;'", 0);
    std::size_t pos = 2;
    const auto read_int = [&]() {
        const std::size_t begin = pos;
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos++] - '0');
            if (v > 1000) throw ParseError("integer too large", begin);
        }
        if (pos == begin) throw ParseError("expected an integer", pos);
        return v;
    };
    const int n = read_int();
    if (n > kMaxVars) throw ParseError("at most " + std::to_string(kMaxVars) + " rows supported", 2);
    if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';' after row count", pos);
    ++pos;
    std::vector<RowSet> columns;
    if (pos == text.size()) return Diagram(n, {});
    RowSet current;
    while (true) {
        if (pos == text.size()) {
            columns.push_back(current);
            break;
        }
        if (text[pos] == ';') {
            columns.push_back(current);
            current = RowSet{};
            ++pos;
            if (pos == text.size()) {
                columns.push_back(current);
                break;
            }
            continue;
        }
        const std::size_t at = pos;
        const int row = read_int();
        if (row < 1 || row > n) throw ParseError("row " + std::to_string(row) + " outside [1, " + std::to_string(n) + "]", at);
        current.insert(row);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected a row after ','", pos);
        } else if (pos < text.size() && text[pos] != ';') {
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        }
    }
    return Diagram(n, std::move(columns));
}

Diagram rothe(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = w.inverse();
    std::vector<RowSet> columns(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i < winv(j) && j < w(i)) columns[static_cast<std::size_t>(j - 1)].insert(i);
    return Diagram(n, std::move(columns));
}

Diagram skyline(const Composition& alpha) {
    std::vector<RowSet> columns(static_cast<std::size_t>(alpha.max_part()));
    for (int i = 1; i <= alpha.size(); ++i)
        for (int j = 1; j <= alpha[i - 1]; ++j) columns[static_cast<std::size_t>(j - 1)].insert(i);
    return Diagram(alpha.size(), std::move(columns));
}

bool is_percent_avoiding(const Diagram& d) {
    const int n = d.nrows();
    for (int j1 = 1; j1 <= d.ncols(); ++j1)
        for (int j2 = j1 + 1; j2 <= d.ncols(); ++j2)
            for (int i1 = 1; i1 <= n; ++i1)
                for (int i2 = i1 + 1; i2 <= n; ++i2)
                    if (d.contains(i2, j1) && d.contains(i1, j2) && !d.contains(i1, j1) && !d.contains(i2, j2))
                        return false;
    return true;
}

bool columns_ordered_by_inclusion(const Diagram& d) {
    for (int a = 1; a <= d.ncols(); ++a)
        for (int b = a + 1; b <= d.ncols(); ++b)
            if (!d.column(a).is_subset_of(d.column(b)) && !d.column(b).is_subset_of(d.column(a))) return false;
    return true;
}

std::vector<Diagram> all_diagrams(int n, int m) {
    if (n * m > 24) throw std::invalid_argument("diagram enumeration limited to n*m <= 24");
    std::vector<Diagram> out;
    const std::uint32_t total = 1U << (n * m);
    out.reserve(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<RowSet> columns(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i)
                if ((mask >> (j * n + i)) & 1U) columns[static_cast<std::size_t>(j)].insert(i + 1);
        out.emplace_back(n, std::move(columns));
    }
    return out;
}

OrthodonticSequence orthodontic_sequence(const Diagram& d, OrthodontiaOptions options) {
    if (!options.allow_non_percent_avoiding && !is_percent_avoiding(d))
        throw std::invalid_argument("diagram " + d.to_string() + " is not %-avoiding");

    const int n = d.nrows();
    OrthodonticSequence seq;
    seq.K.resize(static_cast<std::size_t>(n));
    std::vector<RowSet> cols = d.columns();
    for (int j = 1; j <= d.ncols(); ++j) {
        RowSet& c = cols[static_cast<std::size_t>(j - 1)];
        if (!c.empty() && c.is_standard_interval()) {
            seq.K[static_cast<std::size_t>(c.size() - 1)].push_back(j);
            c = RowSet{};
        }
    }
    if (options.trace) options.trace->emplace_back(n, cols);

    // Each step moves a box of the leftmost column up; cap guards the unchecked mode.
    const int step_cap = 64 * (n + 1) * (n + 1) * (d.ncols() + 1);
    for (int step = 0;; ++step) {
        int leftmost = 0;
        for (int j = 1; j <= d.ncols() && leftmost == 0; ++j)
            if (!cols[static_cast<std::size_t>(j - 1)].empty()) leftmost = j;
        if (leftmost == 0) break;
        if (step >= step_cap) throw std::runtime_error("orthodontia did not terminate on " + d.to_string());

        const RowSet& lead = cols[static_cast<std::size_t>(leftmost - 1)];
        const int tooth = lead.smallest_missing_tooth();
        if (tooth == 0) throw std::runtime_error("orthodontia stuck: leftmost column has no missing tooth");
        int gaps = 0;
        for (int a = 1; a <= tooth; ++a) gaps += lead.contains(a) ? 0 : 1;
        seq.i.push_back(tooth);
        seq.j.push_back(leftmost - gaps);

        std::vector<int> stripped;
        const RowSet target = RowSet::interval(tooth);
        for (int j = 1; j <= d.ncols(); ++j) {
            RowSet& c = cols[static_cast<std::size_t>(j - 1)];
            c = c.with_rows_swapped(tooth);
            if (!c.empty() && c == target) {
                stripped.push_back(j);
                c = RowSet{};
            }
        }
        seq.M.push_back(std::move(stripped));
        if (options.trace) options.trace->emplace_back(n, cols);
    }
    return seq;
}

}  // namespace orthodontia

#pragma once

// Diagrams D in [n] x [m] stored column by column, and the double
// orthodontia algorithm on %-avoiding diagrams.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orthodontia/permutation.hpp"

namespace orthodontia {

/// A subset of rows [1, 16], as a bit mask (bit r-1 <-> row r).
class RowSet {
public:
    constexpr RowSet() = default;
    static RowSet interval(int k);  // [k] = {1..k}
    static RowSet from_rows(const std::vector<int>& rows);

    bool contains(int row) const { return row >= 1 && (bits_ >> (row - 1)) & 1U; }
    void insert(int row);
    void erase(int row) { bits_ &= ~(1U << (row - 1)); }
    int size() const;
    bool empty() const { return bits_ == 0; }
    /// Equal to [k] for some k >= 0.
    bool is_standard_interval() const { return (bits_ & (bits_ + 1)) == 0; }
    bool is_subset_of(RowSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Smallest i with i not in the set and i+1 in it; 0 if none.
    int smallest_missing_tooth() const;
    /// Swap membership of rows r and r+1.
    RowSet with_rows_swapped(int r) const;
    std::vector<int> rows() const;
    std::uint32_t bits() const { return bits_; }

    bool operator==(const RowSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

class Diagram {
public:
    Diagram() = default;
    /// Throws std::invalid_argument if a column mentions a row outside [n].
    Diagram(int nrows, std::vector<RowSet> columns);

    int nrows() const { return nrows_; }
    int ncols() const { return static_cast<int>(columns_.size()); }
    /// Column j, 1-based.
    const RowSet& column(int j) const { return columns_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<RowSet>& columns() const { return columns_; }
    bool contains(int row, int col) const { return col >= 1 && col <= ncols() && column(col).contains(row); }
    bool empty() const;
    int box_count() const;
    /// Number of boxes of D in the given row.
    int row_count(int row) const;
    /// "n=5;1;1,3,4;;3;"
    std::string to_string() const;

    bool operator==(const Diagram&) const = default;

private:
    int nrows_ = 0;
    std::vector<RowSet> columns_;
};

Diagram parse_diagram(std::string_view text);

/// D(w) = {(i, j) : i < w^{-1}(j), j < w(i)}, an n x n diagram.
Diagram rothe(const Permutation& w);
/// Column j = {i : alpha_i >= j}, j = 1..max(alpha).
Diagram skyline(const Composition& alpha);

bool is_percent_avoiding(const Diagram& d);
bool columns_ordered_by_inclusion(const Diagram& d);

/// Every diagram in [n] x [m], ordered by the bit pattern (column 1 low bits).
std::vector<Diagram> all_diagrams(int n, int m);

struct OrthodonticSequence {
    /// K[a-1] = columns stripped as [a]; length n.
    std::vector<std::vector<int>> K;
    std::vector<int> i;
    std::vector<int> j;
    std::vector<std::vector<int>> M;

    std::size_t steps() const { return i.size(); }
    bool operator==(const OrthodonticSequence&) const = default;
};

struct OrthodontiaOptions {
    /// Run on non-%-avoiding input instead of rejecting it.
    bool allow_non_percent_avoiding = false;
    /// When non-null, receives D_- followed by the diagram after each step.
    std::vector<Diagram>* trace = nullptr;
};

/// Throws std::invalid_argument on non-%-avoiding input unless allowed, and
/// std::runtime_error if the algorithm gets stuck (only possible when allowed).
OrthodonticSequence orthodontic_sequence(const Diagram& d, OrthodontiaOptions options = {});

}  // namespace orthodontia

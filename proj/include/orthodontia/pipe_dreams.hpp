#pragma once

// Brute-force pipe dreams: every subset of the staircase {(i,j) : i+j <= n}
// is enumerated and bucketed by its Demazure product.

#include <cstdint>
#include <utility>
#include <vector>

#include "orthodontia/permutation.hpp"
#include "orthodontia/polynomial.hpp"

namespace orthodontia {

inline constexpr int kMaxPipeDreamSize = 7;

class PipeDream {
public:
    /// Throws std::invalid_argument if a cell lies outside the staircase.
    PipeDream(int n, const std::vector<std::pair<int, int>>& crosses);

    int size() const { return n_; }
    bool has_cross(int row, int col) const;
    /// Crosses sorted by (row, col).
    std::vector<std::pair<int, int>> crosses() const;

    static PipeDream from_mask(int n, std::uint32_t mask);
    std::uint32_t mask() const { return mask_; }

    bool operator==(const PipeDream&) const = default;

private:
    PipeDream() = default;
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

/// Demazure product of s_{i+j-1} over the crosses, rows top to bottom, each row right to left.
Permutation demazure_word_of(const PipeDream& p);

/// PD(w), sorted by cross list. Throws std::invalid_argument if |w| > kMaxPipeDreamSize.
std::vector<PipeDream> enumerate_pd(const Permutation& w);

enum class PipeDreamSign { signed_by_excess, unsigned_literal };

/// sum over PD(w) of (-1)^{|P| - l(w)} prod_{(i,j) in P} (x_i + y_j - x_i y_j); ambient (n, n).
/// With unsigned_literal the sign is dropped, which disagrees with the
/// recursion as soon as PD(w) contains a non-reduced pipe dream (e.g. 132).
Polynomial weight_sum(const Permutation& w, PipeDreamSign sign = PipeDreamSign::signed_by_excess);

}  // namespace orthodontia

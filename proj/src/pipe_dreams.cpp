#include "orthodontia/pipe_dreams.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "orthodontia/operators.hpp"

namespace orthodontia {

namespace {

/// Staircase cells in row-major order; bit k of a mask is cells[k].
std::vector<std::pair<int, int>> staircase_cells(int n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) cells.emplace_back(i, j);
    return cells;
}

int cell_index(int n, int row, int col) {
    // Rows 1..row-1 contribute (n-1) + (n-2) + ... cells.
    int index = 0;
    for (int r = 1; r < row; ++r) index += n - r;
    return index + col - 1;
}

void check_size(int n) {
    if (n < 1 || n > kMaxPipeDreamSize)
        throw std::invalid_argument("pipe dream enumeration supports 1 <= n <= " + std::to_string(kMaxPipeDreamSize));
}

using Buckets = std::map<Permutation, std::vector<PipeDream>>;

const Buckets& buckets_for(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<Buckets>> by_size;
    std::lock_guard lock(mutex);
    auto& slot = by_size[n];
    if (!slot) {
        auto buckets = std::make_unique<Buckets>();
        const std::uint32_t total = 1U << (n * (n - 1) / 2);
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            const PipeDream p = PipeDream::from_mask(n, mask);
            (*buckets)[demazure_word_of(p)].push_back(p);
        }
        for (auto& [w, list] : *buckets)
            std::sort(list.begin(), list.end(),
                      [](const PipeDream& a, const PipeDream& b) { return a.crosses() < b.crosses(); });
        slot = std::move(buckets);
    }
    return *slot;
}

}  // namespace

PipeDream::PipeDream(int n, const std::vector<std::pair<int, int>>& crosses) : n_(n) {
    check_size(n);
    for (auto [row, col] : crosses) {
        if (row < 1 || col < 1 || row + col > n)
            throw std::invalid_argument("cell (" + std::to_string(row) + "," + std::to_string(col) +
                                        ") outside the staircase");
        mask_ |= 1U << cell_index(n, row, col);
    }
}

PipeDream PipeDream::from_mask(int n, std::uint32_t mask) {
    PipeDream p;
    p.n_ = n;
    p.mask_ = mask;
    return p;
}

bool PipeDream::has_cross(int row, int col) const {
    if (row < 1 || col < 1 || row + col > n_) return false;
    return (mask_ >> cell_index(n_, row, col)) & 1U;
}

std::vector<std::pair<int, int>> PipeDream::crosses() const {
    std::vector<std::pair<int, int>> out;
    for (auto [row, col] : staircase_cells(n_))
        if (has_cross(row, col)) out.emplace_back(row, col);
    return out;
}

Permutation demazure_word_of(const PipeDream& p) {
    const int n = p.size();
    Permutation w = Permutation::identity(n);
    for (int row = 1; row < n; ++row)
        for (int col = n - row; col >= 1; --col)
            if (p.has_cross(row, col)) w = w.demazure_star(row + col - 1);
    return w;
}

std::vector<PipeDream> enumerate_pd(const Permutation& w) {
    check_size(w.size());
    const auto& buckets = buckets_for(w.size());
    auto it = buckets.find(w);
    return it == buckets.end() ? std::vector<PipeDream>{} : it->second;
}

Polynomial weight_sum(const Permutation& w, PipeDreamSign sign) {
    const int n = w.size();
    const int length = w.length();
    TermAccumulator acc;
    for (const auto& p : enumerate_pd(w)) {
        const auto crosses = p.crosses();
        const bool negate = sign == PipeDreamSign::signed_by_excess &&
                            (static_cast<int>(crosses.size()) - length) % 2 != 0;
        Polynomial weight = Polynomial::constant(n, n, negate ? -1 : 1);
        for (auto [row, col] : crosses) weight *= bilinear_factor(row, col, n, n);
        acc.add(weight);
    }
    return std::move(acc).finish(n, n);
}

}  // namespace orthodontia

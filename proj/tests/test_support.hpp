#pragma once

// Generators and small independent oracles shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "orthodontia/diagram.hpp"
#include "orthodontia/operators.hpp"
#include "orthodontia/permutation.hpp"
#include "orthodontia/polynomial.hpp"

namespace testing {

using orthodontia::Composition;
using orthodontia::Diagram;
using orthodontia::Integer;
using orthodontia::Monomial;
using orthodontia::Permutation;
using orthodontia::Polynomial;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return range(0, 1) == 1; }

    Permutation permutation(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        std::shuffle(images.begin(), images.end(), engine_);
        return Permutation(std::move(images));
    }

    Composition composition(int n, int max_entry) {
        std::vector<int> parts(static_cast<std::size_t>(n));
        for (int& p : parts) p = range(0, max_entry);
        return Composition(std::move(parts));
    }

    /// Random monomials with per-variable exponent <= max_exp, total degree <= max_degree.
    Polynomial polynomial(int n, int m, int max_exp, int max_degree, int terms) {
        Polynomial p(n, m);
        for (int t = 0; t < terms; ++t) {
            Monomial mono;
            int budget = max_degree;
            for (int i = 1; i <= n; ++i) {
                const int e = std::min(budget, range(0, max_exp));
                mono.set_x(i, e);
                budget -= e;
            }
            for (int j = 1; j <= m; ++j) {
                const int e = std::min(budget, range(0, 1));
                mono.set_y(j, e);
                budget -= e;
            }
            p += Polynomial::monomial(n, m, mono, range(-3, 3));
        }
        return p;
    }

    Diagram diagram(int n, int m) {
        std::vector<orthodontia::RowSet> cols;
        for (int j = 0; j < m; ++j) {
            std::vector<int> rows;
            for (int i = 1; i <= n; ++i)
                if (coin()) rows.push_back(i);
            cols.push_back(orthodontia::RowSet::from_rows(rows));
        }
        return Diagram(n, std::move(cols));
    }

private:
    std::mt19937_64 engine_;
};

inline Integer evaluate(const Polynomial& f, const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    Integer total = 0;
    for (const auto& t : f.terms()) {
        Integer v = t.coeff;
        for (int i = 1; i <= f.n(); ++i)
            for (int e = 0; e < t.monomial.x(i); ++e) v *= xs[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= f.m(); ++j)
            for (int e = 0; e < t.monomial.y(j); ++e) v *= ys[static_cast<std::size_t>(j - 1)];
        total += v;
    }
    return total;
}

inline int inversions(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

/// {(i, j) : i < w^{-1}(j), j < w(i)} straight from the definition.
inline std::set<std::pair<int, int>> rothe_cells(const Permutation& w) {
    std::set<std::pair<int, int>> cells;
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int winv = 0;
            for (int k = 1; k <= n; ++k)
                if (w(k) == j) winv = k;
            if (i < winv && j < w(i)) cells.emplace(i, j);
        }
    return cells;
}

inline std::set<std::pair<int, int>> cells_of(const Diagram& d) {
    std::set<std::pair<int, int>> cells;
    for (int j = 1; j <= d.ncols(); ++j)
        for (int i : d.column(j).rows()) cells.emplace(i, j);
    return cells;
}

/// L_alpha by always peeling the last ascent: L_alpha = pibar_i L_{alpha s_i}.
inline Polynomial lascoux_last_ascent(const Composition& alpha) {
    const int n = alpha.size();
    int last = 0;
    for (int i = 1; i < n; ++i)
        if (alpha[i - 1] < alpha[i]) last = i;
    if (last == 0) {
        std::vector<int> e(alpha.parts().begin(), alpha.parts().end());
        return Polynomial::x_power(e);
    }
    return orthodontia::demazure_lascoux(lascoux_last_ascent(alpha.swapped(last)), last);
}

/// Coefficients c_a with f = sum c_a L_a over the box a in [0, D]^n, D the
/// largest per-variable degree of f, by Gaussian elimination modulo a 61-bit
/// prime on the monomial coordinates of lascoux_last_ascent. Coefficients are
/// read back as symmetric residues, so they must be smaller than 2^59 in size.
/// nullopt when the box polynomials are singular modulo the prime.
inline std::optional<std::map<Composition, Integer>> reexpand_mod_p(const Polynomial& f) {
    using u64 = std::uint64_t;
    using u128 = unsigned __int128;
    static constexpr u64 p = (u64{1} << 61) - 1;
    const auto mulmod = [](u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % p); };
    const auto powmod = [&](u64 a, u64 e) {
        u64 r = 1;
        for (; e; e >>= 1, a = mulmod(a, a))
            if (e & 1) r = mulmod(r, a);
        return r;
    };
    const auto reduce = [](const Integer& v) {
        Integer r = v % Integer(p);
        if (r < 0) r += p;
        return static_cast<u64>(r);
    };

    const int n = f.n();
    const int dmax = f.max_x_degree();
    std::vector<Composition> box;
    for (const auto& a : orthodontia::all_compositions(n, dmax)) box.push_back(a);
    const std::size_t dim = box.size();
    std::map<Composition, std::size_t> coordinate;
    for (std::size_t k = 0; k < dim; ++k) coordinate[box[k]] = k;
    const auto coord_of = [&](const Monomial& mono) -> std::optional<std::size_t> {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            if (mono.x(i) > dmax) return std::nullopt;
            e[static_cast<std::size_t>(i - 1)] = mono.x(i);
        }
        return coordinate.at(Composition(e));
    };

    // Row r = monomial coordinate r; column k = L_{box[k]}; last column = f.
    std::vector<std::vector<u64>> a(dim, std::vector<u64>(dim + 1, 0));
    for (std::size_t k = 0; k < dim; ++k) {
        const Polynomial l = lascoux_last_ascent(box[k]);
        for (const auto& t : l.terms()) {
            const auto r = coord_of(t.monomial);
            if (!r) return std::nullopt;
            a[*r][k] = reduce(t.coeff);
        }
    }
    for (const auto& t : f.terms()) a[*coord_of(t.monomial)][dim] = reduce(t.coeff);

    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && a[pivot][col] == 0) ++pivot;
        if (pivot == dim) return std::nullopt;
        std::swap(a[pivot], a[col]);
        const u64 inv = powmod(a[col][col], p - 2);
        for (std::size_t k = col; k <= dim; ++k) a[col][k] = mulmod(a[col][k], inv);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const u64 factor = a[r][col];
            for (std::size_t k = col; k <= dim; ++k) a[r][k] = (a[r][k] + p - mulmod(factor, a[col][k])) % p;
        }
    }
    std::map<Composition, Integer> out;
    for (std::size_t k = 0; k < dim; ++k) {
        const u64 v = a[k][dim];
        if (v == 0) continue;
        out[box[k]] = v > p / 2 ? Integer(v) - Integer(p) : Integer(v);
    }
    return out;
}

inline Polynomial x(int n, int m, int i) { return Polynomial::x(n, m, i); }
inline Polynomial y(int n, int m, int j) { return Polynomial::y(n, m, j); }
inline Polynomial c(int n, int m, const Integer& v) { return Polynomial::constant(n, m, v); }

}  // namespace testing

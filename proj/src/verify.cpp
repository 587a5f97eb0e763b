#include "orthodontia/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "orthodontia/diagram.hpp"
#include "orthodontia/families.hpp"
#include "orthodontia/lascoux_basis.hpp"
#include "orthodontia/operators.hpp"
#include "orthodontia/parallel.hpp"
#include "orthodontia/pipe_dreams.hpp"
#include "orthodontia/sort_order.hpp"

namespace orthodontia {

namespace {

using Checks = std::vector<VerifyCheck>;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

Polynomial random_polynomial(Rng& rng, int n, int m, int max_degree, int max_var_degree, int max_terms) {
    TermAccumulator acc;
    const int terms = rng.uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial mono;
        const int d = rng.uniform(0, max_degree);
        for (int unit = 0; unit < d; ++unit) {
            const int v = rng.uniform(0, n + m - 1);
            if (v < n) {
                if (mono.x(v + 1) < max_var_degree) mono.set_x(v + 1, mono.x(v + 1) + 1);
            } else if (mono.y(v - n + 1) < max_var_degree) {
                mono.set_y(v - n + 1, mono.y(v - n + 1) + 1);
            }
        }
        int c = rng.uniform(-3, 3);
        if (c == 0) c = 1;
        acc.add(mono, c);
    }
    return std::move(acc).finish(n, m);
}

/// Elementary symmetric polynomial e_k in the given x variables.
Polynomial elementary(int k, const std::vector<int>& vars, int n, int m) {
    TermAccumulator acc;
    const std::size_t s = vars.size();
    for (std::uint32_t mask = 0; mask < (1U << s); ++mask) {
        if (std::popcount(mask) != k) continue;
        Monomial mono;
        for (std::size_t b = 0; b < s; ++b)
            if (mask >> b & 1U) mono.set_x(vars[b], 1);
        acc.add(mono, 1);
    }
    return std::move(acc).finish(n, m);
}

/// A random polynomial symmetric in the x variables listed in `sym`.
Polynomial random_symmetric_in(Rng& rng, const std::vector<int>& sym, int n, int m) {
    std::vector<int> others;
    for (int v = 1; v <= n; ++v)
        if (std::find(sym.begin(), sym.end(), v) == sym.end()) others.push_back(v);
    Polynomial g(n, m);
    const int terms = rng.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        Monomial mono;
        for (int v : others) mono.set_x(v, rng.uniform(0, 2));
        for (int j = 1; j <= m; ++j) mono.set_y(j, rng.uniform(0, 1));
        Polynomial piece = Polynomial::monomial(n, m, mono, rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1));
        piece *= elementary(rng.uniform(0, static_cast<int>(sym.size())), sym, n, m);
        piece *= elementary(rng.uniform(0, static_cast<int>(sym.size())), sym, n, m);
        g += piece;
    }
    return g;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::string set_string(const std::vector<int>& v) { return "{" + join(v) + "}"; }

std::string k_string(const std::vector<std::vector<int>>& k) {
    std::string s = "(";
    for (std::size_t a = 0; a < k.size(); ++a) s += (a ? "," : "") + set_string(k[a]);
    return s + ")";
}

VerifyCheck check(std::string group, std::string item, bool ok, std::string detail = {}) {
    return VerifyCheck{std::move(group), std::move(item), ok, ok ? std::string{} : std::move(detail)};
}

std::string mismatch(const Polynomial& lhs, const Polynomial& rhs) {
    return "lhs - rhs = " + (lhs - rhs).to_string();
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int v : a)
        if (std::find(b.begin(), b.end(), v) == b.end()) out.push_back(v);
    return out;
}

Checks flatten(std::vector<Checks> parts) {
    Checks out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Permutation suites

Checks thm11_checks(const Permutation& w) {
    const Polynomial g = double_grothendieck(w);
    const Polynomial pd = weight_sum(w);
    const Polynomial orth = script_G(rothe(w));
    std::string detail;
    if (g != pd) detail += "recursion vs pipe dreams: " + mismatch(g, pd) + "; ";
    if (g != orth) detail += "recursion vs orthodontia: " + mismatch(g, orth);
    return {check("triple-agreement", "w=" + w.to_string(), g == pd && g == orth, detail)};
}

Checks cor_double_schub_checks(const Permutation& w) {
    const Polynomial s = double_schubert(w);
    const Polynomial orth = script_S(rothe(w));
    const Polynomial rec = double_schubert_by_recursion(w);
    const Polynomial neg = s.negate_y();
    return {check("orthodontia", "w=" + w.to_string(), orth == neg, mismatch(orth, neg)),
            check("recursion", "w=" + w.to_string(), s == rec, mismatch(s, rec))};
}

using Cell = std::pair<int, int>;

std::set<Cell> cells_of(const Diagram& d) {
    std::set<Cell> out;
    for (int col = 1; col <= d.ncols(); ++col)
        for (int row : d.column(col).rows()) out.emplace(row, col);
    return out;
}

Polynomial bilinear_product(const std::set<Cell>& cells, int n, int m) {
    Polynomial p = Polynomial::constant(n, m, 1);
    for (auto [a, b] : cells) p *= bilinear_factor(a, b, n, m);
    return p;
}

/// K of w from K' of w_sort with K_alpha corrected to K'_alpha minus the
/// columns that actually grow; `literal` removes all of h-beta+1..h instead.
std::vector<std::vector<int>> predicted_k(const std::vector<std::vector<int>>& k_sort, const PrimaryColumnData& data,
                                          const Permutation& sigma, bool literal) {
    const Diagram ds = rothe(sigma);
    std::vector<std::vector<int>> k = k_sort;
    std::vector<int> grown;
    std::vector<int> window;
    for (int b = 1; b <= data.beta; ++b) {
        const int col = data.h - data.beta + b;
        window.push_back(col);
        const int a = ds.column(b).size();
        if (a == 0) continue;
        grown.push_back(col);
        auto& slot = k[static_cast<std::size_t>(data.alpha + a - 1)];
        slot = sorted_union(slot, {col});
    }
    if (data.alpha > 0) {
        auto& slot = k[static_cast<std::size_t>(data.alpha - 1)];
        slot = minus(slot, literal ? window : grown);
    }
    return k;
}

Checks prop_os1_checks(const Permutation& w) {
    Checks out;
    const int n = w.size();
    const std::string item = "w=" + w.to_string();
    const auto data = primary_column_data(w);
    const Permutation sigma = sigma_of(w);
    const Permutation ws = sort_of(w);
    const Diagram dw = rothe(w);
    const Diagram dsort = rothe(ws);
    const auto cw = cells_of(dw);
    const auto csort = cells_of(dsort);

    // Difference set of Rothe diagrams.
    std::set<Cell> expected;
    const Diagram dsigma = rothe(sigma);
    for (int b = 1; b <= data.beta; ++b)
        for (int a = 1; a <= dsigma.column(b).size(); ++a) expected.emplace(data.alpha + a, data.h - data.beta + b);
    std::set<Cell> diff;
    std::set_difference(cw.begin(), cw.end(), csort.begin(), csort.end(), std::inserter(diff, diff.end()));
    const bool contains = std::includes(cw.begin(), cw.end(), csort.begin(), csort.end());
    out.push_back(check("rothe-of-sort", item, contains && diff == expected,
                        contains ? "difference set differs from the predicted cells" : "D(w_sort) not contained"));

    // Orthodontic data of w and w_sort.
    const auto seq = orthodontic_sequence(dw);
    const auto seq_sort = orthodontic_sequence(dsort);
    const bool ijm = seq.i == seq_sort.i && seq.j == seq_sort.j && seq.M == seq_sort.M;
    out.push_back(check("sort-data-ijm", item, ijm, "i/j/M differ between w and w_sort"));
    const auto k_pred = predicted_k(seq_sort.K, data, sigma, false);
    out.push_back(check("sort-data-k", item, k_pred == seq.K,
                        "K(w)=" + k_string(seq.K) + " predicted " + k_string(k_pred)));

    const Polynomial factor = bilinear_product(diff, n, n);
    const Polynomial gd = script_G(dw);
    const Polynomial gd_sort = script_G(dsort);
    out.push_back(check("sort-orthodontia-factor", item, gd == factor * gd_sort, mismatch(gd, factor * gd_sort)));

    // Grothendieck factorization, with the quotient computed by exact division.
    const Polynomial g = double_grothendieck(w);
    const Polynomial g_sort = double_grothendieck(ws);
    const auto quotient = g.divide_exact(g_sort);
    out.push_back(check("sort-grothendieck-factor", item, quotient && *quotient == factor,
                        quotient ? "quotient " + quotient->to_string() : "division not exact"));

    // Forced crosses in every pipe dream.
    if (n <= kMaxPipeDreamSize) {
        bool ok = true;
        std::string detail;
        for (const auto& p : enumerate_pd(w)) {
            for (int j = 1; j <= data.h && ok; ++j)
                for (int i = 1; i <= dw.column(j).size() && ok; ++i)
                    if (!p.has_cross(i, j)) {
                        ok = false;
                        detail = "cell (" + std::to_string(i) + "," + std::to_string(j) + ") is not a cross";
                    }
            if (!ok) break;
        }
        out.push_back(check("forced-crosses", item, ok, detail));
    }
    return out;
}

struct SortedStepData {
    Permutation w_prime;
    OrthodonticSequence expected;
};

/// The orthodontic data predicted for w s_{i1}..s_{alpha+1} from that of w.
OrthodonticSequence predicted_step_sequence(const OrthodonticSequence& seq, const PrimaryColumnData& data) {
    OrthodonticSequence out;
    const auto beta = static_cast<std::size_t>(data.beta);
    out.i.assign(seq.i.begin() + static_cast<std::ptrdiff_t>(beta), seq.i.end());
    out.j.assign(seq.j.begin() + static_cast<std::ptrdiff_t>(beta), seq.j.end());
    out.M.assign(seq.M.begin() + static_cast<std::ptrdiff_t>(beta), seq.M.end());
    std::vector<int> s;
    for (int c = data.h - data.beta + 1; c <= data.h; ++c) s.push_back(c);
    out.K = seq.K;
    const auto& m_beta = seq.M[beta - 1];
    if (data.alpha > 0) {
        out.K[static_cast<std::size_t>(data.alpha - 1)] = minus(seq.K[static_cast<std::size_t>(data.alpha - 1)], s);
        out.K[static_cast<std::size_t>(data.alpha)] = sorted_union(s, m_beta);
    } else {
        out.K[0] = sorted_union(s, m_beta);
    }
    return out;
}

std::string sequence_string(const OrthodonticSequence& s) {
    std::string out = "K=" + k_string(s.K) + " i=(" + join(s.i) + ") j=(" + join(s.j) + ") M=(";
    for (std::size_t k = 0; k < s.M.size(); ++k) out += (k ? "," : "") + set_string(s.M[k]);
    return out + ")";
}

bool reaches_identity(const Permutation& start, OsEndpoint endpoint, std::string& detail) {
    std::set<Permutation> seen;
    Permutation w = start;
    while (!w.is_identity()) {
        if (!seen.insert(w).second) {
            detail = "cycle through " + w.to_string();
            return false;
        }
        w = os_covers(w, endpoint).front();
    }
    return true;
}

Polynomial del_bar_chain(Polynomial f, int top, int bottom) {
    for (int k = bottom; k <= top; ++k) f = isobaric(f, k);
    return f;
}

Checks thm_os2_checks(const Permutation& w) {
    Checks out;
    const std::string item = "w=" + w.to_string();
    {
        std::string detail;
        out.push_back(check("reaches-identity", item, reaches_identity(w, OsEndpoint::alpha_plus_one, detail), detail));
    }
    if (w.is_identity() || !is_sorted(w)) return out;

    const int n = w.size();
    const auto data = primary_column_data(w);
    const Diagram dw = rothe(w);
    const auto seq = orthodontic_sequence(dw);
    const auto beta = static_cast<std::size_t>(data.beta);
    std::vector<int> s;
    for (int c = data.h - data.beta + 1; c <= data.h; ++c) s.push_back(c);

    bool p1 = seq.i.size() >= beta, p2 = seq.j.size() >= beta;
    for (std::size_t k = 1; k <= beta && p1 && p2; ++k) {
        p1 = p1 && seq.i[k - 1] == data.i1 - static_cast<int>(k) + 1;
        p2 = p2 && seq.j[k - 1] == data.h - data.beta + static_cast<int>(k);
    }
    out.push_back(check("part1-i", item, p1, sequence_string(seq)));
    out.push_back(check("part2-j", item, p2, sequence_string(seq)));
    bool p3 = true;
    if (data.alpha > 0) {
        const auto& ka = seq.K[static_cast<std::size_t>(data.alpha - 1)];
        p3 = std::includes(ka.begin(), ka.end(), s.begin(), s.end());
    }
    out.push_back(check("part3-k-alpha", item, p3, sequence_string(seq)));
    bool p4 = true;
    for (int k = data.alpha + 1; k <= data.i1; ++k) p4 = p4 && seq.K[static_cast<std::size_t>(k - 1)].empty();
    out.push_back(check("part4-k-empty", item, p4, sequence_string(seq)));
    bool p5 = seq.M.size() >= beta;
    for (std::size_t k = 1; k < beta && p5; ++k) p5 = seq.M[k - 1].empty();
    out.push_back(check("part5-m-empty", item, p5, sequence_string(seq)));
    if (!(p1 && p2 && p5)) return out;

    const Permutation wp = sorted_step(w, OsEndpoint::alpha_plus_one);
    const auto seq_p = orthodontic_sequence(rothe(wp));
    const auto predicted = predicted_step_sequence(seq, data);
    out.push_back(check("part6-sequence", item, seq_p == predicted,
                        "w'=" + wp.to_string() + " has " + sequence_string(seq_p) + ", predicted " +
                            sequence_string(predicted)));

    // G_D(w) = pibar_{i1,h+1-beta} .. pibar_{alpha+1,h}(prod^{-1} G_D(w')).
    Polynomial denom = Polynomial::constant(n, n, 1);
    for (int c : s) denom *= bilinear_factor(data.alpha + 1, c, n, n);
    const auto inner = script_G(rothe(wp)).divide_exact(denom);
    bool p6 = false;
    std::string detail = "division not exact";
    if (inner) {
        Polynomial f = *inner;
        for (int k = data.beta; k >= 1; --k) f = pibar_double(f, data.i1 - k + 1, data.h - data.beta + k);
        const Polynomial gw = script_G(dw);
        p6 = f == gw;
        detail = mismatch(f, gw);
    }
    out.push_back(check("part6-formula", item, p6, detail));

    const Polynomial stepped = del_bar_chain(double_grothendieck(wp), data.i1, data.alpha + 1);
    out.push_back(check("grothendieck-step", item, stepped == double_grothendieck(w),
                        mismatch(stepped, double_grothendieck(w))));
    return out;
}

// ---------------------------------------------------------------------------
// Operator suites

using UnaryOp = std::function<Polynomial(const Polynomial&, int)>;

struct NamedOp {
    const char* name;
    UnaryOp op;
};

const std::vector<NamedOp>& named_ops() {
    static const std::vector<NamedOp> ops = {
        {"del", divided_difference}, {"del-bar", isobaric}, {"pi", demazure}, {"pi-bar", demazure_lascoux}};
    return ops;
}

Checks operator_checks(int nmax) {
    Checks out;
    Rng rng(0x5eed0001);
    const int count = 500;
    const int nlo = std::min(2, nmax);
    for (int t = 0; t < count; ++t) {
        const int n = nlo + t % (nmax - nlo + 1);
        const int m = rng.uniform(0, 2);
        const Polynomial f = random_polynomial(rng, n, m, 4, 4, 6);
        const std::string item = "#" + std::to_string(t) + " n=" + std::to_string(n);
        for (const auto& [name, op] : named_ops()) {
            bool braid = true, commute = true, square = true;
            std::string detail;
            for (int i = 1; i + 2 <= n; ++i) {
                const Polynomial lhs = op(op(op(f, i), i + 1), i);
                const Polynomial rhs = op(op(op(f, i + 1), i), i + 1);
                if (lhs != rhs) {
                    braid = false;
                    detail = "braid at i=" + std::to_string(i) + ": " + mismatch(lhs, rhs);
                }
            }
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j < n; ++j)
                    if (op(op(f, i), j) != op(op(f, j), i)) {
                        commute = false;
                        detail = "commutation at " + std::to_string(i) + "," + std::to_string(j);
                    }
            for (int i = 1; i < n; ++i) {
                const Polynomial once = op(f, i);
                const Polynomial twice = op(once, i);
                const bool ok = std::string(name) == "del" ? twice.is_zero() : twice == once;
                if (!ok) {
                    square = false;
                    detail = "square at i=" + std::to_string(i);
                }
            }
            const std::string base = std::string(name);
            if (n >= 3) out.push_back(check(base + "-braid", item, braid, detail));
            if (n >= 4) out.push_back(check(base + "-commute", item, commute, detail));
            out.push_back(check(base + (base == "del" ? "-nilpotent" : "-idempotent"), item, square, detail));
        }
        // (x_i - x_{i+1}) del_i f = f - s_i f
        bool quotient_ok = true;
        for (int i = 1; i < n; ++i) {
            const Polynomial lhs = (Polynomial::x(n, m, i) - Polynomial::x(n, m, i + 1)) * divided_difference(f, i);
            if (lhs != f - f.swap_x(i)) quotient_ok = false;
        }
        out.push_back(check("del-quotient", item, quotient_ok, "(x_i - x_{i+1}) del_i f != f - s_i f"));
    }
    return out;
}

Polynomial x_minus_one_product(int i, int power, int n) {
    Polynomial p = Polynomial::constant(n, 0, 1);
    for (int a = 1; a <= i; ++a)
        for (int e = 0; e < power; ++e) p *= Polynomial::x(n, 0, a) - Polynomial::constant(n, 0, 1);
    return p;
}

Polynomial delta_bar(Polynomial g, int i, int a) {
    for (int k = 0; k <= a; ++k) g = isobaric(g, i + k);
    return g;
}

/// flip_m(script_S(D) at y = -1) rebuilt as pibar_{n-i_1}..pibar_{n-i_l}(phi_{k_1}..phi_{k_m}(1)).
Polynomial operator_word_form(const Diagram& d) {
    const int n = d.nrows();
    const auto seq = orthodontic_sequence(d);
    std::vector<int> ks;
    int stripped = 0;
    for (int a = 1; a <= n; ++a)
        for (std::size_t c = 0; c < seq.K[static_cast<std::size_t>(a - 1)].size(); ++c, ++stripped) ks.push_back(n - a);
    for (std::size_t k = 0; k < seq.M.size(); ++k)
        for (std::size_t c = 0; c < seq.M[k].size(); ++c, ++stripped) ks.push_back(n - seq.i[k]);
    for (; stripped < d.ncols(); ++stripped) ks.push_back(n);
    std::sort(ks.begin(), ks.end(), std::greater<>());
    Polynomial f = Polynomial::constant(n, 0, 1);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) f = phi(f, *it);
    for (auto it = seq.i.rbegin(); it != seq.i.rend(); ++it) f = demazure_lascoux(f, n - *it);
    return f;
}

Checks lemma4_checks(int nmax) {
    Checks out;
    Rng rng(0x5eed0004);
    const int ncap = std::max(2, nmax);

    // omega at y = -1
    for (int n = 1; n <= ncap; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                std::vector<int> cols;
                for (int c = 1; c <= n; ++c)
                    if (mask >> (c - 1) & 1U) cols.push_back(c);
                const Polynomial lhs = omega(i, cols, false, n, n).substitute_y(-1);
                const Polynomial rhs = x_minus_one_product(i, static_cast<int>(cols.size()), n);
                out.push_back(check("omega-specialization", "n=" + std::to_string(n) + " i=" + std::to_string(i) + " M=" +
                                                      set_string(cols),
                                    lhs == rhs, mismatch(lhs, rhs)));
            }

    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform(2, ncap);
        const int mcap = rng.uniform(1, 3);
        const Polynomial f = random_polynomial(rng, n, 0, 3 * n, mcap, 5);
        const std::string item = "#" + std::to_string(t) + " n=" + std::to_string(n) + " m=" + std::to_string(mcap);

        const int i = rng.uniform(0, n);
        const Polynomial lhs = (x_minus_one_product(i, 1, n) * f).flip(mcap + 1);
        const Polynomial rhs = phi(f.flip(mcap), n - i);
        out.push_back(check("omega-intertwining", item + " i=" + std::to_string(i), lhs == rhs, mismatch(lhs, rhs)));

        {
            const int k = rng.uniform(1, n - 1);
            const Polynomial xm1 = Polynomial::x(n, 0, k) - Polynomial::constant(n, 0, 1);
            const Polynomial l2 = divided_difference(xm1 * f, k).flip(mcap);
            const Polynomial r2 = demazure_lascoux(f.flip(mcap), n - k);
            out.push_back(check("pi-intertwining", item + " i=" + std::to_string(k), l2 == r2, mismatch(l2, r2)));

            // f free of y: pi_{i,j}(f) at y_j = -1 equals del_i((x_i - 1) f).
            const int m = rng.uniform(1, 3);
            const int j = rng.uniform(1, m);
            const Polynomial fx = f.with_ambient(n, m);
            const Polynomial l3 = pi_double(fx, k, j).substitute_y(-1);
            const Polynomial r3 = divided_difference(xm1 * f, k);
            out.push_back(check("pi-specialization", item + " i=" + std::to_string(k) + " j=" + std::to_string(j), l3 == r3,
                                mismatch(l3, r3)));

            // With y present, specializing every y to -1 commutes through pi_{i,j}.
            const Polynomial fy = random_polynomial(rng, n, m, 4, 3, 5);
            const Polynomial l4 = pi_double(fy, k, j).substitute_y(-1);
            const Polynomial r4 = divided_difference(xm1 * fy.substitute_y(-1), k);
            out.push_back(check("pi-specialization-with-y", item + " i=" + std::to_string(k) + " j=" + std::to_string(j),
                                l4 == r4, mismatch(l4, r4)));
        }
    }

    // pibar chains collapse to del-bar chains on suitably symmetric g.
    for (int k = 0; k <= 3; ++k)
        for (int t = 0; t < 15; ++t) {
            const int i = rng.uniform(1, 2);
            const int n = i + k + 1;
            const int m = 3;
            std::vector<int> sym;
            for (int v = i + 1; v <= i + k + 1; ++v) sym.push_back(v);
            const Polynomial g = random_symmetric_in(rng, sym, n, m);
            std::vector<int> js;
            for (int a = 0; a <= k; ++a) js.push_back(rng.uniform(1, m));
            Polynomial lhs = g;
            for (int a = 0; a <= k; ++a) lhs = pibar_double(lhs, i + a, js[static_cast<std::size_t>(a)]);
            Polynomial prod = g;
            for (int a = 0; a <= k; ++a) prod *= bilinear_factor(i, js[static_cast<std::size_t>(a)], n, m);
            const Polynomial rhs = delta_bar(prod, i, k);
            out.push_back(check("pi-to-del", "k=" + std::to_string(k) + " #" + std::to_string(t) +
                                                 " j=(" + join(js) + ")",
                                lhs == rhs, mismatch(lhs, rhs)));
        }

    // One pibar step moved past a del-bar chain.
    for (int l = 1; l <= 3; ++l)
        for (int t = 0; t < 15; ++t) {
            const int i = rng.uniform(1, 2);
            const int n = i + l + 1;
            const int m = 2;
            const int j = rng.uniform(1, m);
            const Polynomial g = random_symmetric_in(rng, {i + l, i + l + 1}, n, m);
            const Polynomial lhs = pibar_double(delta_bar(g, i, l - 1), i + l, j);
            const Polynomial inner = l >= 2 ? delta_bar(g, i, l - 2) : g;
            const Polynomial rhs = isobaric(pibar_double(inner, i + l - 1, j), i + l);
            out.push_back(check("operator-trick", "l=" + std::to_string(l) + " #" + std::to_string(t), lhs == rhs,
                                mismatch(lhs, rhs)));

            std::vector<int> sym;
            for (int v = i + 1; v <= i + l + 1; ++v) sym.push_back(v);
            const Polynomial h = random_symmetric_in(rng, sym, n, m);
            const Polynomial l2 = pibar_double(delta_bar(h, i, l - 1), i + l, j);
            const Polynomial r2 = delta_bar(bilinear_factor(i, j, n, m) * h, i, l);
            out.push_back(check("operator-trick-collapse", "l=" + std::to_string(l) + " #" + std::to_string(t),
                                l2 == r2, mismatch(l2, r2)));
        }

    // pibar_i on Lascoux polynomials: a descent at i is swapped, an ascent is fixed.
    for (int n = 2; n <= std::min(ncap, 4); ++n)
        for (const auto& alpha : all_compositions(n, 3))
            for (int i = 1; i < n; ++i) {
                const Polynomial lhs = demazure_lascoux(lascoux(alpha), i);
                const int a = alpha[static_cast<std::size_t>(i - 1)], b = alpha[static_cast<std::size_t>(i)];
                const Polynomial rhs = a > b ? lascoux(alpha.swapped(i)) : lascoux(alpha);
                out.push_back(check(a == b ? "pibar-lascoux-equal" : "pibar-lascoux",
                                    "alpha=" + alpha.to_string() + " i=" + std::to_string(i), lhs == rhs,
                                    mismatch(lhs, rhs)));
            }

    // Lascoux polynomials with a constant top block factor.
    for (int n = 1; n <= std::min(ncap, 4); ++n)
        for (const auto& alpha : all_compositions(n, 3)) {
            const int l = alpha.max_part();
            int k = 0;
            while (k < n && alpha[static_cast<std::size_t>(k)] == l) ++k;
            for (int i = 1; i <= k; ++i) {
                Polynomial rhs = Polynomial::constant(n, 0, 1);
                if (i < n) {
                    std::vector<int> rest(alpha.parts().begin() + i, alpha.parts().end());
                    rhs = lascoux(Composition(rest)).shift_x(i);
                }
                std::vector<int> block(static_cast<std::size_t>(n), 0);
                for (int a = 0; a < i; ++a) block[static_cast<std::size_t>(a)] = l;
                rhs *= Polynomial::x_power(block);
                const Polynomial lhs = lascoux(alpha);
                out.push_back(check("top-block", "alpha=" + alpha.to_string() + " i=" + std::to_string(i), lhs == rhs,
                                    mismatch(lhs, rhs)));
            }
        }

    // Products of phi on 1.
    for (int n = 1; n <= std::min(ncap, 3); ++n)
        for (int len = 1; len <= 3; ++len) {
            std::vector<int> ks(static_cast<std::size_t>(len), n);
            std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int hi) {
                if (pos == ks.size()) {
                    Polynomial f = Polynomial::constant(n, 0, 1);
                    for (int k : ks) f = phi(f, k);
                    const auto verdict = graded_positive(lascoux_expand(f));
                    out.push_back(check("phi-products", "n=" + std::to_string(n) + " k=(" + join(ks) + ")",
                                        verdict.positive, "sign violation"));
                    return;
                }
                for (int k = hi; k >= 0; --k) {
                    ks[pos] = k;
                    rec(pos + 1, k);
                }
            };
            rec(0, n);
        }

    // Operator-word form for inclusion-ordered diagrams in [3] x [3].
    for (const auto& d : all_diagrams(std::min(ncap, 3), std::min(ncap, 3))) {
        if (!columns_ordered_by_inclusion(d)) continue;
        const Polynomial lhs = theorem12_polynomial(d);
        const Polynomial rhs = operator_word_form(d);
        out.push_back(check("operator-word", d.to_string(), lhs == rhs, mismatch(lhs, rhs)));
    }

    // Lascoux times G_21.
    for (int n = 1; n <= std::min(ncap, 3); ++n) {
        const Polynomial g21 = stable_grothendieck(Permutation({2, 1}), n);
        for (const auto& alpha : all_compositions(n, 2)) {
            const auto verdict = graded_positive(lascoux_expand(lascoux(alpha) * g21));
            out.push_back(check("lascoux-times-g21", "alpha=" + alpha.to_string(), verdict.positive, "sign violation"));
        }
    }
    return out;
}

Checks triangularity_checks(int nmax) {
    Checks out;
    const int ncap = std::clamp(nmax, 1, 4);
    for (int n = 1; n <= ncap; ++n)
        for (const auto& beta : all_compositions(n, 4)) {
            const Polynomial l = lascoux(beta);
            const Monomial target = [&] {
                Monomial mono;
                for (int i = 1; i <= n; ++i) mono.set_x(i, beta[static_cast<std::size_t>(i - 1)]);
                return mono;
            }();
            const std::string item = "beta=" + beta.to_string();
            out.push_back(check("leading-coefficient", item, l.coefficient(target) == 1, "coefficient of x^beta != 1"));
            bool minimal = l.min_degree() == beta.weight();
            std::string detail = "min degree " + std::to_string(l.min_degree());
            const Polynomial lowest = l.lowest_degree_part();
            if (minimal)
                for (const auto& t : lowest.terms()) {
                    if (t.monomial == target) continue;
                    std::vector<int> e(static_cast<std::size_t>(n));
                    for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = t.monomial.x(i);
                    if (!(std::vector<int>(beta.parts().begin(), beta.parts().end()) < e)) {
                        minimal = false;
                        detail = "monomial " + join(e) + " is not lex-greater";
                    }
                }
            out.push_back(check("lex-minimal", item, minimal, detail));
            out.push_back(check("variable-degree", item, l.max_x_degree() <= beta.max_part(),
                                "max variable degree " + std::to_string(l.max_x_degree())));
        }

    Rng rng(0x5eed0009);
    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform(1, ncap);
        const Polynomial f = random_polynomial(rng, n, 0, 3 * n, 3, 8);
        bool ok = false;
        std::string detail;
        try {
            const auto e = lascoux_expand(f);
            ok = e.reconstruct() == f;
            detail = "reconstruction differs";
        } catch (const std::exception& ex) {
            detail = ex.what();
        }
        out.push_back(check("round-trip", "#" + std::to_string(t) + " f=" + f.to_string(), ok, detail));
    }
    return out;
}

template <class Fn>
Checks over_permutations(int n, int workers, Fn fn) {
    return flatten(parallel_map(all_permutations(n), workers, fn));
}

}  // namespace

std::size_t VerifyReport::failed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> VerifyReport::group_counts() const {
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> out;
    for (const auto& c : checks) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& g) { return g.first == c.group; });
        if (it == out.end()) {
            out.push_back({c.group, {0, 0}});
            it = std::prev(out.end());
        }
        ++it->second.first;
        if (!c.passed) ++it->second.second;
    }
    return out;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"thm11",    "cor-double-schub", "prop-os1",     "thm-os2",
                                                   "operators", "lemma4",          "triangularity"};
    return names;
}

VerifyReport run_verify(std::string_view suite, int nmax, int workers) {
    if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
    VerifyReport report{std::string(suite), nmax, {}};
    if (suite == "thm11") {
        if (nmax > 7) throw std::invalid_argument("thm11 supports nmax <= 7");
        report.checks = over_permutations(nmax, workers, thm11_checks);
    } else if (suite == "cor-double-schub") {
        report.checks = over_permutations(nmax, workers, cor_double_schub_checks);
    } else if (suite == "prop-os1") {
        report.checks = over_permutations(nmax, workers, prop_os1_checks);
    } else if (suite == "thm-os2") {
        report.checks = over_permutations(nmax, workers, thm_os2_checks);
    } else if (suite == "operators") {
        report.checks = operator_checks(std::max(nmax, 2));
    } else if (suite == "lemma4") {
        report.checks = lemma4_checks(nmax);
    } else if (suite == "triangularity") {
        report.checks = triangularity_checks(nmax);
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Variant report

namespace {

void record(VariantOutcome& v, bool ok, const std::string& item) {
    ++v.checked;
    if (!ok) {
        ++v.failed;
        if (!v.first_counterexample) v.first_counterexample = item;
    }
}

}  // namespace

std::vector<AmbiguityQuestion> ambiguity_findings(int nmax) {
    std::vector<AmbiguityQuestion> out;

    AmbiguityQuestion pd_q{"Sign of the pipe-dream weight sum",
                           "weight_sum(w) = double_grothendieck(w) for all w in S_2..S_" + std::to_string(nmax),
                           {{"signed by (-1)^{|P|-l(w)}", 0, 0, {}}, {"unsigned", 0, 0, {}}}};
    for (int n = 2; n <= nmax; ++n)
        for (const auto& w : all_permutations(n)) {
            const Polynomial g = double_grothendieck(w);
            record(pd_q.variants[0], weight_sum(w, PipeDreamSign::signed_by_excess) == g, "w=" + w.to_string());
            record(pd_q.variants[1], weight_sum(w, PipeDreamSign::unsigned_literal) == g, "w=" + w.to_string());
        }
    out.push_back(std::move(pd_q));

    AmbiguityQuestion pibar_q{"pibar_i on a Lascoux polynomial with alpha_i != alpha_{i+1}",
                              "pibar_i(L_alpha) over alpha with entries <= 3, n <= 4",
                              {{"L_{alpha s_i} at a descent, L_alpha at an ascent", 0, 0, {}},
                               {"L_alpha at a descent, L_{alpha s_i} at an ascent", 0, 0, {}}}};
    for (int n = 2; n <= std::min(nmax, 4); ++n)
        for (const auto& alpha : all_compositions(n, 3))
            for (int i = 1; i < n; ++i) {
                const int a = alpha[static_cast<std::size_t>(i - 1)], b = alpha[static_cast<std::size_t>(i)];
                if (a == b) continue;
                const Polynomial lhs = demazure_lascoux(lascoux(alpha), i);
                const std::string item = "alpha=" + alpha.to_string() + " i=" + std::to_string(i);
                record(pibar_q.variants[0], lhs == lascoux(a > b ? alpha.swapped(i) : alpha), item);
                record(pibar_q.variants[1], lhs == lascoux(a < b ? alpha.swapped(i) : alpha), item);
            }
    out.push_back(std::move(pibar_q));

    AmbiguityQuestion omega_q{"Inner omegas of the orthodontia formula",
                              "script_G(rothe(w)) = double_grothendieck(w) for all w in S_2..S_" + std::to_string(nmax),
                              {{"barred inner omegas", 0, 0, {}}, {"unbarred inner omegas", 0, 0, {}}}};
    for (int n = 2; n <= nmax; ++n)
        for (const auto& w : all_permutations(n)) {
            const Polynomial g = double_grothendieck(w);
            const Diagram d = rothe(w);
            record(omega_q.variants[0], script_G(d, InnerOmega::barred) == g, "w=" + w.to_string());
            record(omega_q.variants[1], script_G(d, InnerOmega::unbarred) == g, "w=" + w.to_string());
        }
    out.push_back(std::move(omega_q));

    AmbiguityQuestion endpoint_q{
        "Last factor of the sorted-step relation",
        "orthodontic data of w' = w s_{i1}..s_end matches the predicted shift (K, i, j, M) for sorted nonidentity w",
        {{"end = alpha+1", 0, 0, {}}, {"end = alpha (s_0 dropped)", 0, 0, {}}}};
    AmbiguityQuestion step_q{"Grothendieck step through the sorted-step relation",
                             "double_grothendieck(w) = dbar_{i1}..dbar_end(double_grothendieck(w'))",
                             {{"end = alpha+1", 0, 0, {}}, {"end = alpha (s_0 dropped)", 0, 0, {}}}};
    AmbiguityQuestion order_q{"Termination of the sort order",
                              "iterating the predecessor map reaches the identity",
                              {{"end = alpha+1", 0, 0, {}}, {"end = alpha (s_0 dropped)", 0, 0, {}}}};
    for (int n = 2; n <= nmax; ++n)
        for (const auto& w : all_permutations(n)) {
            const std::string item = "w=" + w.to_string();
            const OsEndpoint ends[2] = {OsEndpoint::alpha_plus_one, OsEndpoint::alpha};
            for (int v = 0; v < 2; ++v) {
                std::string detail;
                record(order_q.variants[static_cast<std::size_t>(v)], reaches_identity(w, ends[v], detail), item);
            }
            if (w.is_identity() || !is_sorted(w)) continue;
            const auto data = primary_column_data(w);
            const auto seq = orthodontic_sequence(rothe(w));
            const auto predicted = predicted_step_sequence(seq, data);
            for (int v = 0; v < 2; ++v) {
                const Permutation wp = sorted_step(w, ends[v]);
                record(endpoint_q.variants[static_cast<std::size_t>(v)], orthodontic_sequence(rothe(wp)) == predicted,
                       item);
                const int end = v == 0 ? data.alpha + 1 : std::max(data.alpha, 1);
                record(step_q.variants[static_cast<std::size_t>(v)],
                       del_bar_chain(double_grothendieck(wp), data.i1, end) == double_grothendieck(w), item);
            }
        }
    out.push_back(std::move(endpoint_q));
    out.push_back(std::move(step_q));
    out.push_back(std::move(order_q));

    AmbiguityQuestion sd_q{"Lowest degree part of script_G",
                           "script_S(D) equals the lowest degree part of script_G(D), for D = rothe(w)",
                           {{"without negating y", 0, 0, {}}, {"after negating y", 0, 0, {}}}};
    AmbiguityQuestion k_q{"K_alpha in the sorting relation",
                          "K(w) obtained from K(w_sort), over unsorted w",
                          {{"remove every column h-beta+1..h from K'_alpha", 0, 0, {}},
                           {"remove only the columns that grow", 0, 0, {}}}};
    for (int n = 2; n <= nmax; ++n)
        for (const auto& w : all_permutations(n)) {
            const std::string item = "w=" + w.to_string();
            const Diagram d = rothe(w);
            const Polynomial s = script_S(d);
            const Polynomial low = script_G(d).lowest_degree_part();
            record(sd_q.variants[0], s == low, item);
            record(sd_q.variants[1], s == low.negate_y(), item);
            if (is_sorted(w)) continue;
            const auto data = primary_column_data(w);
            const Permutation sigma = sigma_of(w);
            const auto k = orthodontic_sequence(d).K;
            const auto k_sort = orthodontic_sequence(rothe(sort_of(w))).K;
            record(k_q.variants[0], predicted_k(k_sort, data, sigma, true) == k, item);
            record(k_q.variants[1], predicted_k(k_sort, data, sigma, false) == k, item);
        }
    out.push_back(std::move(sd_q));
    out.push_back(std::move(k_q));

    AmbiguityQuestion spec_q{"Specialization inside pi_{i,j}",
                             "pi_{i,j}(f) at y = -1 against del_i((x_i - 1) f at y = c), f involving y",
                             {{"c = -1", 0, 0, {}}, {"c = +1", 0, 0, {}}}};
    AmbiguityQuestion base_q{"Base case of the pibar collapse",
                             "pibar_{i,j}(g) = dbar_i(F g) for random g",
                             {{"F = x_i + y_j - x_i y_j", 0, 0, {}}, {"F = x_i - y_j", 0, 0, {}}}};
    Rng rng(0x5eed0011);
    for (int t = 0; t < 50; ++t) {
        const int n = rng.uniform(2, 4), m = rng.uniform(1, 3);
        const int i = rng.uniform(1, n - 1), j = rng.uniform(1, m);
        const Polynomial f = random_polynomial(rng, n, m, 4, 3, 5);
        const std::string item = "f=" + f.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        const Polynomial xm1 = Polynomial::x(n, 0, i) - Polynomial::constant(n, 0, 1);
        const Polynomial lhs = pi_double(f, i, j).substitute_y(-1);
        record(spec_q.variants[0], lhs == divided_difference(xm1 * f.substitute_y(-1), i), item);
        record(spec_q.variants[1], lhs == divided_difference(xm1 * f.substitute_y(1), i), item);
        const Polynomial pb = pibar_double(f, i, j);
        record(base_q.variants[0], pb == isobaric(bilinear_factor(i, j, n, m) * f, i), item);
        record(base_q.variants[1], pb == isobaric((Polynomial::x(n, m, i) - Polynomial::y(n, m, j)) * f, i), item);
    }
    out.push_back(std::move(spec_q));
    out.push_back(std::move(base_q));
    return out;
}

std::string render_ambiguity_report(const std::vector<AmbiguityQuestion>& findings, int nmax) {
    std::ostringstream os;
    os << "Notational variants, checked over S_2..S_" << nmax << "\n";
    os << std::string(60, '=') << "\n";
    for (const auto& q : findings) {
        os << "\n" << q.title << "\n  criterion: " << q.criterion << "\n";
        for (const auto& v : q.variants) {
            os << "  - " << v.name << ": " << (v.failed == 0 ? "holds" : "fails") << " (" << v.checked - v.failed << " of "
               << v.checked << " pass)";
            if (v.first_counterexample) os << ", first counterexample " << *v.first_counterexample;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace orthodontia

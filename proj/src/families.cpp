#include "orthodontia/families.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "orthodontia/json_io.hpp"
#include "orthodontia/operators.hpp"

namespace orthodontia {

namespace {

template <class Key>
class PolyCache {
public:
    std::optional<Polynomial> find(const Key& key) const {
        std::lock_guard lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const Key& key, const Polynomial& p) {
        std::lock_guard lock(mutex_);
        table_.emplace(key, p);
    }
    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return table_.size();
    }
    template <class Fn>
    void for_each(Fn&& fn) const {
        std::lock_guard lock(mutex_);
        for (const auto& [k, v] : table_) fn(k, v);
    }

private:
    mutable std::mutex mutex_;
    std::map<Key, Polynomial> table_;
};

PolyCache<Permutation>& double_grothendieck_cache() {
    static PolyCache<Permutation> cache;
    return cache;
}
PolyCache<Permutation>& double_schubert_cache() {
    static PolyCache<Permutation> cache;
    return cache;
}
PolyCache<Permutation>& grothendieck_cache() {
    static PolyCache<Permutation> cache;
    return cache;
}
PolyCache<Permutation>& schubert_cache() {
    static PolyCache<Permutation> cache;
    return cache;
}
PolyCache<Composition>& lascoux_cache() {
    static PolyCache<Composition> cache;
    return cache;
}

int pick_ascent(const Permutation& v, AscentChoice choice) {
    const int n = v.size();
    if (choice == AscentChoice::first) {
        for (int i = 1; i < n; ++i)
            if (v.has_ascent(i)) return i;
    } else {
        for (int i = n - 1; i >= 1; --i)
            if (v.has_ascent(i)) return i;
    }
    return 0;
}

using BaseFn = std::function<Polynomial(int)>;
using StepFn = std::function<Polynomial(const Polynomial&, int)>;

/// Walks up weak order from w (through ascents) to w_0 or a cached ancestor,
/// then applies `step` on the way back down.
Polynomial descend(const Permutation& w, PolyCache<Permutation>* cache, const BaseFn& base, const StepFn& step,
                   AscentChoice choice = AscentChoice::first) {
    std::vector<Permutation> chain{w};
    std::vector<int> ascents;
    std::optional<Polynomial> top;
    while (true) {
        const Permutation& v = chain.back();
        if (cache) {
            top = cache->find(v);
            if (top) break;
        }
        const int i = pick_ascent(v, choice);
        if (i == 0) {
            top = base(v.size());
            if (cache) cache->insert(v, *top);
            break;
        }
        ascents.push_back(i);
        chain.push_back(v.right_multiply_s(i));
    }
    Polynomial current = std::move(*top);
    for (std::size_t k = ascents.size(); k-- > 0;) {
        current = step(current, ascents[k]);
        if (cache) cache->insert(chain[k], current);
    }
    return current;
}

Polynomial double_grothendieck_base(int n) {
    Polynomial p = Polynomial::constant(n, n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) p *= bilinear_factor(i, j, n, n);
    return p;
}

Polynomial double_schubert_base(int n) {
    Polynomial p = Polynomial::constant(n, n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) p *= Polynomial::x(n, n, i) - Polynomial::y(n, n, j);
    return p;
}

Polynomial staircase(int n) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) exps[static_cast<std::size_t>(i - 1)] = n - i;
    return Polynomial::x_power(exps);
}

}  // namespace

Polynomial double_grothendieck(const Permutation& w) {
    return descend(w, &double_grothendieck_cache(), double_grothendieck_base,
                   [](const Polynomial& f, int i) { return isobaric(f, i); });
}

Polynomial double_grothendieck_along(const Permutation& w, AscentChoice choice) {
    return descend(w, nullptr, double_grothendieck_base, [](const Polynomial& f, int i) { return isobaric(f, i); },
                   choice);
}

Polynomial double_schubert(const Permutation& w) {
    if (auto hit = double_schubert_cache().find(w)) return *hit;
    Polynomial result = double_grothendieck(w).negate_y().lowest_degree_part();
    double_schubert_cache().insert(w, result);
    return result;
}

Polynomial double_schubert_by_recursion(const Permutation& w) {
    return descend(w, nullptr, double_schubert_base,
                   [](const Polynomial& f, int i) { return divided_difference(f, i); });
}

Polynomial grothendieck(const Permutation& w) {
    return descend(w, &grothendieck_cache(), staircase, [](const Polynomial& f, int i) { return isobaric(f, i); });
}

Polynomial schubert(const Permutation& w) {
    return descend(w, &schubert_cache(), staircase,
                   [](const Polynomial& f, int i) { return divided_difference(f, i); });
}

Polynomial lascoux(const Composition& alpha) {
    if (auto hit = lascoux_cache().find(alpha)) return *hit;
    Polynomial result(alpha.size(), 0);
    if (alpha.is_partition()) {
        result = Polynomial::x_power(std::vector<int>(alpha.parts().begin(), alpha.parts().end()));
    } else {
        int i = 1;
        while (alpha[i - 1] >= alpha[i]) ++i;
        result = demazure_lascoux(lascoux(alpha.swapped(i)), i);
    }
    lascoux_cache().insert(alpha, result);
    return result;
}

Polynomial key(const Composition& alpha) { return lascoux(alpha).lowest_degree_part(); }

namespace {

int y_shift(const OrthodonticSequence& seq) {
    int lo = 1;
    for (int j : seq.j) lo = std::min(lo, j);
    return 1 - lo;
}

std::vector<int> shifted(const std::vector<int>& cols, int s) {
    std::vector<int> out(cols);
    for (int& c : out) c += s;
    return out;
}

Polynomial evaluate_orthodontia(const OrthodonticSequence& seq, int n, int m, bool barred_ops, bool barred_inner,
                                bool barred_outer) {
    const int s = y_shift(seq);
    const int my = m + s;
    Polynomial result = Polynomial::constant(n, my, 1);
    for (std::size_t k = seq.steps(); k-- > 0;) {
        const int row = seq.i[k];
        result *= omega(row, shifted(seq.M[k], s), barred_inner, n, my);
        const int j = seq.j[k] + s;
        result = barred_ops ? pibar_double(result, row, j) : pi_double(result, row, j);
    }
    for (int a = 1; a <= n; ++a) {
        const auto& cols = seq.K[static_cast<std::size_t>(a - 1)];
        if (!cols.empty()) result *= omega(a, shifted(cols, s), barred_outer, n, my);
    }
    return result;
}

}  // namespace

Polynomial script_G(const OrthodonticSequence& seq, int n, int m, InnerOmega inner) {
    return evaluate_orthodontia(seq, n, m, true, inner == InnerOmega::barred, true);
}

Polynomial script_S(const OrthodonticSequence& seq, int n, int m) {
    return evaluate_orthodontia(seq, n, m, false, false, false);
}

Polynomial script_G(const Diagram& d, InnerOmega inner) {
    return script_G(orthodontic_sequence(d), d.nrows(), d.ncols(), inner);
}

Polynomial script_S(const Diagram& d) { return script_S(orthodontic_sequence(d), d.nrows(), d.ncols()); }

Polynomial stable_grothendieck(const Permutation& w, int nvars) {
    if (nvars < 1) throw std::invalid_argument("stable Grothendieck needs at least one variable");
    const int cap = nvars + w.length() + 2;
    std::optional<Polynomial> previous;
    for (int shift = 0; shift <= cap; ++shift) {
        const Permutation v = Permutation::shifted(w, shift);
        Polynomial g = grothendieck(v);
        for (int i = nvars + 1; i <= g.n(); ++i) g = g.substitute_x(i, 0);
        g = g.with_ambient(nvars, 0);
        if (previous && *previous == g) return g;
        previous = std::move(g);
    }
    throw std::runtime_error("stable Grothendieck of " + w.to_string() + " did not stabilize by shift " +
                             std::to_string(cap));
}

void load_lascoux_cache(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return;
    const auto doc = nlohmann::json::parse(in);
    for (const auto& entry : doc.at("lascoux")) {
        const Composition alpha(entry.at("alpha").get<std::vector<int>>());
        lascoux_cache().insert(alpha, polynomial_from_json(entry.at("poly")));
    }
}

void save_lascoux_cache(const std::filesystem::path& file) {
    nlohmann::json entries = nlohmann::json::array();
    lascoux_cache().for_each([&](const Composition& alpha, const Polynomial& p) {
        entries.push_back({{"alpha", std::vector<int>(alpha.parts().begin(), alpha.parts().end())}, {"poly", to_json(p)}});
    });
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write cache file " + file.string());
    out << nlohmann::json{{"lascoux", entries}}.dump() << '\n';
}

std::size_t lascoux_cache_size() { return lascoux_cache().size(); }

}  // namespace orthodontia

#include "orthodontia/lascoux_basis.hpp"

#include <sstream>
#include <stdexcept>

#include "orthodontia/families.hpp"
#include "orthodontia/operators.hpp"
#include "orthodontia/parallel.hpp"

namespace orthodontia {

namespace {

Composition exponent_of(const Monomial& mono, int n) {
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) parts[static_cast<std::size_t>(i - 1)] = mono.x(i);
    return Composition(std::move(parts));
}

}  // namespace

Polynomial LascouxExpansion::reconstruct() const {
    TermAccumulator acc;
    for (const auto& [alpha, c] : coeffs) acc.add(lascoux(alpha), c);
    return std::move(acc).finish(n, 0);
}

LascouxExpansion lascoux_expand(const Polynomial& f) {
    if (f.m() != 0) throw std::invalid_argument("lascoux_expand: polynomial must not involve y");
    LascouxExpansion e;
    e.n = f.n();
    if (f.is_zero()) return e;
    e.baseline_degree = f.min_degree();

    const int dmax = f.max_x_degree();
    std::size_t cap = 1;
    for (int i = 0; i < f.n(); ++i) cap *= static_cast<std::size_t>(dmax + 1);

    Polynomial remainder = f;
    std::size_t iterations = 0;
    while (!remainder.is_zero()) {
        if (++iterations > cap) {
            std::ostringstream msg;
            msg << "lascoux_expand: iteration bound " << cap << " exceeded; remainder has " << remainder.size()
                << " terms, leading " << remainder.lowest_degree_part().to_string();
            throw std::runtime_error(msg.str());
        }
        // Terms are sorted by degree ascending, then lex descending, so the
        // lex-minimal monomial of the lowest degree part is the last term of
        // the first degree block.
        const auto& terms = remainder.terms();
        const int d = terms.front().monomial.degree();
        std::size_t k = 0;
        while (k + 1 < terms.size() && terms[k + 1].monomial.degree() == d) ++k;
        const Term lead = terms[k];
        const Composition beta = exponent_of(lead.monomial, f.n());
        if (beta.max_part() > dmax)
            throw std::runtime_error("lascoux_expand: per-variable degree grew past " + std::to_string(dmax));
        remainder -= lascoux(beta).scale(lead.coeff);
        Integer& slot = e.coeffs[beta];
        slot += lead.coeff;
        if (slot == 0) e.coeffs.erase(beta);
    }
    return e;
}

PositivityVerdict graded_positive(const LascouxExpansion& e) {
    PositivityVerdict v;
    for (const auto& [alpha, c] : e.coeffs) {
        if (c == 0) continue;
        const bool even = (alpha.weight() - e.baseline_degree) % 2 == 0;
        if ((c > 0) != even) {
            v.positive = false;
            v.violations.push_back(alpha);
        }
    }
    return v;
}

PositivityCheck check_positivity(const Polynomial& f) {
    PositivityCheck out;
    out.polynomial = f;
    out.expansion = lascoux_expand(f);
    out.verdict = graded_positive(out.expansion);
    return out;
}

Polynomial theorem12_polynomial(const Diagram& d) {
    const int m = d.ncols();
    const Polynomial specialized = script_S(d).substitute_y(-1);
    for (int i = 1; i <= d.nrows(); ++i) {
        const int deg = specialized.per_variable_degree(VarFamily::x, i);
        if (deg > m)
            throw std::domain_error("degree " + std::to_string(deg) + " in x" + std::to_string(i) +
                                    " exceeds the column count " + std::to_string(m));
    }
    return specialized.flip(m);
}

PositivityCheck theorem12_check(const Diagram& d, bool waive_inclusion) {
    if (!waive_inclusion && !columns_ordered_by_inclusion(d))
        throw std::invalid_argument("columns of " + d.to_string() + " are not ordered by inclusion");
    return check_positivity(theorem12_polynomial(d));
}

Polynomial corollary13_polynomial(const Permutation& w) {
    return double_schubert(w).substitute_y(1).flip(w.size());
}

std::string ScanItem::label() const {
    switch (target) {
        case ScanTarget::conj15:
            return "alpha=" + alpha.to_string() + " i=" + std::to_string(i);
        case ScanTarget::conj14:
        case ScanTarget::thm12_inclusion:
            return diagram.to_string();
        case ScanTarget::conj14_rothe:
        case ScanTarget::thm12_vexillary:
            return "w=" + w.to_string();
    }
    return {};
}

std::vector<ScanItem> conjecture15_items(int n, int max_entry) {
    std::vector<ScanItem> items;
    for (const auto& alpha : all_compositions(n, max_entry))
        for (int i = 1; i <= n; ++i) {
            ScanItem item{ScanTarget::conj15, alpha, i, {}, {}};
            items.push_back(std::move(item));
        }
    return items;
}

std::vector<ScanItem> conjecture14_items(int n, int m) {
    std::vector<ScanItem> items;
    for (const auto& d : all_diagrams(n, m))
        if (is_percent_avoiding(d)) items.push_back(ScanItem{ScanTarget::conj14, {}, 0, d, {}});
    return items;
}

std::vector<ScanItem> conjecture14_rothe_items(int n) {
    std::vector<ScanItem> items;
    for (const auto& w : all_permutations(n)) items.push_back(ScanItem{ScanTarget::conj14_rothe, {}, 0, rothe(w), w});
    return items;
}

std::vector<ScanItem> thm12_vexillary_items(int nmax) {
    std::vector<ScanItem> items;
    for (int n = 1; n <= nmax; ++n)
        for (const auto& w : all_permutations(n))
            if (w.is_vexillary()) items.push_back(ScanItem{ScanTarget::thm12_vexillary, {}, 0, rothe(w), w});
    return items;
}

std::vector<ScanItem> thm12_inclusion_items(int n, int m) {
    std::vector<ScanItem> items;
    for (const auto& d : all_diagrams(n, m))
        if (columns_ordered_by_inclusion(d)) items.push_back(ScanItem{ScanTarget::thm12_inclusion, {}, 0, d, {}});
    return items;
}

Polynomial scan_polynomial(const ScanItem& item) {
    switch (item.target) {
        case ScanTarget::conj15:
            return phi(lascoux(item.alpha), item.i);
        case ScanTarget::conj14:
        case ScanTarget::conj14_rothe:
        case ScanTarget::thm12_inclusion:
            return theorem12_polynomial(item.diagram);
        case ScanTarget::thm12_vexillary:
            return corollary13_polynomial(item.w);
    }
    throw std::logic_error("unknown scan target");
}

ScanRecord run_scan_item(const ScanItem& item) { return ScanRecord{item, check_positivity(scan_polynomial(item))}; }

std::vector<ScanRecord> run_scan(const std::vector<ScanItem>& items, int workers) {
    return parallel_map(items, workers, [](const ScanItem& item) { return run_scan_item(item); });
}

}  // namespace orthodontia

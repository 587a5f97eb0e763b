#pragma once

// Expansion in the Lascoux basis, graded positivity, and the positivity
// pipelines for diagrams, Lascoux products and vexillary permutations.

#include <map>
#include <string>
#include <vector>

#include "orthodontia/diagram.hpp"
#include "orthodontia/permutation.hpp"
#include "orthodontia/polynomial.hpp"

namespace orthodontia {

struct LascouxExpansion {
    int n = 0;
    std::map<Composition, Integer> coeffs;
    /// Degree of the lowest-degree part of the expanded polynomial (0 for zero input).
    int baseline_degree = 0;

    Polynomial reconstruct() const;
    bool operator==(const LascouxExpansion&) const = default;
};

/// Repeatedly strips the lex-minimal monomial x^b (x_1 heaviest) of the
/// lowest-degree part of the remainder with c * L_b. f must be free of y.
/// Throws std::runtime_error if the iteration bound (D+1)^n is exceeded.
LascouxExpansion lascoux_expand(const Polynomial& f);

struct PositivityVerdict {
    bool positive = true;
    std::vector<Composition> violations;
};

/// Positive iff sign(c_a) = (-1)^{|a| - d0} for every nonzero coefficient.
PositivityVerdict graded_positive(const LascouxExpansion& e);

struct PositivityCheck {
    Polynomial polynomial;
    LascouxExpansion expansion;
    PositivityVerdict verdict;
};

PositivityCheck check_positivity(const Polynomial& f);

/// flip_m(script_S(D) at y = -1), m = number of columns.
Polynomial theorem12_polynomial(const Diagram& d);
/// Throws std::invalid_argument when columns are not ordered by inclusion
/// unless `waive_inclusion`; std::domain_error if a variable degree exceeds m.
PositivityCheck theorem12_check(const Diagram& d, bool waive_inclusion = false);

/// x_1^n..x_n^n S_w(x_n^{-1}, .., x_1^{-1}; 1, .., 1) via the double Schubert polynomial.
Polynomial corollary13_polynomial(const Permutation& w);

enum class ScanTarget { conj15, conj14, conj14_rothe, thm12_vexillary, thm12_inclusion };

struct ScanItem {
    ScanTarget target;
    Composition alpha;  // conj15
    int i = 0;          // conj15
    Diagram diagram;    // conj14, thm12
    Permutation w;      // rothe / vexillary items

    std::string label() const;
};

struct ScanRecord {
    ScanItem item;
    PositivityCheck check;
};

/// All (alpha, i) with alpha in [0, max_entry]^n and i in [1, n].
std::vector<ScanItem> conjecture15_items(int n, int max_entry);
/// Every %-avoiding diagram in [n] x [m].
std::vector<ScanItem> conjecture14_items(int n, int m);
/// Rothe diagrams of all of S_n (m = n).
std::vector<ScanItem> conjecture14_rothe_items(int n);
/// Vexillary permutations of S_n, for n = 1..nmax.
std::vector<ScanItem> thm12_vexillary_items(int nmax);
/// Every inclusion-ordered diagram in [n] x [m].
std::vector<ScanItem> thm12_inclusion_items(int n, int m);

/// The polynomial a scan item is about, before expansion.
Polynomial scan_polynomial(const ScanItem& item);
ScanRecord run_scan_item(const ScanItem& item);
std::vector<ScanRecord> run_scan(const std::vector<ScanItem>& items, int workers = 1);

}  // namespace orthodontia

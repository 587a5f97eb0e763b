#pragma once

// Primary column data, sorting of permutations, and the generating relations
// of the orthodontic sort order.

#include <vector>

#include "orthodontia/diagram.hpp"
#include "orthodontia/permutation.hpp"

namespace orthodontia {

/// (h, C, alpha, i1, beta): location and shape of the first column of D(w)
/// that is not a standard interval. Dominant w gives (n, {}, 0, n, n).
struct PrimaryColumnData {
    int h = 0;
    RowSet C;
    int alpha = 0;
    int i1 = 0;
    int beta = 0;

    bool operator==(const PrimaryColumnData&) const = default;
};

PrimaryColumnData primary_column_data(const Permutation& w);

/// The dominant permutation in S_beta obtained by restricting w to [alpha+1, i1].
/// For dominant w this is w itself.
Permutation sigma_of(const Permutation& w);

/// w with w(alpha+1), ..., w(i1) rearranged increasingly.
Permutation sort_of(const Permutation& w);

/// sigma_of(w) is the identity.
bool is_sorted(const Permutation& w);

/// Last factor of the word s_{i1} s_{i1-1} ... used for sorted permutations:
/// s_{alpha+1} (the form used when relating orthodontic sequences) or s_alpha
/// (the generating relation as literally written; s_0 is dropped when alpha = 0).
enum class OsEndpoint { alpha_plus_one, alpha };

/// w s_{i1} s_{i1-1} ... s_end.
Permutation sorted_step(const Permutation& w, OsEndpoint endpoint = OsEndpoint::alpha_plus_one);

/// Immediate predecessors under the generating relations: [] for the identity,
/// [w_sort] for unsorted w, [sorted_step(w)] for sorted nonidentity w.
std::vector<Permutation> os_covers(const Permutation& w, OsEndpoint endpoint = OsEndpoint::alpha_plus_one);

}  // namespace orthodontia

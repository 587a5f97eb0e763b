#pragma once

// Polynomial families indexed by permutations, compositions and diagrams.
//
// Permutation families are computed by descending weak order from w_0 and
// are memoized per permutation; Lascoux polynomials are memoized per
// composition. All caches are thread-safe and only ever grow.

#include <filesystem>
#include <map>
#include <mutex>

#include "orthodontia/diagram.hpp"
#include "orthodontia/permutation.hpp"
#include "orthodontia/polynomial.hpp"

namespace orthodontia {

/// Which ascent to descend through when more than one is available.
enum class AscentChoice { first, last };

/// Ambient (n, n) for w in S_n.
Polynomial double_grothendieck(const Permutation& w);
/// Uncached computation along a chosen descent path, for path-independence checks.
Polynomial double_grothendieck_along(const Permutation& w, AscentChoice choice);
/// Lowest degree part of double_grothendieck(w) with y negated.
Polynomial double_schubert(const Permutation& w);
/// del-recursion from prod_{i+j<=n} (x_i - y_j).
Polynomial double_schubert_by_recursion(const Permutation& w);
/// y -> 0 specializations, ambient (n, 0), computed from the staircase monomial.
Polynomial grothendieck(const Permutation& w);
Polynomial schubert(const Permutation& w);

/// Ambient (n, 0) with n = alpha.size().
Polynomial lascoux(const Composition& alpha);
/// Lowest degree part of lascoux(alpha).
Polynomial key(const Composition& alpha);

enum class InnerOmega { barred, unbarred };

/// Barred-omega orthodontia formula over the double orthodontic sequence of d;
/// `inner` selects the omegas nested between the pibar operators. Ambient (n, ncols).
/// Outside Rothe diagrams some j_k can be 0 or negative. Every y index is then
/// shifted up by s = 1 - min j_k (y_j is stored as y_{j+s}) and the ambient is
/// (n, ncols + s); specializations that treat all y alike are unaffected.
Polynomial script_G(const Diagram& d, InnerOmega inner = InnerOmega::barred);
/// Unbarred counterpart built from pi_{i,j} and omega.
Polynomial script_S(const Diagram& d);
/// Same evaluations over a precomputed sequence.
Polynomial script_G(const OrthodonticSequence& seq, int n, int m, InnerOmega inner = InnerOmega::barred);
Polynomial script_S(const OrthodonticSequence& seq, int n, int m);

/// lim_N G_{1^N x w}(x_1..x_nvars, 0, ...), ambient (nvars, 0).
Polynomial stable_grothendieck(const Permutation& w, int nvars);

/// Lascoux cache persistence (ORTHODONTIA_CACHE_DIR support). Loading merges
/// into the in-memory cache; both are no-ops on missing files.
void load_lascoux_cache(const std::filesystem::path& file);
void save_lascoux_cache(const std::filesystem::path& file);
std::size_t lascoux_cache_size();

}  // namespace orthodontia

#include "orthodontia/sort_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthodontia {

PrimaryColumnData primary_column_data(const Permutation& w) {
    const int n = w.size();
    const Diagram d = rothe(w);
    for (int col = 1; col <= n; ++col) {
        const RowSet& c = d.column(col);
        if (c.is_standard_interval()) continue;
        PrimaryColumnData data;
        data.h = col - 1;
        data.C = c;
        while (c.contains(data.alpha + 1)) ++data.alpha;
        data.i1 = c.smallest_missing_tooth();
        data.beta = data.i1 - data.alpha;
        return data;
    }
    return PrimaryColumnData{n, RowSet{}, 0, n, n};
}

Permutation sigma_of(const Permutation& w) {
    const auto data = primary_column_data(w);
    const int offset = data.h - data.beta;
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(data.beta));
    for (int k = 1; k <= data.beta; ++k) {
        const int v = w(data.alpha + k) - offset;
        if (v < 1 || v > data.beta)
            throw std::logic_error(w.to_string() + " does not map [alpha+1, i1] onto [h-beta+1, h]");
        images.push_back(v);
    }
    return Permutation(std::move(images));
}

Permutation sort_of(const Permutation& w) {
    const auto data = primary_column_data(w);
    std::vector<int> images(w.images().begin(), w.images().end());
    std::sort(images.begin() + data.alpha, images.begin() + data.i1);
    return Permutation(std::move(images));
}

bool is_sorted(const Permutation& w) { return sigma_of(w).is_identity(); }

Permutation sorted_step(const Permutation& w, OsEndpoint endpoint) {
    const auto data = primary_column_data(w);
    const int last = endpoint == OsEndpoint::alpha_plus_one ? data.alpha + 1 : std::max(data.alpha, 1);
    Permutation result = w;
    for (int k = data.i1; k >= last; --k) result = result.right_multiply_s(k);
    return result;
}

std::vector<Permutation> os_covers(const Permutation& w, OsEndpoint endpoint) {
    if (w.is_identity()) return {};
    if (!is_sorted(w)) return {sort_of(w)};
    return {sorted_step(w, endpoint)};
}

}  // namespace orthodontia

#include "orthodontia/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "orthodontia/parse_error.hpp"

namespace orthodontia {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::shifted(const Permutation& w, int shift) {
    if (shift < 0) throw std::invalid_argument("negative shift");
    std::vector<int> v(static_cast<std::size_t>(shift + w.size()));
    for (int i = 0; i < shift; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 1; i <= w.size(); ++i) v[static_cast<std::size_t>(shift + i - 1)] = w(i) + shift;
    return Permutation(std::move(v));
}

int Permutation::length() const {
    int inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::right_multiply_s(int j) const {
    if (j < 1 || j >= size())
        throw std::out_of_range("s_" + std::to_string(j) + " outside S_" + std::to_string(size()));
    Permutation result = *this;
    std::swap(result.images_[static_cast<std::size_t>(j - 1)], result.images_[static_cast<std::size_t>(j)]);
    return result;
}

bool Permutation::has_ascent(int i) const {
    if (i < 1 || i >= size()) throw std::out_of_range("ascent index out of range");
    return (*this)(i) < (*this)(i + 1);
}

Permutation Permutation::demazure_star(int j) const {
    // Swapping an ascent raises the length by exactly one.
    return has_ascent(j) ? right_multiply_s(j) : *this;
}

namespace {

bool embeds(std::span<const int> w, std::span<const int> p, std::vector<int>& chosen, std::size_t start) {
    const std::size_t depth = chosen.size();
    if (depth == p.size()) return true;
    for (std::size_t pos = start; pos + (p.size() - depth) <= w.size(); ++pos) {
        bool consistent = true;
        for (std::size_t k = 0; k < depth && consistent; ++k)
            consistent = (p[k] < p[depth]) == (chosen[k] < w[pos]);
        if (!consistent) continue;
        chosen.push_back(w[pos]);
        if (embeds(w, p, chosen, pos + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool Permutation::avoids(const Permutation& pattern) const {
    if (pattern.size() > size()) return true;
    std::vector<int> chosen;
    return !embeds(images_, pattern.images_, chosen, 0);
}

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(images_[i]);
    }
    return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, bool allow_digit_string) {
    if (text.empty()) throw ParseError("empty list", 0);
    std::vector<int> values;
    const bool has_comma = text.find(',') != std::string_view::npos;
    if (allow_digit_string && !has_comma) {
        for (std::size_t pos = 0; pos < text.size(); ++pos) {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
            values.push_back(text[pos] - '0');
        }
        return values;
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t begin = pos;
        int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) throw ParseError("integer too large", begin);
            ++pos;
        }
        if (pos == begin) {
            if (pos < text.size()) throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
            throw ParseError("missing integer", pos);
        }
        values.push_back(value);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        ++pos;
    }
    return values;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
    auto values = parse_int_list(text, true);
    try {
        return Permutation(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::max_part() const {
    return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

bool Composition::is_partition() const {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Composition Composition::swapped(int i) const {
    if (i < 1 || i >= size()) throw std::out_of_range("composition swap index out of range");
    Composition result = *this;
    std::swap(result.parts_[static_cast<std::size_t>(i - 1)], result.parts_[static_cast<std::size_t>(i)]);
    return result;
}

Composition Composition::sorted_decreasing() const {
    Composition result = *this;
    std::sort(result.parts_.begin(), result.parts_.end(), std::greater<>());
    return result;
}

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Composition parse_composition(std::string_view text) { return Composition(parse_int_list(text, false)); }

std::vector<Composition> all_compositions(int n, int max_entry) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    while (true) {
        out.emplace_back(parts);
        int k = n - 1;
        while (k >= 0 && parts[static_cast<std::size_t>(k)] == max_entry) parts[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++parts[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace orthodontia

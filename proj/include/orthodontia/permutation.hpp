#pragma once

// Permutations in one-line notation (1-based) and integer compositions.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orthodontia {

class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection of [n].
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation longest(int n);
    /// 1^shift x w: fixes 1..shift and acts as w on shift+1..shift+|w|.
    static Permutation shifted(const Permutation& w, int shift);

    int size() const { return static_cast<int>(images_.size()); }
    /// w(i), 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const { return images_; }

    int length() const;
    bool is_identity() const;
    Permutation inverse() const;
    /// w s_j: entries at positions j, j+1 swapped.
    Permutation right_multiply_s(int j) const;
    /// w * s_j if that increases length, else w.
    Permutation demazure_star(int j) const;
    /// w(i) < w(i+1).
    bool has_ascent(int i) const;
    bool avoids(const Permutation& pattern) const;
    bool is_dominant() const { return avoids(Permutation({1, 3, 2})); }
    bool is_vexillary() const { return avoids(Permutation({2, 1, 4, 3})); }

    /// "31542" when n <= 9, "10,2,..." otherwise.
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

Permutation parse_permutation(std::string_view text);

/// All permutations of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Free-function spellings used throughout the verification code.
inline int length(const Permutation& w) { return w.length(); }
inline Permutation inverse(const Permutation& w) { return w.inverse(); }
inline Permutation right_multiply_s(const Permutation& w, int j) { return w.right_multiply_s(j); }
inline Permutation demazure_star(const Permutation& w, int j) { return w.demazure_star(j); }
inline bool avoids_pattern(const Permutation& w, const Permutation& p) { return w.avoids(p); }

class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument on a negative part.
    explicit Composition(std::vector<int> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    std::span<const int> parts() const { return parts_; }

    int weight() const;
    int max_part() const;
    bool is_partition() const;
    /// alpha . s_i (1-based i): swap parts i and i+1.
    Composition swapped(int i) const;
    Composition sorted_decreasing() const;

    std::string to_string() const;

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

Composition parse_composition(std::string_view text);

/// Every composition in [0, max_entry]^n, last part varying fastest.
std::vector<Composition> all_compositions(int n, int max_entry);

}  // namespace orthodontia

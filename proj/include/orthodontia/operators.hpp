#pragma once

// Divided-difference style operators acting on Polynomial. y-variables are
// inert: every operator here commutes with multiplication by y_j.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthodontia/polynomial.hpp"

namespace orthodontia {

/// (f - s_i f) / (x_i - x_{i+1}), computed term by term.
Polynomial divided_difference(const Polynomial& f, int i);
/// del_i((1 - x_{i+1}) f)
Polynomial isobaric(const Polynomial& f, int i);
/// del_i(x_i f)
Polynomial demazure(const Polynomial& f, int i);
/// isobaric_i(x_i f)
Polynomial demazure_lascoux(const Polynomial& f, int i);
/// del_i((x_i + y_j) f)
Polynomial pi_double(const Polynomial& f, int i, int j);
/// isobaric_i((x_i + y_j - x_i y_j) f)
Polynomial pibar_double(const Polynomial& f, int i, int j);

/// prod_{a <= i, c in columns} (x_a + y_c), or (x_a + y_c - x_a y_c) when barred.
Polynomial omega(int i, std::span<const int> columns, bool barred, int n, int m);
/// x_1..x_i (1 - x_{i+1})..(1 - x_n) f, for 0 <= i <= n. f must be free of y.
Polynomial phi(const Polynomial& f, int i);

/// x_a + y_c - x_a y_c
Polynomial bilinear_factor(int a, int c, int n, int m);

enum class OpKind { del, del_bar, pi, pi_bar, pi_double, pibar_double, phi };

struct Operator {
    OpKind kind;
    int i;
    int j = 0;

    std::string to_string() const;
    bool operator==(const Operator&) const = default;
};

Polynomial apply(const Operator& op, const Polynomial& f);

/// Applies a word written in composition order: word = (A, B, C) gives A(B(C(f))).
Polynomial apply_word(std::span<const Operator> word, const Polynomial& f);

/// Tokens like "d1", "dbar2", "pi1", "pibar3", "pi1.2", "pibar1.2", "phi0",
/// separated by spaces. Throws ParseError.
std::vector<Operator> parse_operator_word(std::string_view text);

}  // namespace orthodontia

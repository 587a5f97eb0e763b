#pragma once

// Sparse polynomials with exact integer coefficients in x_1..x_n, y_1..y_m.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orthodontia {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kMaxVars = 16;

enum class VarFamily { x, y };

/// Dense exponent vector; x exponents occupy the first kMaxVars slots, y the rest.
class Monomial {
public:
    Monomial() = default;

    int x(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
    int y(int j) const { return exps_[static_cast<std::size_t>(kMaxVars + j - 1)]; }
    int exponent(VarFamily family, int index) const { return family == VarFamily::x ? x(index) : y(index); }
    void set_x(int i, int e);
    void set_y(int j, int e);

    int x_degree() const;
    int y_degree() const;
    int degree() const { return x_degree() + y_degree(); }

    /// Throws std::overflow_error if an exponent leaves the 8-bit range.
    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    std::size_t hash() const;

    bool operator==(const Monomial&) const = default;
    /// Plain lexicographic order on (x_1..x_kMax, y_1..y_kMax).
    auto operator<=>(const Monomial&) const = default;

private:
    std::array<std::uint8_t, 2 * kMaxVars> exps_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical term order: total degree ascending, then exponent vectors
/// lexicographically descending reading x_1 first.
bool canonical_less(const Monomial& a, const Monomial& b);

struct Term {
    Monomial monomial;
    Integer coeff;

    bool operator==(const Term&) const = default;
};

class Polynomial;

/// Mutable map used to assemble a polynomial; zero coefficients are dropped on finish().
class TermAccumulator {
public:
    void add(const Monomial& m, const Integer& c);
    void add(const Polynomial& p, const Integer& scale = 1);
    Polynomial finish(int n, int m) &&;

private:
    std::unordered_map<Monomial, Integer, MonomialHash> terms_;
};

class Polynomial {
public:
    Polynomial() = default;
    /// The zero polynomial in the given ambient ring.
    Polynomial(int n, int m);

    static Polynomial constant(int n, int m, const Integer& c);
    static Polynomial x(int n, int m, int i);
    static Polynomial y(int n, int m, int j);
    static Polynomial monomial(int n, int m, const Monomial& mono, const Integer& c = 1);
    /// x^alpha in n = alpha.size() variables, no y.
    static Polynomial x_power(const std::vector<int>& alpha);

    int n() const { return n_; }
    int m() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    Integer coefficient(const Monomial& mono) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Integer& c) const { return scale(c); }
    Polynomial scale(const Integer& c) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    bool operator==(const Polynomial& other) const = default;

    /// Every y_j replaced by c; the result has m = 0.
    Polynomial substitute_y(const Integer& c) const;
    /// y_j -> -y_j for every j.
    Polynomial negate_y() const;
    /// x_i replaced by the constant c (ambient unchanged).
    Polynomial substitute_x(int i, const Integer& c) const;
    /// Terms of minimal total degree. Throws std::domain_error on zero.
    Polynomial lowest_degree_part() const;
    /// Terms of the given total degree.
    Polynomial homogeneous_part(int degree) const;
    int min_degree() const;
    int max_degree() const;
    /// x^e -> x^{e'} with e'_i = mcap - e_{n+1-i}. Requires m = 0 and every x-degree <= mcap.
    Polynomial flip(int mcap) const;
    /// Largest exponent of the named variable; 0 for the zero polynomial.
    int per_variable_degree(VarFamily family, int index) const;
    int max_x_degree() const;
    /// f with x_i and x_{i+1} exchanged.
    Polynomial swap_x(int i) const;
    /// Re-embed in a larger ambient ring.
    Polynomial with_ambient(int n, int m) const;
    /// x_i -> x_{i+shift}; ambient n grows by shift.
    Polynomial shift_x(int shift) const;
    /// Exact quotient by divisor, or nullopt when divisor does not divide *this.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    /// "x1^2*x2 - 2*y1 + 1" style, canonical order.
    std::string to_string() const;
    std::string to_latex() const;

private:
    friend class TermAccumulator;
    void check_ambient(const Polynomial& other) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Integer& c, const Polynomial& p) { return p.scale(c); }

/// Free-function spellings.
inline Polynomial substitute_y(const Polynomial& f, const Integer& c) { return f.substitute_y(c); }
inline Polynomial negate_y(const Polynomial& f) { return f.negate_y(); }
inline Polynomial lowest_degree_part(const Polynomial& f) { return f.lowest_degree_part(); }
inline Polynomial flip(const Polynomial& f, int mcap) { return f.flip(mcap); }
inline int per_variable_degree(const Polynomial& f, VarFamily family, int i) { return f.per_variable_degree(family, i); }

}  // namespace orthodontia

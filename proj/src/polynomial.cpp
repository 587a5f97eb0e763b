#include "orthodontia/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace orthodontia {

namespace {

void check_exponent(int e) {
    if (e < 0 || e > std::numeric_limits<std::uint8_t>::max())
        throw std::overflow_error("exponent " + std::to_string(e) + " outside supported range");
}

void check_var_index(int index, int bound, const char* family) {
    if (index < 1 || index > bound)
        throw std::out_of_range(std::string("variable ") + family + std::to_string(index) + " outside ambient ring");
}

void check_ambient_size(int n, int m) {
    if (n < 0 || n > kMaxVars || m < 0 || m > kMaxVars)
        throw std::invalid_argument("ambient (" + std::to_string(n) + "," + std::to_string(m) + ") exceeds " +
                                    std::to_string(kMaxVars) + " variables per family");
}

}  // namespace

void Monomial::set_x(int i, int e) {
    check_var_index(i, kMaxVars, "x");
    check_exponent(e);
    exps_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(e);
}

void Monomial::set_y(int j, int e) {
    check_var_index(j, kMaxVars, "y");
    check_exponent(e);
    exps_[static_cast<std::size_t>(kMaxVars + j - 1)] = static_cast<std::uint8_t>(e);
}

int Monomial::x_degree() const {
    int d = 0;
    for (int k = 0; k < kMaxVars; ++k) d += exps_[static_cast<std::size_t>(k)];
    return d;
}

int Monomial::y_degree() const {
    int d = 0;
    for (int k = kMaxVars; k < 2 * kMaxVars; ++k) d += exps_[static_cast<std::size_t>(k)];
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        const int e = exps_[k] + other.exps_[k];
        check_exponent(e);
        out.exps_[k] = static_cast<std::uint8_t>(e);
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] > other.exps_[k]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial out;
    for (std::size_t k = 0; k < exps_.size(); ++k)
        out.exps_[k] = static_cast<std::uint8_t>(other.exps_[k] - exps_[k]);
    return out;
}

std::size_t Monomial::hash() const {
    std::uint64_t words[2 * kMaxVars / 8];
    std::memcpy(words, exps_.data(), exps_.size());
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return b < a;
}

void TermAccumulator::add(const Monomial& m, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
}

void TermAccumulator::add(const Polynomial& p, const Integer& scale) {
    for (const auto& t : p.terms()) add(t.monomial, t.coeff * scale);
}

Polynomial TermAccumulator::finish(int n, int m) && {
    Polynomial out(n, m);
    out.terms_.reserve(terms_.size());
    for (auto& [mono, c] : terms_)
        if (!c.is_zero()) out.terms_.push_back(Term{mono, std::move(c)});
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return canonical_less(a.monomial, b.monomial); });
    terms_.clear();
    return out;
}

Polynomial::Polynomial(int n, int m) : n_(n), m_(m) { check_ambient_size(n, m); }

Polynomial Polynomial::constant(int n, int m, const Integer& c) { return monomial(n, m, Monomial{}, c); }

Polynomial Polynomial::x(int n, int m, int i) {
    check_var_index(i, n, "x");
    Monomial mono;
    mono.set_x(i, 1);
    return monomial(n, m, mono);
}

Polynomial Polynomial::y(int n, int m, int j) {
    check_var_index(j, m, "y");
    Monomial mono;
    mono.set_y(j, 1);
    return monomial(n, m, mono);
}

Polynomial Polynomial::monomial(int n, int m, const Monomial& mono, const Integer& c) {
    Polynomial out(n, m);
    if (!c.is_zero()) out.terms_.push_back(Term{mono, c});
    return out;
}

Polynomial Polynomial::x_power(const std::vector<int>& alpha) {
    Monomial mono;
    for (std::size_t i = 0; i < alpha.size(); ++i) mono.set_x(static_cast<int>(i) + 1, alpha[i]);
    return monomial(static_cast<int>(alpha.size()), 0, mono);
}

Integer Polynomial::coefficient(const Monomial& mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const Monomial& key) { return canonical_less(t.monomial, key); });
    if (it != terms_.end() && it->monomial == mono) return it->coeff;
    return 0;
}

void Polynomial::check_ambient(const Polynomial& other) const {
    if (n_ != other.n_ || m_ != other.m_)
        throw std::invalid_argument("ambient mismatch: (" + std::to_string(n_) + "," + std::to_string(m_) +
                                    ") vs (" + std::to_string(other.n_) + "," + std::to_string(other.m_) + ")");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_ambient(other);
    // Both operands are sorted; merge.
    Polynomial out(n_, m_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && canonical_less(a->monomial, b->monomial))) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || canonical_less(b->monomial, a->monomial)) {
            out.terms_.push_back(*b++);
        } else {
            Integer c = a->coeff + b->coeff;
            if (!c.is_zero()) out.terms_.push_back(Term{a->monomial, std::move(c)});
            ++a;
            ++b;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::scale(const Integer& c) const {
    Polynomial out(n_, m_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_ambient(other);
    if (is_zero() || other.is_zero()) return Polynomial(n_, m_);
    if (other.terms_.size() == 1 && other.terms_[0].monomial == Monomial{}) return scale(other.terms_[0].coeff);
    if (terms_.size() == 1 && terms_[0].monomial == Monomial{}) return other.scale(terms_[0].coeff);
    TermAccumulator acc;
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) acc.add(a.monomial * b.monomial, a.coeff * b.coeff);
    return std::move(acc).finish(n_, m_);
}

Polynomial Polynomial::substitute_y(const Integer& c) const {
    TermAccumulator acc;
    for (const auto& t : terms_) {
        Monomial mono;
        for (int i = 1; i <= n_; ++i) mono.set_x(i, t.monomial.x(i));
        Integer coeff = t.coeff;
        const int d = t.monomial.y_degree();
        if (d > 0) coeff *= boost::multiprecision::pow(c, static_cast<unsigned>(d));
        acc.add(mono, coeff);
    }
    return std::move(acc).finish(n_, 0);
}

Polynomial Polynomial::negate_y() const {
    Polynomial out = *this;
    for (auto& t : out.terms_)
        if (t.monomial.y_degree() % 2 == 1) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::substitute_x(int i, const Integer& c) const {
    check_var_index(i, n_, "x");
    TermAccumulator acc;
    for (const auto& t : terms_) {
        Monomial mono = t.monomial;
        const int e = mono.x(i);
        mono.set_x(i, 0);
        acc.add(mono, e == 0 ? t.coeff : t.coeff * boost::multiprecision::pow(c, static_cast<unsigned>(e)));
    }
    return std::move(acc).finish(n_, m_);
}

int Polynomial::min_degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return terms_.front().monomial.degree();
}

int Polynomial::max_degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return terms_.back().monomial.degree();
}

Polynomial Polynomial::homogeneous_part(int degree) const {
    Polynomial out(n_, m_);
    for (const auto& t : terms_)
        if (t.monomial.degree() == degree) out.terms_.push_back(t);
    return out;
}

Polynomial Polynomial::lowest_degree_part() const {
    if (is_zero()) throw std::domain_error("lowest degree part of the zero polynomial");
    return homogeneous_part(min_degree());
}

Polynomial Polynomial::flip(int mcap) const {
    if (m_ != 0) throw std::invalid_argument("flip requires a polynomial without y variables");
    if (mcap < 0) throw std::invalid_argument("flip cap must be nonnegative");
    TermAccumulator acc;
    for (const auto& t : terms_) {
        Monomial mono;
        for (int i = 1; i <= n_; ++i) {
            const int e = t.monomial.x(n_ + 1 - i);
            if (e > mcap)
                throw std::domain_error("degree " + std::to_string(e) + " in x" + std::to_string(n_ + 1 - i) +
                                        " exceeds flip cap " + std::to_string(mcap));
            mono.set_x(i, mcap - e);
        }
        acc.add(mono, t.coeff);
    }
    return std::move(acc).finish(n_, 0);
}

int Polynomial::per_variable_degree(VarFamily family, int index) const {
    check_var_index(index, family == VarFamily::x ? n_ : m_, family == VarFamily::x ? "x" : "y");
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(family, index));
    return d;
}

int Polynomial::max_x_degree() const {
    int d = 0;
    for (const auto& t : terms_)
        for (int i = 1; i <= n_; ++i) d = std::max(d, t.monomial.x(i));
    return d;
}

Polynomial Polynomial::swap_x(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("swap index out of range");
    TermAccumulator acc;
    for (const auto& t : terms_) {
        Monomial mono = t.monomial;
        mono.set_x(i, t.monomial.x(i + 1));
        mono.set_x(i + 1, t.monomial.x(i));
        acc.add(mono, t.coeff);
    }
    return std::move(acc).finish(n_, m_);
}

Polynomial Polynomial::with_ambient(int n, int m) const {
    for (const auto& t : terms_) {
        for (int i = n + 1; i <= n_; ++i)
            if (t.monomial.x(i) != 0) throw std::invalid_argument("polynomial uses x" + std::to_string(i));
        for (int j = m + 1; j <= m_; ++j)
            if (t.monomial.y(j) != 0) throw std::invalid_argument("polynomial uses y" + std::to_string(j));
    }
    Polynomial out(n, m);
    out.terms_ = terms_;
    return out;
}

Polynomial Polynomial::shift_x(int shift) const {
    TermAccumulator acc;
    for (const auto& t : terms_) {
        Monomial mono;
        for (int i = 1; i <= n_; ++i) mono.set_x(i + shift, t.monomial.x(i));
        for (int j = 1; j <= m_; ++j) mono.set_y(j, t.monomial.y(j));
        acc.add(mono, t.coeff);
    }
    return std::move(acc).finish(n_ + shift, m_);
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    check_ambient(divisor);
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    // Single-divisor division under plain lex order: exact iff the remainder vanishes.
    const auto lex_leading = [](const Polynomial& p) {
        return *std::max_element(p.terms_.begin(), p.terms_.end(),
                                 [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    };
    const Term lead = lex_leading(divisor);
    Polynomial remainder = *this;
    TermAccumulator quotient;
    while (!remainder.is_zero()) {
        const Term top = lex_leading(remainder);
        if (!lead.monomial.divides(top.monomial)) return std::nullopt;
        Integer q, r;
        boost::multiprecision::divide_qr(top.coeff, lead.coeff, q, r);
        if (!r.is_zero()) return std::nullopt;
        const Polynomial step = Polynomial::monomial(n_, m_, lead.monomial.quotient_of(top.monomial), q);
        quotient.add(step);
        remainder = remainder - step * divisor;
    }
    return std::move(quotient).finish(n_, m_);
}

namespace {

void write_monomial(std::ostream& out, const Monomial& mono, int n, int m, bool latex) {
    bool first = true;
    const auto emit = [&](const char* name, int index, int e) {
        if (e == 0) return;
        if (!first) out << (latex ? " " : "*");
        first = false;
        if (latex)
            out << name << "_{" << index << "}";
        else
            out << name << index;
        if (e > 1) {
            if (latex)
                out << "^{" << e << "}";
            else
                out << "^" << e;
        }
    };
    for (int i = 1; i <= n; ++i) emit("x", i, mono.x(i));
    for (int j = 1; j <= m; ++j) emit("y", j, mono.y(j));
}

std::string render(const Polynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Integer c = t.coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool is_const = t.monomial == Monomial{};
        if (is_const) {
            out << c;
            continue;
        }
        if (c != 1) out << c << (latex ? " " : "*");
        write_monomial(out, t.monomial, p.n(), p.m(), latex);
    }
    return out.str();
}

}  // namespace

std::string Polynomial::to_string() const { return render(*this, false); }

std::string Polynomial::to_latex() const { return render(*this, true); }

}  // namespace orthodontia

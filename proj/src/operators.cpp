#include "orthodontia/operators.hpp"

#include <cctype>
#include <stdexcept>

#include "orthodontia/parse_error.hpp"

namespace orthodontia {

namespace {

void check_operator_index(const Polynomial& f, int i) {
    if (i < 1 || i >= f.n())
        throw std::out_of_range("operator index " + std::to_string(i) + " outside [1, " + std::to_string(f.n() - 1) +
                                "]");
}

void check_column(const Polynomial& f, int j) {
    if (j < 1 || j > f.m())
        throw std::out_of_range("column index " + std::to_string(j) + " outside [1, " + std::to_string(f.m()) + "]");
}

}  // namespace

Polynomial divided_difference(const Polynomial& f, int i) {
    check_operator_index(f, i);
    TermAccumulator acc;
    for (const auto& t : f.terms()) {
        const int a = t.monomial.x(i);
        const int b = t.monomial.x(i + 1);
        if (a == b) continue;
        // x_i^a x_{i+1}^b -> sign * (x_i x_{i+1})^low * sum_{k < gap} x_i^k x_{i+1}^{gap-1-k}
        const int low = std::min(a, b);
        const int gap = std::abs(a - b);
        const Integer coeff = a > b ? t.coeff : Integer(-t.coeff);
        Monomial base = t.monomial;
        for (int k = 0; k < gap; ++k) {
            base.set_x(i, low + k);
            base.set_x(i + 1, low + gap - 1 - k);
            acc.add(base, coeff);
        }
    }
    return std::move(acc).finish(f.n(), f.m());
}

Polynomial isobaric(const Polynomial& f, int i) {
    check_operator_index(f, i);
    return divided_difference(f - f * Polynomial::x(f.n(), f.m(), i + 1), i);
}

Polynomial demazure(const Polynomial& f, int i) {
    check_operator_index(f, i);
    return divided_difference(f * Polynomial::x(f.n(), f.m(), i), i);
}

Polynomial demazure_lascoux(const Polynomial& f, int i) {
    check_operator_index(f, i);
    return isobaric(f * Polynomial::x(f.n(), f.m(), i), i);
}

Polynomial pi_double(const Polynomial& f, int i, int j) {
    check_operator_index(f, i);
    check_column(f, j);
    return divided_difference(f * (Polynomial::x(f.n(), f.m(), i) + Polynomial::y(f.n(), f.m(), j)), i);
}

Polynomial bilinear_factor(int a, int c, int n, int m) {
    const Polynomial xa = Polynomial::x(n, m, a);
    const Polynomial yc = Polynomial::y(n, m, c);
    return xa + yc - xa * yc;
}

Polynomial pibar_double(const Polynomial& f, int i, int j) {
    check_operator_index(f, i);
    check_column(f, j);
    return isobaric(f * bilinear_factor(i, j, f.n(), f.m()), i);
}

Polynomial omega(int i, std::span<const int> columns, bool barred, int n, int m) {
    if (i < 0 || i > n) throw std::out_of_range("omega row index " + std::to_string(i) + " outside [0, " +
                                                std::to_string(n) + "]");
    Polynomial result = Polynomial::constant(n, m, 1);
    for (int c : columns) {
        if (c < 1 || c > m) throw std::out_of_range("omega column " + std::to_string(c) + " outside ambient");
        for (int a = 1; a <= i; ++a)
            result *= barred ? bilinear_factor(a, c, n, m) : Polynomial::x(n, m, a) + Polynomial::y(n, m, c);
    }
    return result;
}

Polynomial phi(const Polynomial& f, int i) {
    if (f.m() != 0) throw std::invalid_argument("phi acts on polynomials without y variables");
    const int n = f.n();
    if (i < 0 || i > n) throw std::out_of_range("phi index " + std::to_string(i) + " outside [0, " +
                                                std::to_string(n) + "]");
    Polynomial factor = Polynomial::constant(n, 0, 1);
    for (int a = 1; a <= i; ++a) factor *= Polynomial::x(n, 0, a);
    for (int a = i + 1; a <= n; ++a) factor *= Polynomial::constant(n, 0, 1) - Polynomial::x(n, 0, a);
    return factor * f;
}

std::string Operator::to_string() const {
    switch (kind) {
        case OpKind::del: return "d" + std::to_string(i);
        case OpKind::del_bar: return "dbar" + std::to_string(i);
        case OpKind::pi: return "pi" + std::to_string(i);
        case OpKind::pi_bar: return "pibar" + std::to_string(i);
        case OpKind::pi_double: return "pi" + std::to_string(i) + "." + std::to_string(j);
        case OpKind::pibar_double: return "pibar" + std::to_string(i) + "." + std::to_string(j);
        case OpKind::phi: return "phi" + std::to_string(i);
    }
    return "?";
}

Polynomial apply(const Operator& op, const Polynomial& f) {
    switch (op.kind) {
        case OpKind::del: return divided_difference(f, op.i);
        case OpKind::del_bar: return isobaric(f, op.i);
        case OpKind::pi: return demazure(f, op.i);
        case OpKind::pi_bar: return demazure_lascoux(f, op.i);
        case OpKind::pi_double: return pi_double(f, op.i, op.j);
        case OpKind::pibar_double: return pibar_double(f, op.i, op.j);
        case OpKind::phi: return phi(f, op.i);
    }
    throw std::logic_error("unknown operator kind");
}

Polynomial apply_word(std::span<const Operator> word, const Polynomial& f) {
    Polynomial result = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) result = apply(*it, result);
    return result;
}

std::vector<Operator> parse_operator_word(std::string_view text) {
    std::vector<Operator> word;
    std::size_t pos = 0;
    const auto read_int = [&](std::size_t& p) {
        const std::size_t begin = p;
        int v = 0;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) v = v * 10 + (text[p++] - '0');
        if (p == begin) throw ParseError("expected operator index", p);
        return v;
    };
    while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == ',') {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string_view name = text.substr(start, pos - start);
        Operator op{OpKind::del, 0};
        if (name == "d") op.kind = OpKind::del;
        else if (name == "dbar") op.kind = OpKind::del_bar;
        else if (name == "pi") op.kind = OpKind::pi;
        else if (name == "pibar") op.kind = OpKind::pi_bar;
        else if (name == "phi") op.kind = OpKind::phi;
        else throw ParseError("unknown operator '" + std::string(name) + "'", start);
        op.i = read_int(pos);
        if (pos < text.size() && text[pos] == '.') {
            if (op.kind != OpKind::pi && op.kind != OpKind::pi_bar)
                throw ParseError("only pi and pibar take a column index", pos);
            ++pos;
            op.j = read_int(pos);
            op.kind = op.kind == OpKind::pi ? OpKind::pi_double : OpKind::pibar_double;
        }
        word.push_back(op);
    }
    return word;
}

}  // namespace orthodontia

#include <doctest.h>

#include "orthodontia/families.hpp"
#include "orthodontia/operators.hpp"
#include "orthodontia/parse_error.hpp"
#include "test_support.hpp"

using namespace orthodontia;
using testing::c;
using testing::Gen;
using testing::x;
using testing::y;

TEST_CASE("divided difference examples") {
    CHECK(divided_difference(x(2, 0, 1), 1) == c(2, 0, 1));
    CHECK(divided_difference(x(2, 0, 1) * x(2, 0, 2), 1).is_zero());
    CHECK(divided_difference(x(2, 0, 1) * x(2, 0, 1) * x(2, 0, 2), 1) == x(2, 0, 1) * x(2, 0, 2));
    CHECK_THROWS_AS(divided_difference(x(2, 0, 1), 2), std::out_of_range);
}

TEST_CASE("divided difference quotient identity and y-linearity") {
    Gen gen(31);
    for (int t = 0; t < 200; ++t) {
        const int n = gen.range(2, 4), m = gen.range(0, 2);
        const Polynomial f = gen.polynomial(n, m, 4, 8, 6);
        const int i = gen.range(1, n - 1);
        CHECK((x(n, m, i) - x(n, m, i + 1)) * divided_difference(f, i) == f - f.swap_x(i));
        if (m > 0) {
            const Polynomial yf = y(n, m, 1) * f;
            CHECK(divided_difference(yf, i) == y(n, m, 1) * divided_difference(f, i));
        }
    }
}

TEST_CASE("isobaric and Demazure examples") {
    CHECK(isobaric(c(2, 0, 1), 1) == c(2, 0, 1));
    // del_1(x1 - x1 x2) = 1.
    CHECK(isobaric(x(2, 0, 1), 1) == c(2, 0, 1));
    CHECK(isobaric(x(2, 0, 1) * x(2, 0, 2), 1) == x(2, 0, 1) * x(2, 0, 2));
    CHECK(demazure(c(2, 0, 1), 1) == c(2, 0, 1));
    CHECK(demazure(x(2, 0, 1), 1) == x(2, 0, 1) + x(2, 0, 2));
    CHECK(demazure_lascoux(x(2, 0, 1), 1) == x(2, 0, 1) + x(2, 0, 2) - x(2, 0, 1) * x(2, 0, 2));
}

TEST_CASE("doubled operators") {
    CHECK(pi_double(c(2, 1, 1), 1, 1) == c(2, 1, 1));
    CHECK(pibar_double(c(2, 1, 1), 1, 1) == c(2, 1, 1));
    CHECK_THROWS_AS(pi_double(c(2, 1, 1), 1, 2), std::out_of_range);
    Gen gen(32);
    for (int t = 0; t < 100; ++t) {
        const int n = gen.range(2, 4);
        const Polynomial f = gen.polynomial(n, 2, 3, 6, 5);
        const int i = gen.range(1, n - 1), j = gen.range(1, 2);
        CHECK(pi_double(f, i, j).substitute_y(0) == demazure(f.substitute_y(0), i));
        CHECK(pibar_double(f, i, j).substitute_y(0) == demazure_lascoux(f.substitute_y(0), i));
        CHECK(pi_double(f, i, j) == divided_difference((x(n, 2, i) + y(n, 2, j)) * f, i));
    }
}

TEST_CASE("omega weights") {
    const std::vector<int> none, one{1};
    CHECK(omega(2, none, false, 2, 1) == c(2, 1, 1));
    CHECK(omega(1, one, false, 2, 1) == x(2, 1, 1) + y(2, 1, 1));
    CHECK(omega(2, one, true, 2, 1) == bilinear_factor(1, 1, 2, 1) * bilinear_factor(2, 1, 2, 1));
    CHECK(bilinear_factor(2, 1, 2, 1) == x(2, 1, 2) + y(2, 1, 1) - x(2, 1, 2) * y(2, 1, 1));
    CHECK_THROWS_AS(omega(3, one, false, 2, 1), std::out_of_range);
}

TEST_CASE("phi multipliers") {
    CHECK(phi(c(3, 0, 1), 3) == x(3, 0, 1) * x(3, 0, 2) * x(3, 0, 3));
    CHECK(phi(c(2, 0, 1), 1) == x(2, 0, 1) - x(2, 0, 1) * x(2, 0, 2));
    CHECK_THROWS_AS(phi(y(2, 1, 1), 1), std::invalid_argument);
    // phi_1(1) = x_1 (1 - G_21(x_2, x_3)) in three variables.
    const Polynomial g21 = stable_grothendieck(parse_permutation("21"), 2).shift_x(1);
    CHECK(phi(c(3, 0, 1), 1) == x(3, 0, 1) * (c(3, 0, 1) - g21));
}

TEST_CASE("braid, commutation and square relations") {
    using Op = Polynomial (*)(const Polynomial&, int);
    const Op ops[] = {divided_difference, isobaric, demazure, demazure_lascoux};
    Gen gen(33);
    for (int t = 0; t < 80; ++t) {
        const int n = gen.range(3, 4);
        const Polynomial f = gen.polynomial(n, gen.range(0, 1), 3, 4, 5);
        for (int k = 0; k < 4; ++k) {
            const Op op = ops[k];
            for (int i = 1; i + 2 <= n; ++i) CHECK(op(op(op(f, i), i + 1), i) == op(op(op(f, i + 1), i), i + 1));
            if (n == 4) CHECK(op(op(f, 1), 3) == op(op(f, 3), 1));
            const Polynomial once = op(f, 1);
            if (k == 0)
                CHECK(op(once, 1).is_zero());
            else
                CHECK(op(once, 1) == once);
        }
    }
}

TEST_CASE("operator words") {
    const auto word = parse_operator_word("pibar1 d2 pi1.2 phi0");
    REQUIRE(word.size() == 4);
    CHECK(word[0] == Operator{OpKind::pi_bar, 1});
    CHECK(word[1] == Operator{OpKind::del, 2});
    CHECK(word[2] == Operator{OpKind::pi_double, 1, 2});
    CHECK(word[3] == Operator{OpKind::phi, 0});
    const auto two = parse_operator_word("pibar1 dbar2");
    const Polynomial f = x(3, 0, 2);
    CHECK(apply_word(two, f) == demazure_lascoux(isobaric(f, 2), 1));

    CHECK_THROWS_AS(parse_operator_word("pibar1 foo2"), ParseError);
    try {
        parse_operator_word("pibar1 foo2");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_operator_word("d1.2"), ParseError);
}

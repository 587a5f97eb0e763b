#include <doctest.h>

#include <filesystem>

#include "orthodontia/families.hpp"
#include "orthodontia/operators.hpp"
#include "orthodontia/pipe_dreams.hpp"
#include "test_support.hpp"

using namespace orthodontia;
using testing::c;
using testing::Gen;
using testing::x;
using testing::y;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

Polynomial x_to(const std::vector<int>& e, int m = 0) {
    return Polynomial::x_power(e).with_ambient(static_cast<int>(e.size()), m);
}

}  // namespace

TEST_CASE("double Grothendieck polynomials agree with the pipe-dream sum") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) CHECK_MESSAGE(double_grothendieck(w) == weight_sum(w), w.to_string());
}

TEST_CASE("double Grothendieck small cases") {
    CHECK(double_grothendieck(Permutation::identity(3)) == c(3, 3, 1));
    CHECK(double_grothendieck(P("21")) == bilinear_factor(1, 1, 2, 2));
    Polynomial staircase = c(3, 3, 1);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; i + j <= 3; ++j) staircase *= bilinear_factor(i, j, 3, 3);
    CHECK(double_grothendieck(P("321")) == staircase);
}

TEST_CASE("descent path independence") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_permutations(n))
            CHECK_MESSAGE(double_grothendieck_along(w, AscentChoice::first) ==
                              double_grothendieck_along(w, AscentChoice::last),
                          w.to_string());
}

TEST_CASE("single Schubert polynomials in S_3") {
    CHECK(schubert(P("123")) == c(3, 0, 1));
    CHECK(schubert(P("213")) == x(3, 0, 1));
    CHECK(schubert(P("132")) == x(3, 0, 1) + x(3, 0, 2));
    CHECK(schubert(P("231")) == x(3, 0, 1) * x(3, 0, 2));
    CHECK(schubert(P("312")) == x(3, 0, 1) * x(3, 0, 1));
    CHECK(schubert(P("321")) == x(3, 0, 1) * x(3, 0, 1) * x(3, 0, 2));
}

TEST_CASE("specializations of the double families") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) {
            CHECK(grothendieck(w) == double_grothendieck(w).substitute_y(0));
            CHECK(schubert(w) == double_schubert(w).substitute_y(0));
            CHECK(double_schubert(w) == double_schubert_by_recursion(w));
            CHECK(double_schubert(w).min_degree() == w.length());
            CHECK(double_schubert(w).max_degree() == w.length());
        }
}

TEST_CASE("double Schubert of the longest element in S_3") {
    const Polynomial expected = (x(3, 3, 1) - y(3, 3, 1)) * (x(3, 3, 2) - y(3, 3, 1)) * (x(3, 3, 1) - y(3, 3, 2));
    CHECK(double_schubert(P("321")) == expected);
    CHECK(double_schubert(P("321")).size() == 8);
}

TEST_CASE("single factorization of 2413 does not lift to double variables") {
    const Polynomial g2413 = grothendieck(P("2413"));
    const Polynomial g132 = grothendieck(P("1324"));
    CHECK(g2413 == x(4, 0, 1) * x(4, 0, 2) * g132);
    CHECK_FALSE(double_grothendieck(P("2413")).divide_exact(double_grothendieck(P("1324"))).has_value());
}

TEST_CASE("Lascoux polynomials") {
    CHECK(lascoux(Composition({2, 1})) == x_to({2, 1}));
    CHECK(lascoux(Composition({0, 1})) == x(2, 0, 1) + x(2, 0, 2) - x(2, 0, 1) * x(2, 0, 2));
    CHECK(key(Composition({0, 1})) == x(2, 0, 1) + x(2, 0, 2));
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : all_compositions(n, 3)) {
            CHECK_MESSAGE(lascoux(a) == testing::lascoux_last_ascent(a), a.to_string());
            CHECK(key(a) == lascoux(a).lowest_degree_part());
        }
}

TEST_CASE("Lascoux polynomials at partitions are monomials") {
    Gen gen(51);
    for (int t = 0; t < 30; ++t) {
        const Composition a = gen.composition(gen.range(1, 4), 4).sorted_decreasing();
        CHECK(lascoux(a) == x_to(std::vector<int>(a.parts().begin(), a.parts().end())));
    }
}

TEST_CASE("orthodontia formula on small Rothe diagrams") {
    CHECK(script_G(rothe(P("21"))) == bilinear_factor(1, 1, 2, 2));
    const std::vector<int> two{2};
    const Polynomial rhs = pibar_double(omega(1, two, true, 3, 3), 1, 1);
    CHECK(script_G(rothe(P("132"))) == rhs);
    CHECK(rhs == weight_sum(P("132")));
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) {
            CHECK_MESSAGE(script_G(rothe(w)) == double_grothendieck(w), w.to_string());
            CHECK_MESSAGE(script_S(rothe(w)) == double_schubert(w).negate_y(), w.to_string());
        }
}

TEST_CASE("script_S on skylines specializes to key polynomials") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : all_compositions(n, 3)) {
            const Polynomial s = script_S(skyline(a)).substitute_y(0);
            CHECK_MESSAGE(s == key(a), a.to_string());
        }
}

TEST_CASE("lowest-degree relations between script_S and script_G") {
    for (const auto& d : all_diagrams(3, 3)) {
        if (!is_percent_avoiding(d)) continue;
        const Polynomial s = script_S(d);
        const Polynomial g = script_G(d);
        Monomial xd;
        for (int i = 1; i <= d.nrows(); ++i) xd.set_x(i, d.row_count(i));
        CHECK_MESSAGE(s.coefficient(xd) == 1, d.to_string());
        CHECK_MESSAGE(s == g.lowest_degree_part(), d.to_string());
    }
}

TEST_CASE("nonpositive y labels are shifted uniformly") {
    const Diagram d = skyline(Composition({0, 1}));
    const auto seq = orthodontic_sequence(d);
    REQUIRE(seq.j == std::vector<int>{0});
    const Polynomial g = script_G(d);
    CHECK(g.m() == d.ncols() + 1);
    CHECK(g.substitute_y(0) == lascoux(Composition({0, 1})));
}

TEST_CASE("stable Grothendieck polynomials") {
    const Polynomial e1 = x(3, 0, 1) + x(3, 0, 2) + x(3, 0, 3);
    const Polynomial e2 = x(3, 0, 1) * x(3, 0, 2) + x(3, 0, 1) * x(3, 0, 3) + x(3, 0, 2) * x(3, 0, 3);
    const Polynomial e3 = x(3, 0, 1) * x(3, 0, 2) * x(3, 0, 3);
    CHECK(stable_grothendieck(P("21"), 3) == e1 - e2 + e3);
    CHECK(stable_grothendieck(P("21"), 2) == x(2, 0, 1) + x(2, 0, 2) - x(2, 0, 1) * x(2, 0, 2));
    CHECK(stable_grothendieck(Permutation::identity(2), 2) == c(2, 0, 1));
    CHECK_THROWS_AS(stable_grothendieck(P("21"), 0), std::invalid_argument);
}

TEST_CASE("Lascoux cache persistence") {
    const auto dir = std::filesystem::temp_directory_path() / "orthodontia_cache_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "lascoux.json";
    const Polynomial before = lascoux(Composition({1, 0, 3}));
    save_lascoux_cache(file);
    CHECK(std::filesystem::exists(file));
    const std::size_t size = lascoux_cache_size();
    load_lascoux_cache(file);
    CHECK(lascoux_cache_size() == size);
    CHECK(lascoux(Composition({1, 0, 3})) == before);
    load_lascoux_cache(dir / "missing.json");
    std::filesystem::remove_all(dir);
}

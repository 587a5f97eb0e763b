#include <doctest.h>

#include "orthodontia/families.hpp"
#include "orthodontia/json_io.hpp"
#include "test_support.hpp"

using namespace orthodontia;
using nlohmann::json;
using testing::Gen;

TEST_CASE("polynomial JSON layout") {
    const Polynomial f = testing::x(2, 1, 1) - testing::y(2, 1, 1).scale(3);
    const json doc = to_json(f);
    CHECK(doc.at("n") == 2);
    CHECK(doc.at("m") == 1);
    CHECK(doc.at("terms").size() == 2);
    CHECK(doc.at("terms")[0] == json({{"x", {1, 0}}, {"y", {0}}, {"c", 1}}));
    CHECK(doc.at("terms")[1] == json({{"x", {0, 0}}, {"y", {1}}, {"c", -3}}));
}

TEST_CASE("polynomial JSON round trip") {
    Gen gen(71);
    for (int t = 0; t < 100; ++t) {
        const Polynomial f = gen.polynomial(gen.range(1, 4), gen.range(0, 3), 3, 8, 6);
        CHECK(polynomial_from_json(to_json(f)) == f);
        CHECK(polynomial_from_json(json::parse(to_json(f).dump())) == f);
    }
    CHECK(polynomial_from_json(to_json(double_grothendieck(parse_permutation("3142")))) ==
          double_grothendieck(parse_permutation("3142")));
}

TEST_CASE("large coefficients travel as strings") {
    const Integer big = Integer(1) << 80;
    const Polynomial f = testing::c(1, 0, big) - testing::x(1, 0, 1).scale(big);
    const json doc = to_json(f);
    CHECK(doc.at("terms")[0].at("c").is_string());
    CHECK(polynomial_from_json(doc) == f);
    CHECK(integer_from_json(json("-12")) == -12);
    CHECK(integer_from_json(json(7)) == 7);
    CHECK_THROWS_AS(integer_from_json(json("12a")), std::invalid_argument);
    CHECK_THROWS_AS(integer_from_json(json("-")), std::invalid_argument);
    CHECK_THROWS_AS(integer_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("malformed polynomial documents") {
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"n":1,"terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"n":1,"m":0,"terms":[{"x":[1,2],"y":[],"c":1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"n":1,"m":0,"terms":[{"x":[1],"y":[]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"n":"two","m":0,"terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("duplicate and cancelling terms are merged") {
    const json doc = json::parse(R"({"n":1,"m":0,"terms":[{"x":[1],"y":[],"c":2},{"x":[1],"y":[],"c":-2}]})");
    CHECK(polynomial_from_json(doc).is_zero());
}

TEST_CASE("expansion JSON round trip") {
    const auto e = lascoux_expand(corollary13_polynomial(parse_permutation("321")));
    const json doc = to_json(e);
    CHECK(doc.size() == 5);
    CHECK(doc[0].at("alpha") == json({3, 2, 1}));
    CHECK(expansion_from_json(doc, e.n, e.baseline_degree) == e);
    CHECK_THROWS_AS(expansion_from_json(json::parse(R"([{"alpha":[1],"c":1}])"), 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(expansion_from_json(json::parse(R"([{"c":1}])"), 1, 0), std::invalid_argument);
}

TEST_CASE("scan records") {
    const auto items = conjecture15_items(2, 1);
    const auto record = run_scan_item(items[1]);
    const json doc = to_json(record);
    CHECK(doc.at("item") == json({{"alpha", {0, 0}}, {"i", 2}}));
    CHECK(doc.at("verdict") == "positive");
    CHECK(doc.at("d0") == record.check.expansion.baseline_degree);
    CHECK_FALSE(doc.contains("violations"));

    const auto rothe_item = conjecture14_rothe_items(3)[5];
    CHECK(item_to_json(rothe_item) == json({{"w", "321"}}));
    const auto diag_item = conjecture14_items(2, 1)[1];
    CHECK(item_to_json(diag_item).at("diagram").is_string());

    ScanRecord bad = record;
    bad.check.verdict.positive = false;
    bad.check.verdict.violations = {Composition({1, 1})};
    const json bad_doc = to_json(bad);
    CHECK(bad_doc.at("verdict") == "violation");
    CHECK(bad_doc.at("violations") == json::array({json({1, 1})}));
}

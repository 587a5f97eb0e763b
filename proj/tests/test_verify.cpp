#include <doctest.h>

#include <map>
#include <stdexcept>

#include "orthodontia/verify.hpp"

using namespace orthodontia;

TEST_CASE("every suite passes at small sizes") {
    for (const auto& suite : verify_suites()) {
        const auto report = run_verify(suite, 4);
        CHECK_MESSAGE(report.failed() == 0, suite);
        CHECK_MESSAGE(!report.checks.empty(), suite);
        CHECK(report.suite == suite);
        std::size_t total = 0;
        for (const auto& [group, counts] : report.group_counts()) {
            total += counts.first;
            CHECK(counts.second == 0);
        }
        CHECK(total == report.checks.size());
    }
}

TEST_CASE("suite sizes") {
    CHECK(run_verify("thm11", 2).checks.size() == 2);
    CHECK(run_verify("thm11", 4).checks.size() == 24);
    CHECK(verify_suites().size() == 7);
    CHECK_THROWS_AS(run_verify("nonsense", 3), std::invalid_argument);
}

TEST_CASE("parallel verification agrees") {
    const auto serial = run_verify("cor-double-schub", 4, 1);
    const auto parallel = run_verify("cor-double-schub", 4, 3);
    REQUIRE(serial.checks.size() == parallel.checks.size());
    for (std::size_t k = 0; k < serial.checks.size(); ++k) {
        CHECK(serial.checks[k].item == parallel.checks[k].item);
        CHECK(serial.checks[k].passed == parallel.checks[k].passed);
    }
}

TEST_CASE("notational variants resolve as expected") {
    // Title -> (index of the variant that holds, whether the other one fails).
    const std::map<std::string, std::pair<std::size_t, bool>> expected = {
        {"Sign of the pipe-dream weight sum", {0, true}},
        {"pibar_i on a Lascoux polynomial with alpha_i != alpha_{i+1}", {0, true}},
        {"Inner omegas of the orthodontia formula", {0, true}},
        {"Last factor of the sorted-step relation", {0, true}},
        {"Grothendieck step through the sorted-step relation", {0, true}},
        {"Termination of the sort order", {0, false}},
        {"Lowest degree part of script_G", {0, true}},
        {"K_alpha in the sorting relation", {1, true}},
        {"Specialization inside pi_{i,j}", {0, true}},
        {"Base case of the pibar collapse", {0, true}},
    };
    const auto findings = ambiguity_findings(5);
    CHECK(findings.size() == expected.size());
    for (const auto& q : findings) {
        REQUIRE_MESSAGE(expected.count(q.title) == 1, q.title);
        const auto [winner, other_fails] = expected.at(q.title);
        REQUIRE(q.variants.size() == 2);
        const auto& win = q.variants[winner];
        const auto& lose = q.variants[1 - winner];
        CHECK_MESSAGE(win.checked > 0, q.title);
        CHECK_MESSAGE(win.failed == 0, q.title);
        CHECK_MESSAGE(!win.first_counterexample, q.title);
        CHECK_MESSAGE((lose.failed > 0) == other_fails, q.title);
        if (other_fails) CHECK(lose.first_counterexample.has_value());
    }

    const std::string text = render_ambiguity_report(findings, 5);
    CHECK(text.find("S_2..S_5") != std::string::npos);
    CHECK(text.find("first counterexample w=132") != std::string::npos);
    CHECK(text.find("barred inner omegas: holds") != std::string::npos);
}

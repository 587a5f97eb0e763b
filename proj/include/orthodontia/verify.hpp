#pragma once

// Named invariant suites shared by the `verify` subcommand and the
// acceptance tests, plus the report on the two notational variants.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthodontia/permutation.hpp"

namespace orthodontia {

struct VerifyCheck {
    std::string group;
    std::string item;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    int nmax = 0;
    std::vector<VerifyCheck> checks;

    std::size_t failed() const;
    std::size_t passed() const { return checks.size() - failed(); }
    /// Per-group (checked, failed) counts in first-seen order.
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> group_counts() const;
};

/// thm11, cor-double-schub, prop-os1, thm-os2, operators, lemma4, triangularity.
const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(std::string_view suite, int nmax, int workers = 1);

struct VariantOutcome {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// First failing index, e.g. a permutation or composition.
    std::optional<std::string> first_counterexample;
};

struct AmbiguityQuestion {
    std::string title;
    std::string criterion;
    std::vector<VariantOutcome> variants;
};

/// Each question is run over every relevant permutation of S_2..S_nmax.
std::vector<AmbiguityQuestion> ambiguity_findings(int nmax);
/// One-page plain-text rendering.
std::string render_ambiguity_report(const std::vector<AmbiguityQuestion>& findings, int nmax);

}  // namespace orthodontia

#include "orthodontia/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace orthodontia {

nlohmann::json integer_to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

Integer integer_from_json(const nlohmann::json& value) {
    if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw std::invalid_argument("coefficient string is not an integer: " + s);
        return Integer(s);
    }
    throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        std::vector<int> x(static_cast<std::size_t>(p.n()));
        std::vector<int> y(static_cast<std::size_t>(p.m()));
        for (int i = 1; i <= p.n(); ++i) x[static_cast<std::size_t>(i - 1)] = t.monomial.x(i);
        for (int j = 1; j <= p.m(); ++j) y[static_cast<std::size_t>(j - 1)] = t.monomial.y(j);
        terms.push_back({{"x", x}, {"y", y}, {"c", integer_to_json(t.coeff)}});
    }
    return {{"n", p.n()}, {"m", p.m()}, {"terms", terms}};
}

namespace {

Polynomial parse_polynomial(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs fields n, m, terms");
    const int n = doc.at("n").get<int>();
    const int m = doc.at("m").get<int>();
    TermAccumulator acc;
    Polynomial shape(n, m);
    for (const auto& term : doc.at("terms")) {
        const auto x = term.value("x", std::vector<int>{});
        const auto y = term.value("y", std::vector<int>{});
        if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != m)
            throw std::invalid_argument("term exponent vectors do not match ambient (n, m)");
        Monomial mono;
        for (int i = 1; i <= n; ++i) mono.set_x(i, x[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= m; ++j) mono.set_y(j, y[static_cast<std::size_t>(j - 1)]);
        if (!term.contains("c")) throw std::invalid_argument("term without coefficient");
        acc.add(mono, integer_from_json(term.at("c")));
    }
    return std::move(acc).finish(n, m);
}

LascouxExpansion parse_expansion(const nlohmann::json& doc, int n, int baseline_degree) {
    if (!doc.is_array()) throw std::invalid_argument("expansion JSON must be an array");
    LascouxExpansion e;
    e.n = n;
    e.baseline_degree = baseline_degree;
    for (const auto& entry : doc) {
        auto alpha = entry.at("alpha").get<std::vector<int>>();
        if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("composition length differs from n");
        Integer& slot = e.coeffs[Composition(std::move(alpha))];
        slot += integer_from_json(entry.at("c"));
    }
    std::erase_if(e.coeffs, [](const auto& kv) { return kv.second == 0; });
    return e;
}

}  // namespace

Polynomial polynomial_from_json(const nlohmann::json& doc) {
    try {
        return parse_polynomial(doc);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

nlohmann::json to_json(const LascouxExpansion& e) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [alpha, c] : e.coeffs)
        out.push_back({{"alpha", std::vector<int>(alpha.parts().begin(), alpha.parts().end())}, {"c", integer_to_json(c)}});
    return out;
}

LascouxExpansion expansion_from_json(const nlohmann::json& doc, int n, int baseline_degree) {
    try {
        return parse_expansion(doc, n, baseline_degree);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed expansion JSON: ") + ex.what());
    }
}

nlohmann::json item_to_json(const ScanItem& item) {
    switch (item.target) {
        case ScanTarget::conj15:
            return {{"alpha", std::vector<int>(item.alpha.parts().begin(), item.alpha.parts().end())}, {"i", item.i}};
        case ScanTarget::conj14:
        case ScanTarget::thm12_inclusion:
            return {{"diagram", item.diagram.to_string()}};
        case ScanTarget::conj14_rothe:
        case ScanTarget::thm12_vexillary:
            return {{"w", item.w.to_string()}};
    }
    return nullptr;
}

nlohmann::json to_json(const ScanRecord& record) {
    nlohmann::json out;
    out["item"] = item_to_json(record.item);
    out["verdict"] = record.check.verdict.positive ? "positive" : "violation";
    out["expansion"] = to_json(record.check.expansion);
    out["d0"] = record.check.expansion.baseline_degree;
    if (!record.check.verdict.positive) {
        nlohmann::json bad = nlohmann::json::array();
        for (const auto& alpha : record.check.verdict.violations)
            bad.push_back(std::vector<int>(alpha.parts().begin(), alpha.parts().end()));
        out["violations"] = bad;
    }
    return out;
}

}  // namespace orthodontia

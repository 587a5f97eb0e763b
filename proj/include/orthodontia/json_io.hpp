#pragma once

// JSON interchange: {"n":..,"m":..,"terms":[{"x":[..],"y":[..],"c":..},..]}
// with terms in canonical order. Coefficients outside the int64 range are
// written as decimal strings and accepted in either form.

#include <nlohmann/json.hpp>

#include "orthodontia/lascoux_basis.hpp"
#include "orthodontia/permutation.hpp"
#include "orthodontia/polynomial.hpp"

namespace orthodontia {

nlohmann::json to_json(const Polynomial& p);
/// Throws std::invalid_argument on a malformed document.
Polynomial polynomial_from_json(const nlohmann::json& doc);

nlohmann::json integer_to_json(const Integer& c);
Integer integer_from_json(const nlohmann::json& value);

/// [{"alpha":[..],"c":..},..] in composition order.
nlohmann::json to_json(const LascouxExpansion& e);
LascouxExpansion expansion_from_json(const nlohmann::json& doc, int n, int baseline_degree);

/// {"item":..,"verdict":"positive"|"violation","expansion":[..],"d0":..}
nlohmann::json to_json(const ScanRecord& record);
nlohmann::json item_to_json(const ScanItem& item);

}  // namespace orthodontia

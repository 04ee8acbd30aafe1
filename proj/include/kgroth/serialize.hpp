#pragma once

// JSON forms of polynomials, expansions and verification reports.

#include <json.hpp>

#include "kgroth/algebra.hpp"
#include "kgroth/expand.hpp"
#include "kgroth/kjdt.hpp"
#include "kgroth/tableaux.hpp"
#include "kgroth/verify.hpp"

namespace kgroth {

/// Insertion-ordered JSON, so fields print in the documented order.
using Json = nlohmann::ordered_json;

/// {"vars":m,"terms":[{"beta":k,"exp":[...],"c":"<int>"}]}, terms in
/// flat_terms() order.
Json polynomial_to_json(const MVPolynomial& p);
/// Inverse of polynomial_to_json; InputError on malformed input.
MVPolynomial polynomial_from_json(const Json& j);

/// {"shape":[...],"rows":[[...],...]}.
Json tableau_to_json(const Tableau& t);
/// Inverse of tableau_to_json; InputError on malformed input.
Tableau tableau_from_json(const Json& j);

/// Rows of a slide state: labels as integers, null for empty cells, "•" for
/// bullets.
Json slide_state_to_json(const SlideState& s);

/// {"basis":"key","terms":[{"index":[...],"beta":k,"c":"<int>"}]}, ordered by
/// index then beta power.
Json expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const Json& j);

/// One report line. elapsed_ms is included only when `timing` is set, so
/// the default output is reproducible byte for byte. A failing report
/// carries a "counterexample" object with both sides, every tableau and
/// every left key.
Json report_to_json(const ConjectureReport& r, bool timing = false);

/// {"summary":true,"suite":...,"population":...,"checked":...,"passed":...,
/// "failures":[...]}.
Json suite_to_json(const SuiteReport& s);

}  // namespace kgroth

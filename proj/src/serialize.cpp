#include "kgroth/serialize.hpp"

#include "kgroth/errors.hpp"

namespace kgroth {

Json polynomial_to_json(const MVPolynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.flat_terms()) {
    terms.push_back({{"beta", t.beta}, {"exp", t.exponent}, {"c", t.coefficient.get_str()}});
  }
  return {{"vars", p.ambient()}, {"terms", std::move(terms)}};
}

MVPolynomial polynomial_from_json(const Json& j) {
  try {
    const int vars = j.at("vars").get<int>();
    if (vars < 1) throw InputError("polynomial JSON: vars must be positive");
    MVPolynomial p(vars);
    for (const auto& t : j.at("terms")) {
      const int beta = t.at("beta").get<int>();
      auto exp = t.at("exp").get<std::vector<int>>();
      if (beta < 0 || static_cast<int>(exp.size()) != vars) throw InputError("polynomial JSON: bad term shape");
      for (int e : exp) {
        if (e < 0) throw InputError("polynomial JSON: negative exponent");
      }
      mpz_class c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw InputError("polynomial JSON: bad coefficient");
      p.add_term(std::move(exp), BetaScalar::monomial(beta, c));
    }
    return p;
  } catch (const Json::exception& e) {
    throw InputError(std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace kgroth

namespace kgroth {

Json tableau_to_json(const Tableau& t) { return {{"shape", t.shape().parts()}, {"rows", t.rows()}}; }

Tableau tableau_from_json(const Json& j) {
  try {
    Tableau t(j.at("rows").get<std::vector<std::vector<int>>>());
    if (t.shape().parts() != j.at("shape").get<std::vector<int>>()) throw InputError("tableau JSON: shape mismatch");
    return t;
  } catch (const Json::exception& e) {
    throw InputError(std::string("tableau JSON: ") + e.what());
  }
}

Json slide_state_to_json(const SlideState& s) {
  Json rows = Json::array();
  for (int r = 0; r < s.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < s.cols(); ++c) {
      const int v = s.at(r, c);
      if (v == SlideState::kEmpty) row.push_back(nullptr);
      else if (v == SlideState::kBullet) row.push_back("•");
      else row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json expansion_to_json(const Expansion& e) {
  Json terms = Json::array();
  for (const auto& [index, c] : e.terms) {
    for (int k = 0; k <= c.degree(); ++k) {
      const mpz_class v = c.coefficient(k);
      if (v != 0) terms.push_back({{"index", index.entries()}, {"beta", k}, {"c", v.get_str()}});
    }
  }
  return {{"basis", basis_name(e.basis)}, {"terms", std::move(terms)}};
}

Expansion expansion_from_json(const Json& j) {
  try {
    Expansion e{parse_basis(j.at("basis").get<std::string>()), {}};
    for (const auto& t : j.at("terms")) {
      mpz_class c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw InputError("expansion JSON: bad coefficient");
      const int beta = t.at("beta").get<int>();
      if (beta < 0) throw InputError("expansion JSON: negative beta power");
      e.terms[Composition(t.at("index").get<std::vector<int>>())] += BetaScalar::monomial(beta, c);
    }
    std::erase_if(e.terms, [](const auto& entry) { return entry.second.is_zero(); });
    return e;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("expansion JSON: ") + ex.what());
  }
}

Json report_to_json(const ConjectureReport& r, bool timing) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"tableau", t.tableau.to_string()},
                     {"shape", t.shape.parts()},
                     {"key", t.left_key.to_string()},
                     {"content", t.content.entries()},
                     {"beta_power", t.beta_power}});
  }
  Json j{{"w", r.w.to_string()},
                   {"holds", r.holds},
                   {"lhs_equals_rhs", r.lhs_equals_rhs},
                   {"terms", std::move(terms)}};
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  if (!r.holds) {
    Json tableaux = Json::array();
    Json keys = Json::array();
    for (const auto& t : r.terms) {
      tableaux.push_back(t.tableau.to_string());
      keys.push_back(t.left_key.to_string());
    }
    j["counterexample"] = {{"w", r.w.to_string()},
                           {"lhs", r.lhs ? polynomial_to_json(*r.lhs) : Json()},
                           {"rhs", r.rhs ? polynomial_to_json(*r.rhs) : Json()},
                           {"tableaux", std::move(tableaux)},
                           {"left_keys", std::move(keys)}};
  }
  return j;
}

Json suite_to_json(const SuiteReport& s) {
  return {{"summary", true},     {"suite", s.suite},         {"population", s.population},
          {"checked", s.checked}, {"passed", s.passed()}, {"failures", s.failures}};
}

}  // namespace kgroth

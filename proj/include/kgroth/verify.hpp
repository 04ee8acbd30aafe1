#pragma once

// The Grothendieck-to-Lascoux conjecture engine and the theorem cross-check
// suites. Mismatches are reported as findings, never thrown.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgroth/algebra.hpp"
#include "kgroth/expand.hpp"
#include "kgroth/families.hpp"
#include "kgroth/shapes.hpp"
#include "kgroth/symgroup.hpp"
#include "kgroth/tableaux.hpp"

namespace kgroth {

struct ConjectureTerm {
  Tableau tableau;
  Tableau left_key;
  Partition shape;
  Composition content;
  int beta_power = 0;
};

struct ConjectureReport {
  Permutation w;
  bool holds = false;
  bool lhs_equals_rhs = false;
  std::vector<ConjectureTerm> terms;
  /// Both sides, kept only when they differ (the counterexample bundle).
  std::optional<MVPolynomial> lhs;
  std::optional<MVPolynomial> rhs;
  double elapsed_ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::string population;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Sum over conjecture_tableaux(w) of beta^{#boxes - l(w)} Omega_{content(K_-(P))}.
MVPolynomial conjecture_rhs(const Permutation& w, FamilyCache& cache);

/// Compares grothendieck(w) with conjecture_rhs(w).
ConjectureReport check_conjecture(const Permutation& w, FamilyCache& cache);

using ReportSink = std::function<void(const ConjectureReport&)>;

/// check_conjecture on every w in S_n with `parallelism` worker threads.
/// Reports are delivered to `sink` (if given) and returned in lexicographic
/// order of w, independent of scheduling.
std::vector<ConjectureReport> check_all(int n, int parallelism, FamilyCache& cache, const ReportSink& sink = {});

/// Summary of a set of conjecture reports.
SuiteReport summarize_conjecture(const std::vector<ConjectureReport>& reports, const std::string& population);

/// grothendieck(w) == groth_compatible(w) for all w in S_n.
SuiteReport suite_fk(int n, FamilyCache& cache);
SuiteReport suite_fk(const std::vector<Permutation>& population, const std::string& description, FamilyCache& cache);

/// schubert(w) == sum of key(content(K_-(P))) over tableaux with reduced
/// words, for all w in S_n.
SuiteReport suite_schub_to_key(int n, FamilyCache& cache);
SuiteReport suite_schub_to_key(const std::vector<Permutation>& population, const std::string& description,
                               FamilyCache& cache);

/// stable_groth(w, m) == sum over shapes of beta^{|lambda| - l(w)} b_{w,lambda}
/// buch_G(lambda, m), b counting conjecture tableaux of that shape; all w in S_n.
SuiteReport suite_bksty(int n, int m);
SuiteReport suite_bksty(const std::vector<Permutation>& population, const std::string& description, int m);

/// stable_groth(w, m) == sum of beta^{|lambda| - l(w)} d_{w,lambda} s_lambda
/// in m variables, d counting row-strict column-weak tableaux with Hecke words
/// for w and at most m rows.
SuiteReport suite_fg(const Permutation& w, int m);

/// As suite_fg for every w in S_n, or for an explicit population.
SuiteReport suite_fg_all(int n, int m);
SuiteReport suite_fg(const std::vector<Permutation>& population, const std::string& description, int m);

/// The Lascoux expansion of grothendieck(w), solved by linear algebra, equals
/// the left-key content multiset and has nonnegative integer coefficients.
SuiteReport suite_oracle(const std::vector<Permutation>& population, const std::string& description,
                         FamilyCache& cache, Expander& expander);

/// Key expansion of Omega_{1,0,2,1} (four variables), whose beta^1 part has
/// a negative coefficient.
Expansion warning_example(FamilyCache& cache, Expander& expander);

/// Left-key content multiset of conjecture_tableaux(w) as an expansion in
/// the Lascoux basis, each content weighted by beta^{#boxes - l(w)}.
Expansion conjecture_expansion(const Permutation& w);

}  // namespace kgroth

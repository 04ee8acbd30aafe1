#pragma once

// Change of basis by exact linear algebra: expansions of polynomials in the
// key, Lascoux and Schur bases.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>

#include "kgroth/algebra.hpp"
#include "kgroth/families.hpp"
#include "kgroth/shapes.hpp"

namespace kgroth {

enum class Basis { Key, Lascoux, Schur };

/// "key", "lascoux", "schur".
std::string basis_name(Basis basis);
/// Inverse of basis_name; InputError otherwise.
Basis parse_basis(std::string_view text);

/// Coefficients in one basis. Schur indices are stored as the partition's
/// parts. Zero coefficients are never stored.
struct Expansion {
  Basis basis = Basis::Key;
  std::map<Composition, BetaScalar> terms;

  friend bool operator==(const Expansion&, const Expansion&) = default;

  /// "1·k[1,0,2,1] + 2·k[1,1,2,1]·b + ..."; one summand per (index, beta
  /// power), ordered by index then beta power. "0" when empty.
  std::string to_string() const;
};

struct BasisSystem;

/// Solves for expansion coefficients, one x-homogeneous, beta-homogeneous
/// piece at a time. Transition matrices are factored once per (basis,
/// degree, variable count) and reused; safe to share between threads.
class Expander {
 public:
  explicit Expander(FamilyCache& cache);
  ~Expander();

  /// Expansion in key polynomials kappa_alpha with length(alpha) <= nvars.
  /// NotInSpanError (naming the graded piece) when a piece is not spanned;
  /// InvariantViolation on a non-integral solution.
  Expansion in_keys(const MVPolynomial& f, int nvars);

  /// Expansion in Lascoux polynomials with length(alpha) <= nvars. The input
  /// must be homogeneous in adjusted degree (InputError otherwise); the
  /// coefficient of Omega_alpha is an integer times beta^{|alpha| - degree}.
  Expansion in_lascoux(const MVPolynomial& f, int nvars);

  /// Expansion in Schur polynomials s_lambda(x_1..x_m), lambda with <= m
  /// parts. InputError unless f is symmetric in x_1..x_m and uses no other
  /// variable.
  Expansion in_schur(const MVPolynomial& f, int m);

 private:
  const BasisSystem& system(Basis basis, int degree, int nvars);
  std::map<Composition, mpz_class> solve_piece(Basis basis, const std::map<Exponent, mpz_class>& piece, int degree,
                                              int nvars, const std::string& label);

  FamilyCache& cache_;
  std::mutex mutex_;
  std::map<std::tuple<Basis, int, int>, std::unique_ptr<BasisSystem>> systems_;
};

/// Sum of coefficient * basis element, in nvars variables for Schur.
MVPolynomial reconstruct(const Expansion& e, int nvars, FamilyCache& cache);

Expansion expand_in_keys(const MVPolynomial& f, int nvars, FamilyCache& cache);
Expansion expand_in_lascoux(const MVPolynomial& f, int nvars, FamilyCache& cache);
Expansion expand_in_schur(const MVPolynomial& f, int m, FamilyCache& cache);

}  // namespace kgroth

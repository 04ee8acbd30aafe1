#pragma once

// Exact polynomial arithmetic over Z[beta][x_1, ..., x_m] and the divided
// difference operators used by the Grothendieck and Lascoux recursions.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kgroth {

/// Element of Z[beta], stored densely by beta-exponent.
///
/// Canonical form has no trailing zero coefficients; zero is the empty
/// sequence, so equality is plain vector equality.
class BetaScalar {
 public:
  BetaScalar() = default;
  BetaScalar(long constant);  // NOLINT(google-explicit-constructor)
  BetaScalar(mpz_class constant);  // NOLINT(google-explicit-constructor)

  static BetaScalar monomial(int beta_power, const mpz_class& coefficient = 1);
  static BetaScalar from_coefficients(std::vector<mpz_class> coefficients);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  /// Coefficient of beta^k; zero outside the stored range.
  mpz_class coefficient(int k) const;
  /// Highest beta power present, -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BetaScalar& operator+=(const BetaScalar& other);
  BetaScalar& operator-=(const BetaScalar& other);
  BetaScalar& operator*=(const BetaScalar& other);
  friend BetaScalar operator+(BetaScalar a, const BetaScalar& b) { return a += b; }
  friend BetaScalar operator-(BetaScalar a, const BetaScalar& b) { return a -= b; }
  friend BetaScalar operator*(const BetaScalar& a, const BetaScalar& b);
  friend BetaScalar operator-(BetaScalar a);
  friend bool operator==(const BetaScalar& a, const BetaScalar& b) = default;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<mpz_class> coeffs_;
};

/// Powers of x_1..x_m; the length always equals the owning polynomial's ambient.
using Exponent = std::vector<int>;

/// One (beta^k * x^e) term with an integer coefficient; the flattened view used
/// for rendering and serialization.
struct FlatTerm {
  int beta = 0;
  Exponent exponent;
  mpz_class coefficient;
};

/// Sparse polynomial in x_1..x_m with coefficients in Z[beta].
///
/// Values are immutable once built (all arithmetic returns new values). Mixed
/// ambients are reconciled by padding with zero powers, never by truncation.
class MVPolynomial {
 public:
  using TermMap = std::map<Exponent, BetaScalar>;

  explicit MVPolynomial(int ambient = 1);

  static MVPolynomial constant(const BetaScalar& c, int ambient = 1);
  static MVPolynomial monomial(Exponent exponent, const BetaScalar& c = 1);
  /// x_i, 1-based.
  static MVPolynomial variable(int i, int ambient = 0);
  static MVPolynomial beta();

  int ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^e (padded or trimmed of trailing zero powers as needed).
  BetaScalar coefficient(const Exponent& e) const;
  /// Maximum total x-degree over all terms; -1 for zero.
  int x_degree() const;
  /// Highest beta power in any coefficient; -1 for zero.
  int beta_degree() const;
  /// Highest variable index carrying a positive power (0 for constants).
  int support_width() const;

  /// Same polynomial in a larger ambient. Throws InputError if m would drop a
  /// variable with a positive power.
  MVPolynomial with_ambient(int m) const;

  /// Accumulates c * x^e. `e` is padded to the ambient, which grows if needed.
  void add_term(Exponent e, const BetaScalar& c);

  MVPolynomial& operator+=(const MVPolynomial& other);
  MVPolynomial& operator-=(const MVPolynomial& other);
  friend MVPolynomial operator+(MVPolynomial a, const MVPolynomial& b) { return a += b; }
  friend MVPolynomial operator-(MVPolynomial a, const MVPolynomial& b) { return a -= b; }
  friend MVPolynomial operator-(const MVPolynomial& a);
  friend MVPolynomial operator*(const MVPolynomial& a, const MVPolynomial& b);
  friend MVPolynomial operator*(const BetaScalar& c, const MVPolynomial& p);
  friend bool operator==(const MVPolynomial& a, const MVPolynomial& b);

  /// Terms sorted by beta-exponent, then by x-exponent in descending lex order
  /// (so x1 precedes x2).
  std::vector<FlatTerm> flat_terms() const;

  /// "x1^2*x2 + b*x1^2*x2^2"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Inverse of to_string. The ambient is the largest variable index seen
  /// (at least `min_ambient`).
  static MVPolynomial parse(std::string_view text, int min_ambient = 1);

 private:
  int ambient_;
  TermMap terms_;
};

MVPolynomial add(const MVPolynomial& p, const MVPolynomial& q);
MVPolynomial mul(const MVPolynomial& p, const MVPolynomial& q);

/// s_i: exchanges x_i and x_{i+1} (1-based). Ambient grows to i+1 if needed.
MVPolynomial swap_vars(const MVPolynomial& p, int i);

/// (p - s_i p) / (x_i - x_{i+1}), computed by synthetic division. A nonzero
/// remainder throws InvariantViolation.
MVPolynomial divided_difference(const MVPolynomial& p, int i);

/// pi_i(p) = d_i((1 + beta x_{i+1}) p).
MVPolynomial pi(const MVPolynomial& p, int i);

/// ~pi_i(p) = d_i(x_i (1 + beta x_{i+1}) p).
MVPolynomial pi_tilde(const MVPolynomial& p, int i);

/// Specialization beta = 0.
MVPolynomial beta_zero(const MVPolynomial& p);

/// Coefficient of beta^k, as a polynomial with integer coefficients.
MVPolynomial beta_part(const MVPolynomial& p, int k);

/// Terms split by adjusted degree |e| - k of x^e beta^k.
std::map<int, MVPolynomial> adjusted_components(const MVPolynomial& p);

/// Sets x_j = 0 for every j > m. The result keeps ambient max(m, 1).
MVPolynomial restrict_vars(const MVPolynomial& p, int m);

/// True when p is unchanged by swap_vars(p, i) for every i < m.
bool is_symmetric(const MVPolynomial& p, int m);

}  // namespace kgroth

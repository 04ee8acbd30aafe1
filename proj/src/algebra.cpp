#include "kgroth/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "kgroth/errors.hpp"

namespace kgroth {

// ---------------------------------------------------------------- BetaScalar

BetaScalar::BetaScalar(long constant) : coeffs_{mpz_class(constant)} { canonicalize(); }

BetaScalar::BetaScalar(mpz_class constant) : coeffs_{std::move(constant)} { canonicalize(); }

BetaScalar BetaScalar::monomial(int beta_power, const mpz_class& coefficient) {
  if (beta_power < 0) throw InputError("negative beta power");
  BetaScalar s;
  s.coeffs_.assign(beta_power + 1, mpz_class(0));
  s.coeffs_[beta_power] = coefficient;
  s.canonicalize();
  return s;
}

BetaScalar BetaScalar::from_coefficients(std::vector<mpz_class> coefficients) {
  BetaScalar s;
  s.coeffs_ = std::move(coefficients);
  s.canonicalize();
  return s;
}

mpz_class BetaScalar::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

void BetaScalar::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BetaScalar& BetaScalar::operator+=(const BetaScalar& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  canonicalize();
  return *this;
}

BetaScalar& BetaScalar::operator-=(const BetaScalar& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  canonicalize();
  return *this;
}

BetaScalar operator*(const BetaScalar& a, const BetaScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BetaScalar::from_coefficients(std::move(out));
}

BetaScalar& BetaScalar::operator*=(const BetaScalar& other) { return *this = *this * other; }

BetaScalar operator-(BetaScalar a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string BetaScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += coeffs_[k].get_str();
      continue;
    }
    if (coeffs_[k] == -1) out += "-";
    else if (coeffs_[k] != 1) out += coeffs_[k].get_str() + "*";
    out += k == 1 ? std::string("b") : "b^" + std::to_string(k);
  }
  return out;
}

// -------------------------------------------------------------- MVPolynomial

namespace {

Exponent padded(const Exponent& e, int m) {
  Exponent out = e;
  if (static_cast<int>(out.size()) < m) out.resize(m, 0);
  return out;
}

}  // namespace

MVPolynomial::MVPolynomial(int ambient) : ambient_(ambient) {
  if (ambient < 1) throw InputError("polynomial ambient must be positive");
}

MVPolynomial MVPolynomial::constant(const BetaScalar& c, int ambient) {
  MVPolynomial p(ambient);
  if (!c.is_zero()) p.terms_.emplace(Exponent(ambient, 0), c);
  return p;
}

MVPolynomial MVPolynomial::monomial(Exponent exponent, const BetaScalar& c) {
  for (int v : exponent) {
    if (v < 0) throw InputError("negative exponent");
  }
  MVPolynomial p(std::max<int>(1, static_cast<int>(exponent.size())));
  p.add_term(std::move(exponent), c);
  return p;
}

MVPolynomial MVPolynomial::variable(int i, int ambient) {
  if (i < 1) throw InputError("variables are indexed from 1");
  Exponent e(std::max(i, ambient), 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

MVPolynomial MVPolynomial::beta() { return constant(BetaScalar::monomial(1)); }

BetaScalar MVPolynomial::coefficient(const Exponent& e) const {
  Exponent key = e;
  while (static_cast<int>(key.size()) > ambient_) {
    if (key.back() != 0) return {};
    key.pop_back();
  }
  key.resize(ambient_, 0);
  auto it = terms_.find(key);
  return it == terms_.end() ? BetaScalar{} : it->second;
}

int MVPolynomial::x_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    best = std::max(best, d);
  }
  return best;
}

int MVPolynomial::beta_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, c.degree());
  return best;
}

int MVPolynomial::support_width() const {
  int width = 0;
  for (const auto& [e, c] : terms_) {
    for (int j = static_cast<int>(e.size()); j > width; --j) {
      if (e[j - 1] != 0) {
        width = j;
        break;
      }
    }
  }
  return width;
}

MVPolynomial MVPolynomial::with_ambient(int m) const {
  if (m == ambient_) return *this;
  if (m < support_width()) throw InputError("with_ambient would truncate a variable");
  MVPolynomial out(m);
  for (const auto& [e, c] : terms_) {
    Exponent key = e;
    key.resize(m, 0);
    out.terms_.emplace(std::move(key), c);
  }
  return out;
}

void MVPolynomial::add_term(Exponent e, const BetaScalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) > ambient_) *this = with_ambient(static_cast<int>(e.size()));
  e.resize(ambient_, 0);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MVPolynomial& MVPolynomial::operator+=(const MVPolynomial& other) {
  if (other.ambient_ > ambient_) *this = with_ambient(other.ambient_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MVPolynomial& MVPolynomial::operator-=(const MVPolynomial& other) {
  if (other.ambient_ > ambient_) *this = with_ambient(other.ambient_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MVPolynomial operator-(const MVPolynomial& a) {
  MVPolynomial out(a.ambient_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

MVPolynomial operator*(const MVPolynomial& a, const MVPolynomial& b) {
  const int m = std::max(a.ambient_, b.ambient_);
  MVPolynomial out(m);
  Exponent e(m, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::fill(e.begin(), e.end(), 0);
      for (std::size_t j = 0; j < ea.size(); ++j) e[j] += ea[j];
      for (std::size_t j = 0; j < eb.size(); ++j) e[j] += eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MVPolynomial operator*(const BetaScalar& c, const MVPolynomial& p) {
  MVPolynomial out(p.ambient_);
  if (c.is_zero()) return out;
  for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
  return out;
}

bool operator==(const MVPolynomial& a, const MVPolynomial& b) {
  if (a.ambient_ == b.ambient_) return a.terms_ == b.terms_;
  if (a.size() != b.size()) return false;
  const int m = std::max(a.ambient_, b.ambient_);
  return a.with_ambient(m).terms_ == b.with_ambient(m).terms_;
}

std::vector<FlatTerm> MVPolynomial::flat_terms() const {
  std::vector<FlatTerm> out;
  for (const auto& [e, c] : terms_) {
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] != 0) out.push_back({static_cast<int>(k), e, coeffs[k]});
    }
  }
  std::sort(out.begin(), out.end(), [](const FlatTerm& x, const FlatTerm& y) {
    if (x.beta != y.beta) return x.beta < y.beta;
    return x.exponent > y.exponent;
  });
  return out;
}

std::string MVPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : flat_terms()) {
    if (!first) out << " + ";
    first = false;
    std::vector<std::string> factors;
    if (t.beta == 1) factors.emplace_back("b");
    else if (t.beta > 1) factors.push_back("b^" + std::to_string(t.beta));
    for (std::size_t j = 0; j < t.exponent.size(); ++j) {
      if (t.exponent[j] == 0) continue;
      std::string f = "x" + std::to_string(j + 1);
      if (t.exponent[j] > 1) f += "^" + std::to_string(t.exponent[j]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << t.coefficient.get_str();
      continue;
    }
    if (t.coefficient == -1) out << "-";
    else if (t.coefficient != 1) out << t.coefficient.get_str() << "*";
    for (std::size_t f = 0; f < factors.size(); ++f) out << (f ? "*" : "") << factors[f];
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_small_int(std::string_view s, std::string_view context) {
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw InputError("bad integer '" + std::string(s) + "' in " + std::string(context));
  }
  return std::stoi(std::string(s));
}

}  // namespace

MVPolynomial MVPolynomial::parse(std::string_view text, int min_ambient) {
  MVPolynomial out(std::max(1, min_ambient));
  text = trim(text);
  if (text.empty()) throw InputError("empty polynomial text");
  if (text == "0") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::string_view term = trim(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
    if (term.empty()) throw InputError("empty term in polynomial text");
    mpz_class coeff = 1;
    if (term.front() == '-') {
      coeff = -1;
      term = trim(term.substr(1));
    }
    int beta = 0;
    Exponent e;
    std::size_t fstart = 0;
    while (fstart <= term.size()) {
      std::size_t star = term.find('*', fstart);
      std::string_view factor =
          trim(term.substr(fstart, star == std::string_view::npos ? term.npos : star - fstart));
      if (factor.empty()) throw InputError("empty factor in term '" + std::string(term) + "'");
      std::string_view base = factor;
      int power = 1;
      if (auto caret = factor.find('^'); caret != std::string_view::npos) {
        base = factor.substr(0, caret);
        power = parse_small_int(factor.substr(caret + 1), factor);
      }
      if (base == "b") {
        beta += power;
      } else if (base.front() == 'x') {
        int var = parse_small_int(base.substr(1), factor);
        if (var < 1) throw InputError("variables are indexed from 1");
        if (static_cast<int>(e.size()) < var) e.resize(var, 0);
        e[var - 1] += power;
      } else {
        mpz_class value;
        if (value.set_str(std::string(base), 10) != 0 || factor != base) {
          throw InputError("bad factor '" + std::string(factor) + "'");
        }
        coeff *= value;
      }
      if (star == std::string_view::npos) break;
      fstart = star + 1;
    }
    out.add_term(std::move(e), BetaScalar::monomial(beta, coeff));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

// ------------------------------------------------------------------ operators

MVPolynomial add(const MVPolynomial& p, const MVPolynomial& q) { return p + q; }

MVPolynomial mul(const MVPolynomial& p, const MVPolynomial& q) { return p * q; }

MVPolynomial swap_vars(const MVPolynomial& p, int i) {
  if (i < 1) throw InputError("swap_vars index must be at least 1");
  const int m = std::max(p.ambient(), i + 1);
  MVPolynomial out(m);
  for (const auto& [e, c] : p.terms()) {
    Exponent s = padded(e, m);
    std::swap(s[i - 1], s[i]);
    out.add_term(std::move(s), c);
  }
  return out;
}

MVPolynomial divided_difference(const MVPolynomial& p, int i) {
  if (i < 1) throw InputError("divided_difference index must be at least 1");
  const int m = std::max(p.ambient(), i + 1);

  // The numerator p - s_i p splits into fibers that share every power outside
  // {i, i+1} and the total D = e_i + e_{i+1}. Within a fiber it is a binary
  // form sum_k c_k x_i^k x_{i+1}^{D-k}, divided by (x_i - x_{i+1}) from the top.
  std::map<Exponent, std::vector<BetaScalar>> fibers;
  for (const auto& [e0, c] : p.terms()) {
    Exponent e = padded(e0, m);
    const int a = e[i - 1];
    const int b = e[i];
    if (a == b) continue;  // contributes c - c
    Exponent key = e;
    key[i - 1] = 0;
    key[i] = a + b;
    auto& row = fibers[key];
    if (row.empty()) row.resize(a + b + 1);
    row[a] += c;
    row[b] -= c;
  }

  MVPolynomial out(m);
  for (auto& [key, row] : fibers) {
    const int total = static_cast<int>(row.size()) - 1;
    BetaScalar quotient;
    for (int k = total; k >= 1; --k) {
      quotient += row[k];
      if (quotient.is_zero()) continue;
      Exponent e = key;
      e[i - 1] = k - 1;
      e[i] = total - k;
      out.add_term(std::move(e), quotient);
    }
    if (!(row[0] + quotient).is_zero()) {
      throw InvariantViolation("divided difference left a nonzero remainder");
    }
  }
  return out;
}

MVPolynomial pi(const MVPolynomial& p, int i) {
  if (i < 1) throw InputError("pi index must be at least 1");
  MVPolynomial factor = MVPolynomial::constant(1, i + 1);
  factor += MVPolynomial::beta() * MVPolynomial::variable(i + 1);
  return divided_difference(factor * p, i);
}

MVPolynomial pi_tilde(const MVPolynomial& p, int i) {
  if (i < 1) throw InputError("pi_tilde index must be at least 1");
  MVPolynomial factor = MVPolynomial::variable(i, i + 1);
  factor += MVPolynomial::beta() * MVPolynomial::variable(i) * MVPolynomial::variable(i + 1);
  return divided_difference(factor * p, i);
}

MVPolynomial beta_zero(const MVPolynomial& p) { return beta_part(p, 0); }

MVPolynomial beta_part(const MVPolynomial& p, int k) {
  MVPolynomial out(p.ambient());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c.coefficient(k));
  return out;
}

std::map<int, MVPolynomial> adjusted_components(const MVPolynomial& p) {
  std::map<int, MVPolynomial> out;
  for (const auto& [e, c] : p.terms()) {
    int degree = 0;
    for (int v : e) degree += v;
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      auto it = out.try_emplace(degree - static_cast<int>(k), p.ambient()).first;
      it->second.add_term(e, BetaScalar::monomial(static_cast<int>(k), coeffs[k]));
    }
  }
  return out;
}

MVPolynomial restrict_vars(const MVPolynomial& p, int m) {
  const int ambient = std::max(m, 1);
  MVPolynomial out(ambient);
  for (const auto& [e, c] : p.terms()) {
    bool survives = true;
    for (std::size_t j = std::max(m, 0); j < e.size(); ++j) {
      if (e[j] != 0) {
        survives = false;
        break;
      }
    }
    if (!survives) continue;
    Exponent key = e;
    key.resize(ambient, 0);
    out.add_term(std::move(key), c);
  }
  return out;
}

bool is_symmetric(const MVPolynomial& p, int m) {
  for (int i = 1; i < m; ++i) {
    if (!(swap_vars(p, i) == p)) return false;
  }
  return true;
}

}  // namespace kgroth

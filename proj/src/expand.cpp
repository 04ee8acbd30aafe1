#include "kgroth/expand.hpp"

#include <algorithm>
#include <numeric>

#include "kgroth/errors.hpp"
#include "kgroth/linsolve.hpp"

namespace kgroth {

std::string basis_name(Basis basis) {
  switch (basis) {
    case Basis::Key:
      return "key";
    case Basis::Lascoux:
      return "lascoux";
    case Basis::Schur:
      return "schur";
  }
  return "";
}

Basis parse_basis(std::string_view text) {
  if (text == "key") return Basis::Key;
  if (text == "lascoux") return Basis::Lascoux;
  if (text == "schur") return Basis::Schur;
  throw InputError("unknown basis '" + std::string(text) + "'");
}

std::string Expansion::to_string() const {
  const char* letter = basis == Basis::Key ? "k" : basis == Basis::Lascoux ? "L" : "s";
  std::string out;
  for (const auto& [index, c] : terms) {
    for (int k = 0; k <= c.degree(); ++k) {
      const mpz_class v = c.coefficient(k);
      if (v == 0) continue;
      if (!out.empty()) out += " + ";
      out += v.get_str() + "·" + letter + "[" + index.to_string() + "]";
      if (k == 1) out += "·b";
      else if (k > 1) out += "·b^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

struct BasisSystem {
  std::map<Exponent, int> row_of;
  std::vector<Composition> columns;
  std::unique_ptr<ExactSolver> solver;
};

namespace {

Exponent padded(const std::vector<int>& entries, int nvars) {
  Exponent e(entries);
  e.resize(nvars, 0);
  return e;
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Terms of beta^k x^e with |e| = d, bucketed by (k, d). Exponents are padded
// or trimmed to nvars; a positive power beyond nvars raises NotInSpanError.
std::map<std::pair<int, int>, std::map<Exponent, mpz_class>> graded_pieces(const MVPolynomial& f, int nvars,
                                                                          const std::string& basis) {
  std::map<std::pair<int, int>, std::map<Exponent, mpz_class>> out;
  for (const auto& t : f.flat_terms()) {
    for (std::size_t j = nvars; j < t.exponent.size(); ++j) {
      if (t.exponent[j] > 0) {
        throw NotInSpanError("beta^" + std::to_string(t.beta) + " piece of degree " +
                             std::to_string(total_degree(t.exponent)) + " uses x" + std::to_string(j + 1) +
                             ", outside the " + basis + " basis in " + std::to_string(nvars) + " variables");
      }
    }
    Exponent e = t.exponent;
    e.resize(nvars, 0);
    out[{t.beta, total_degree(e)}][e] = t.coefficient;
  }
  return out;
}

std::string piece_label(int beta, int degree) {
  return "beta^" + std::to_string(beta) + " piece of x-degree " + std::to_string(degree);
}

}  // namespace

Expander::Expander(FamilyCache& cache) : cache_(cache) {}

Expander::~Expander() = default;

const BasisSystem& Expander::system(Basis basis, int degree, int nvars) {
  std::lock_guard lock(mutex_);
  auto& slot = systems_[{basis, degree, nvars}];
  if (slot) return *slot;

  auto sys = std::make_unique<BasisSystem>();
  std::vector<Composition> indices;
  if (basis == Basis::Schur) {
    for (const auto& lambda : partitions_of(degree, nvars, degree)) indices.emplace_back(lambda.parts());
  } else {
    indices = compositions_of(degree, nvars);
  }
  for (const auto& alpha : indices) sys->row_of.emplace(padded(alpha.entries(), nvars), static_cast<int>(sys->row_of.size()));

  std::vector<SparseVector> columns;
  for (const auto& index : indices) {
    const MVPolynomial p = basis == Basis::Schur ? schur(Partition(index.entries()), nvars) : cache_.key(index);
    SparseVector column;
    for (const auto& [e, c] : p.terms()) {
      const Exponent row = padded(e, nvars);
      auto it = sys->row_of.find(row);
      if (it == sys->row_of.end()) {
        if (basis == Basis::Schur) continue;  // non-dominant monomial
        throw InvariantViolation("key polynomial " + index.to_string() + " leaves its graded piece");
      }
      column[it->second] = mpq_class(c.coefficient(0));
    }
    columns.push_back(std::move(column));
  }
  sys->columns = std::move(indices);
  sys->solver = std::make_unique<ExactSolver>(static_cast<int>(sys->row_of.size()), std::move(columns));
  if (sys->solver->rank() != sys->solver->cols()) {
    throw InvariantViolation(basis_name(basis) + " transition matrix in degree " + std::to_string(degree) +
                             " is rank deficient");
  }
  slot = std::move(sys);
  return *slot;
}

std::map<Composition, mpz_class> Expander::solve_piece(Basis basis, const std::map<Exponent, mpz_class>& piece,
                                                       int degree, int nvars, const std::string& label) {
  const auto& sys = system(basis, degree, nvars);
  SparseVector b;
  for (const auto& [e, c] : piece) {
    auto it = sys.row_of.find(e);
    if (it == sys.row_of.end()) {
      if (basis == Basis::Schur) continue;
      throw NotInSpanError(label + " has a monomial outside the " + basis_name(basis) + " basis");
    }
    b[it->second] = mpq_class(c);
  }
  const auto solution = sys.solver->solve(b);
  if (!solution) {
    throw NotInSpanError(label + " is not in the span of the " + basis_name(basis) + " basis in " +
                         std::to_string(nvars) + " variables");
  }
  std::map<Composition, mpz_class> out;
  for (std::size_t j = 0; j < solution->size(); ++j) {
    const mpq_class& v = (*solution)[j];
    if (v == 0) continue;
    if (v.get_den() != 1) {
      throw InvariantViolation(label + ": non-integral coefficient " + v.get_str() + " on " +
                               sys.columns[j].to_string());
    }
    out.emplace(sys.columns[j], v.get_num());
  }
  return out;
}

Expansion Expander::in_keys(const MVPolynomial& f, int nvars) {
  if (nvars < 1) throw InputError("key expansion needs nvars >= 1");
  Expansion out{Basis::Key, {}};
  for (const auto& [bd, piece] : graded_pieces(f, nvars, "key")) {
    const auto [beta, degree] = bd;
    for (const auto& [alpha, c] : solve_piece(Basis::Key, piece, degree, nvars, piece_label(beta, degree))) {
      out.terms[alpha] += BetaScalar::monomial(beta, c);
    }
  }
  std::erase_if(out.terms, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

Expansion Expander::in_lascoux(const MVPolynomial& f, int nvars) {
  if (nvars < 1) throw InputError("Lascoux expansion needs nvars >= 1");
  Expansion out{Basis::Lascoux, {}};
  if (f.is_zero()) return out;
  const auto components = adjusted_components(f);
  if (components.size() != 1) throw InputError("Lascoux expansion needs an adjusted-homogeneous polynomial");
  const int g = components.begin()->first;
  MVPolynomial rest = f;
  for (int k = 0; !rest.is_zero() && k <= rest.x_degree() - g; ++k) {
    std::map<Exponent, mpz_class> piece;
    for (const auto& t : rest.flat_terms()) {
      if (t.beta != k) continue;
      for (std::size_t j = nvars; j < t.exponent.size(); ++j) {
        if (t.exponent[j] > 0) throw NotInSpanError(piece_label(k, g + k) + " uses x" + std::to_string(j + 1));
      }
      if (total_degree(t.exponent) != g + k) throw InvariantViolation("remainder left its adjusted degree");
      piece[padded(t.exponent, nvars)] = t.coefficient;
    }
    if (piece.empty()) continue;
    for (const auto& [alpha, c] : solve_piece(Basis::Key, piece, g + k, nvars, piece_label(k, g + k))) {
      const BetaScalar coefficient = BetaScalar::monomial(k, c);
      out.terms[alpha] += coefficient;
      rest -= coefficient * cache_.lascoux(alpha);
    }
  }
  if (!rest.is_zero()) {
    throw NotInSpanError("Lascoux expansion leaves a remainder: " + rest.to_string());
  }
  std::erase_if(out.terms, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

Expansion Expander::in_schur(const MVPolynomial& f, int m) {
  if (m < 1) throw InputError("Schur expansion needs m >= 1");
  if (f.support_width() > m) throw InputError("Schur expansion: polynomial uses variables beyond x" + std::to_string(m));
  if (!is_symmetric(f, m)) throw InputError("Schur expansion: polynomial is not symmetric in x1..x" + std::to_string(m));
  Expansion out{Basis::Schur, {}};
  for (const auto& [bd, piece] : graded_pieces(f, m, "schur")) {
    const auto [beta, degree] = bd;
    for (const auto& [lambda, c] : solve_piece(Basis::Schur, piece, degree, m, piece_label(beta, degree))) {
      out.terms[lambda] += BetaScalar::monomial(beta, c);
    }
  }
  std::erase_if(out.terms, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

MVPolynomial reconstruct(const Expansion& e, int nvars, FamilyCache& cache) {
  MVPolynomial out(std::max(1, nvars));
  for (const auto& [index, c] : e.terms) {
    switch (e.basis) {
      case Basis::Key:
        out += c * cache.key(index);
        break;
      case Basis::Lascoux:
        out += c * cache.lascoux(index);
        break;
      case Basis::Schur:
        out += c * schur(Partition(index.entries()), nvars);
        break;
    }
  }
  return out;
}

Expansion expand_in_keys(const MVPolynomial& f, int nvars, FamilyCache& cache) {
  return Expander(cache).in_keys(f, nvars);
}

Expansion expand_in_lascoux(const MVPolynomial& f, int nvars, FamilyCache& cache) {
  return Expander(cache).in_lascoux(f, nvars);
}

Expansion expand_in_schur(const MVPolynomial& f, int m, FamilyCache& cache) {
  return Expander(cache).in_schur(f, m);
}

}  // namespace kgroth

#include "kgroth/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "kgroth/errors.hpp"
#include "kgroth/kjdt.hpp"

namespace kgroth {

namespace {

std::string population_of(int n) { return "S_" + std::to_string(n); }

MVPolynomial beta_power_times(int k, long count, const MVPolynomial& p) {
  return BetaScalar::monomial(k, count) * p;
}

}  // namespace

MVPolynomial conjecture_rhs(const Permutation& w, FamilyCache& cache) {
  const int length = coxeter_length(w);
  std::map<std::pair<Composition, int>, long> counts;
  for (const auto& p : conjecture_tableaux(w)) ++counts[{left_key_content(p), p.size() - length}];
  MVPolynomial rhs(std::max(1, w.size() - 1));
  for (const auto& [term, count] : counts) rhs += beta_power_times(term.second, count, cache.lascoux(term.first));
  return rhs;
}

ConjectureReport check_conjecture(const Permutation& w, FamilyCache& cache) {
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.w = w;
  const int length = coxeter_length(w);
  std::map<std::pair<Composition, int>, long> counts;
  for (const auto& p : conjecture_tableaux(w)) {
    ConjectureTerm term;
    term.tableau = p;
    term.left_key = left_key(p);
    term.shape = p.shape();
    term.content = content(term.left_key);
    term.beta_power = p.size() - length;
    ++counts[{term.content, term.beta_power}];
    report.terms.push_back(std::move(term));
  }
  MVPolynomial rhs(std::max(1, w.size() - 1));
  for (const auto& [term, count] : counts) rhs += beta_power_times(term.second, count, cache.lascoux(term.first));
  const MVPolynomial& lhs = cache.grothendieck(w);
  report.lhs_equals_rhs = lhs == rhs;
  report.holds = report.lhs_equals_rhs;
  if (!report.holds) {
    report.lhs = lhs;
    report.rhs = std::move(rhs);
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ConjectureReport> check_all(int n, int parallelism, FamilyCache& cache, const ReportSink& sink) {
  if (n < 1) throw InputError("check_all needs n >= 1");
  const auto perms = all_permutations(n);
  const std::size_t total = perms.size();
  std::vector<std::optional<ConjectureReport>> slots(total);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::condition_variable ready;
  std::exception_ptr error;

  auto worker = [&] {
    while (!stop) {
      const std::size_t k = next++;
      if (k >= total) break;
      try {
        auto report = check_conjecture(perms[k], cache);
        std::lock_guard lock(mutex);
        slots[k] = std::move(report);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
      ready.notify_all();
    }
  };

  const int threads = static_cast<int>(std::clamp<std::size_t>(std::max(parallelism, 1), 1, total));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  std::vector<ConjectureReport> out;
  out.reserve(total);
  std::exception_ptr sink_error;
  for (std::size_t k = 0; k < total; ++k) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return slots[k].has_value() || error != nullptr; });
    if (!slots[k]) break;
    out.push_back(std::move(*slots[k]));
    slots[k].reset();
    lock.unlock();
    if (sink) {
      try {
        sink(out.back());
      } catch (...) {
        sink_error = std::current_exception();
        stop = true;
        break;
      }
    }
  }
  for (auto& t : pool) t.join();
  if (sink_error) std::rethrow_exception(sink_error);
  if (error) std::rethrow_exception(error);
  return out;
}

SuiteReport summarize_conjecture(const std::vector<ConjectureReport>& reports, const std::string& population) {
  SuiteReport suite{"conjecture", population, reports.size(), {}};
  for (const auto& r : reports) {
    if (!r.holds) suite.failures.push_back(r.w.to_string());
  }
  return suite;
}

SuiteReport suite_fk(int n, FamilyCache& cache) { return suite_fk(all_permutations(n), population_of(n), cache); }

SuiteReport suite_fk(const std::vector<Permutation>& population, const std::string& description, FamilyCache& cache) {
  SuiteReport suite{"fk", description, 0, {}};
  for (const auto& w : population) {
    ++suite.checked;
    if (cache.grothendieck(w) != groth_compatible(w)) suite.failures.push_back(w.to_string());
  }
  return suite;
}

SuiteReport suite_schub_to_key(int n, FamilyCache& cache) {
  return suite_schub_to_key(all_permutations(n), population_of(n), cache);
}

SuiteReport suite_schub_to_key(const std::vector<Permutation>& population, const std::string& description,
                               FamilyCache& cache) {
  SuiteReport suite{"schub-key", description, 0, {}};
  for (const auto& w : population) {
    ++suite.checked;
    MVPolynomial rhs(std::max(1, w.size() - 1));
    for (const auto& p : reduced_word_tableaux(w)) rhs += cache.key(left_key_content(p));
    if (schubert(w, cache) != rhs) suite.failures.push_back(w.to_string());
  }
  return suite;
}

SuiteReport suite_bksty(int n, int m) { return suite_bksty(all_permutations(n), population_of(n), m); }

SuiteReport suite_bksty(const std::vector<Permutation>& population, const std::string& description, int m) {
  SuiteReport suite{"bksty", description + ", m=" + std::to_string(m), 0, {}};
  std::map<Partition, MVPolynomial> g;
  for (const auto& w : population) {
    ++suite.checked;
    const int length = coxeter_length(w);
    std::map<Partition, long> b;
    for (const auto& p : conjecture_tableaux(w)) ++b[p.shape()];
    MVPolynomial rhs(m);
    for (const auto& [lambda, count] : b) {
      auto it = g.find(lambda);
      if (it == g.end()) it = g.emplace(lambda, buch_G(lambda, m)).first;
      rhs += beta_power_times(lambda.size() - length, count, it->second);
    }
    if (stable_groth(w, m) != rhs) suite.failures.push_back(w.to_string());
  }
  return suite;
}

SuiteReport suite_fg(const Permutation& w, int m) {
  SuiteReport suite{"fg", "w=" + w.to_string() + ", m=" + std::to_string(m), 1, {}};
  const int length = coxeter_length(w);
  std::map<Partition, long> d;
  for (const auto& p : row_strict_hecke_tableaux(w, m)) ++d[p.shape()];
  MVPolynomial rhs(m);
  for (const auto& [lambda, count] : d) rhs += beta_power_times(lambda.size() - length, count, schur(lambda, m));
  if (stable_groth(w, m) != rhs) suite.failures.push_back(w.to_string());
  return suite;
}

SuiteReport suite_fg_all(int n, int m) { return suite_fg(all_permutations(n), population_of(n), m); }

SuiteReport suite_fg(const std::vector<Permutation>& population, const std::string& description, int m) {
  SuiteReport suite{"fg", description + ", m=" + std::to_string(m), 0, {}};
  for (const auto& w : population) {
    auto one = suite_fg(w, m);
    suite.checked += one.checked;
    suite.failures.insert(suite.failures.end(), one.failures.begin(), one.failures.end());
  }
  return suite;
}

Expansion conjecture_expansion(const Permutation& w) {
  const int length = coxeter_length(w);
  Expansion out{Basis::Lascoux, {}};
  for (const auto& p : conjecture_tableaux(w)) out.terms[left_key_content(p)] += BetaScalar::monomial(p.size() - length);
  return out;
}

SuiteReport suite_oracle(const std::vector<Permutation>& population, const std::string& description,
                         FamilyCache& cache, Expander& expander) {
  SuiteReport suite{"oracle", description, 0, {}};
  for (const auto& w : population) {
    ++suite.checked;
    const auto solved = expander.in_lascoux(cache.grothendieck(w), std::max(1, w.size() - 1));
    bool nonnegative = true;
    for (const auto& [alpha, c] : solved.terms) {
      for (const auto& v : c.coefficients()) nonnegative = nonnegative && v >= 0;
    }
    if (!nonnegative) suite.failures.push_back(w.to_string() + ": negative coefficient in " + solved.to_string());
    else if (solved != conjecture_expansion(w)) suite.failures.push_back(w.to_string() + ": " + solved.to_string());
  }
  return suite;
}

Expansion warning_example(FamilyCache& cache, Expander& expander) {
  return expander.in_keys(cache.lascoux(Composition({1, 0, 2, 1})), 4);
}

}  // namespace kgroth

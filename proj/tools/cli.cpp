#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "kgroth/errors.hpp"
#include "kgroth/expand.hpp"
#include "kgroth/families.hpp"
#include "kgroth/kjdt.hpp"
#include "kgroth/serialize.hpp"
#include "kgroth/tableaux.hpp"
#include "kgroth/verify.hpp"

namespace kgroth {

namespace {

constexpr int kDefaultCeiling = 7;

struct Options {
  std::string format;
  std::string cache_path;
  std::string positional;
  std::string w;
  std::string alpha;
  int n = 0;
  int vars = 0;
  int jobs = 1;
  std::string suite = "conjecture";
  bool allow_large = false;
  bool timing = false;
  bool reduced = false;
  bool trace = false;
  std::string shape;
  int max_entry = 0;
  std::string kind = "increasing";
  std::string groth_sel;
  std::string lascoux_sel;
  std::string key_sel;
  std::string stable_sel;
  std::string basis;
};

bool json_format(const Options& opt, bool json_default) {
  if (opt.format.empty()) return json_default;
  return opt.format == "json";
}

// Exactly one of the positional argument and --w / --alpha.
std::string selector(const std::string& positional, const std::string& flag, const char* what) {
  if (!positional.empty() && !flag.empty()) throw InputError(std::string("give the ") + what + " once, not twice");
  if (positional.empty() && flag.empty()) throw InputError(std::string("missing ") + what);
  return positional.empty() ? flag : positional;
}

std::string cache_path(const Options& opt) {
  if (const char* env = std::getenv("KGROTH_CACHE"); env && *env) return env;
  return opt.cache_path;
}

void print_polynomial(const MVPolynomial& p, const Options& opt, std::ostream& out) {
  if (json_format(opt, false)) out << polynomial_to_json(p).dump() << '\n';
  else out << p.to_string() << '\n';
}

void print_expansion(const Expansion& e, const Options& opt, std::ostream& out) {
  if (json_format(opt, false)) out << expansion_to_json(e).dump() << '\n';
  else out << e.to_string() << '\n';
}

// Cell-level diagnostic for a filling that is not increasing.
std::string increasing_diagnostic(const Tableau& t) {
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < static_cast<int>(t.rows()[r].size()); ++c) {
      const int v = t.at(r, c);
      const std::string cell = "cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")=" + std::to_string(v);
      if (c > 0 && t.at(r, c - 1) >= v) return cell + " is not greater than its left neighbour";
      if (r > 0 && t.at(r - 1, c) >= v) return cell + " is not greater than the entry above it";
    }
  }
  return "filling is not increasing";
}

std::string text_term(const ConjectureTerm& t) {
  const std::string tableau = t.tableau.empty() ? std::string("(empty)") : t.tableau.to_string();
  std::string s = "  " + tableau + "  key=" + t.left_key.to_string() + "  content=" + t.content.to_string();
  if (t.beta_power > 0) s += "  b^" + std::to_string(t.beta_power);
  return s;
}

void print_report(const ConjectureReport& r, const Options& opt, std::ostream& out) {
  if (json_format(opt, true)) {
    out << report_to_json(r, opt.timing).dump() << '\n';
  } else {
    out << r.w.to_string() << (r.holds ? " holds" : " FAILS") << ", " << r.terms.size()
        << (r.terms.size() == 1 ? " term" : " terms");
    if (opt.timing) out << " (" << r.elapsed_ms << " ms)";
    out << '\n';
    for (const auto& t : r.terms) out << text_term(t) << '\n';
    if (!r.holds) {
      out << "  lhs: " << (r.lhs ? r.lhs->to_string() : "") << '\n';
      out << "  rhs: " << (r.rhs ? r.rhs->to_string() : "") << '\n';
    }
  }
  out.flush();
}

void print_suite(const SuiteReport& s, const Options& opt, std::ostream& out) {
  if (json_format(opt, true)) {
    out << suite_to_json(s).dump() << '\n';
  } else {
    out << s.suite << " " << s.population << ": " << (s.passed() ? "passed" : "FAILED") << " (" << s.checked
        << " checked)";
    if (!s.passed()) {
      out << ":";
      for (const auto& f : s.failures) out << " " << f;
    }
    out << '\n';
  }
  out.flush();
}

int cmd_left_key(const Options& opt, std::ostream& out) {
  const Tableau p = Tableau::parse(selector(opt.positional, "", "tableau"));
  if (!p.is_increasing()) throw InputError("not an increasing tableau: " + increasing_diagnostic(p));
  const Tableau k = left_key(p);
  if (opt.trace) {
    for (int cols = 2; cols <= p.num_cols(); ++cols) {
      Json states = Json::array();
      for (const auto& state : rev_krect_trace(SlideState::from_tableau(p.leading_columns(cols), p.num_rows(), cols))) {
        states.push_back(slide_state_to_json(state));
      }
      out << Json{{"columns", cols}, {"trace", std::move(states)}}.dump() << '\n';
    }
  }
  if (json_format(opt, false)) {
    out << Json{{"tableau", tableau_to_json(p)}, {"key", tableau_to_json(k)}, {"content", content(k).entries()}}.dump()
        << '\n';
  } else {
    out << "key: " << k.to_string() << '\n' << "content: " << content(k).to_string() << '\n';
  }
  return 0;
}

int cmd_tableaux(const Options& opt, std::ostream& out) {
  const bool json = json_format(opt, false);
  if (!opt.w.empty() || !opt.positional.empty()) {
    if (!opt.shape.empty()) throw InputError("--shape and a permutation are mutually exclusive");
    const auto w = Permutation::parse(selector(opt.positional, opt.w, "permutation"));
    const int length = coxeter_length(w);
    for (const auto& p : opt.reduced ? reduced_word_tableaux(w) : conjecture_tableaux(w)) {
      ConjectureTerm t{p, left_key(p), p.shape(), {}, p.size() - length};
      t.content = content(t.left_key);
      if (json) {
        out << Json{{"tableau", p.to_string()},
                    {"shape", t.shape.parts()},
                    {"word", word_of(p)},
                    {"key", t.left_key.to_string()},
                    {"content", t.content.entries()},
                    {"beta_power", t.beta_power}}
                   .dump()
            << '\n';
      } else {
        out << text_term(t).substr(2) << '\n';
      }
    }
    return 0;
  }
  if (opt.shape.empty()) throw InputError("tableaux needs a permutation or --shape");
  if (opt.max_entry < 1) throw InputError("tableaux --shape needs --max >= 1");
  const Partition shape = Partition::parse(opt.shape);
  auto emit = [&](const std::string& text) {
    if (json) out << Json{{"tableau", text}}.dump() << '\n';
    else out << text << '\n';
  };
  if (opt.kind == "increasing") {
    for (const auto& t : enumerate_increasing(shape, opt.max_entry)) emit(t.to_string());
  } else if (opt.kind == "semistandard") {
    for (const auto& t : enumerate_semistandard(shape, opt.max_entry)) emit(t.to_string());
  } else if (opt.kind == "row-strict") {
    for (const auto& t : enumerate_row_strict(shape, opt.max_entry)) emit(t.to_string());
  } else if (opt.kind == "set-valued") {
    for (const auto& t : enumerate_set_valued(shape, opt.max_entry)) emit(t.to_string());
  } else {
    throw InputError("unknown tableau kind '" + opt.kind + "'");
  }
  return 0;
}

int cmd_expand(const Options& opt, FamilyCache& cache, std::ostream& out) {
  const int chosen = !opt.groth_sel.empty() + !opt.lascoux_sel.empty() + !opt.key_sel.empty() + !opt.stable_sel.empty();
  if (chosen != 1) throw InputError("expand needs exactly one of --groth, --lascoux, --key, --stable");
  if (opt.basis.empty()) throw InputError("expand needs --basis key|lascoux|schur");
  const Basis basis = parse_basis(opt.basis);

  MVPolynomial f;
  int nvars = 0;
  if (!opt.groth_sel.empty()) {
    const auto w = Permutation::parse(opt.groth_sel);
    f = cache.grothendieck(w);
    nvars = std::max(1, w.size() - 1);
  } else if (!opt.lascoux_sel.empty()) {
    const auto alpha = Composition::parse(opt.lascoux_sel);
    f = cache.lascoux(alpha);
    nvars = std::max(1, alpha.length());
  } else if (!opt.key_sel.empty()) {
    const auto alpha = Composition::parse(opt.key_sel);
    f = cache.key(alpha);
    nvars = std::max(1, alpha.length());
  } else {
    const auto w = Permutation::parse(opt.stable_sel);
    nvars = opt.vars > 0 ? opt.vars : std::max(1, w.size());
    f = stable_groth(w, nvars);
  }
  if (opt.vars > 0) nvars = opt.vars;

  Expander expander(cache);
  switch (basis) {
    case Basis::Key:
      print_expansion(expander.in_keys(f, nvars), opt, out);
      break;
    case Basis::Lascoux:
      print_expansion(expander.in_lascoux(f, nvars), opt, out);
      break;
    case Basis::Schur:
      print_expansion(expander.in_schur(f, nvars), opt, out);
      break;
  }
  return 0;
}

int cmd_warning(const Options& opt, FamilyCache& cache, std::ostream& out) {
  Expander expander(cache);
  const Expansion e = warning_example(cache, expander);
  SuiteReport suite{"warning", "lascoux 1,0,2,1 in keys", 1, {}};
  auto expect = [&](const std::vector<int>& index, int beta, long value) {
    const auto it = e.terms.find(Composition(index));
    const mpz_class got = it == e.terms.end() ? mpz_class(0) : it->second.coefficient(beta);
    if (got != value) {
      suite.failures.push_back("k[" + join_ints(index) + "] at b^" + std::to_string(beta) + ": expected " +
                               std::to_string(value) + ", got " + got.get_str());
    }
  };
  expect({1, 0, 2, 1}, 0, 1);
  expect({1, 1, 2, 1}, 1, 2);
  expect({2, 0, 2, 1}, 1, 1);
  expect({1, 2, 2}, 1, 1);
  expect({2, 1, 2}, 1, -1);

  const bool json = json_format(opt, true);
  if (json) out << Json{{"lascoux", std::vector<int>{1, 0, 2, 1}}, {"expansion", expansion_to_json(e)}}.dump() << '\n';
  else out << "L[1,0,2,1] = " << e.to_string() << '\n';
  for (const auto& [index, c] : e.terms) {
    for (int k = 0; k <= c.degree(); ++k) {
      const mpz_class v = c.coefficient(k);
      if (v >= 0) continue;
      if (json) {
        out << Json{{"negative_coefficient", {{"index", index.entries()}, {"beta", k}, {"c", v.get_str()}}}}.dump()
            << '\n';
      } else {
        Expansion single{Basis::Key, {{index, BetaScalar::monomial(k, v)}}};
        out << "negative: " << single.to_string() << '\n';
      }
    }
  }
  print_suite(suite, opt, out);
  return suite.passed() ? 0 : 1;
}

int cmd_verify(const Options& opt, FamilyCache& cache, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kSuites{"conjecture", "fk", "schub-key", "bksty", "fg", "oracle", "warning", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), opt.suite) == kSuites.end()) {
    throw InputError("unknown suite '" + opt.suite + "'");
  }
  if (opt.suite == "warning") return cmd_warning(opt, cache, out);
  if (opt.jobs < 1) throw InputError("--jobs must be at least 1");

  const bool by_n = opt.n > 0;
  const bool by_w = !opt.w.empty() || !opt.positional.empty();
  if (by_n == by_w) throw InputError("verify needs exactly one of --n and --w");
  std::optional<Permutation> single;
  if (by_w) single = Permutation::parse(selector(opt.positional, opt.w, "permutation"));
  const int n = by_n ? opt.n : single->size();
  if (n > kDefaultCeiling && !opt.allow_large) {
    throw InputError("n=" + std::to_string(n) + " exceeds the ceiling of " + std::to_string(kDefaultCeiling) +
                     "; pass --allow-large to run it anyway");
  }
  const std::vector<Permutation> population = by_n ? all_permutations(n) : std::vector<Permutation>{*single};
  const std::string description = by_n ? "S_" + std::to_string(n) : "w=" + single->to_string();

  std::vector<SuiteReport> results;
  const bool all = opt.suite == "all";
  const auto start = std::chrono::steady_clock::now();

  if (all || opt.suite == "conjecture") {
    std::vector<ConjectureReport> reports;
    if (by_n) {
      std::size_t done = 0;
      const std::size_t total = population.size();
      reports = check_all(n, opt.jobs, cache, [&](const ConjectureReport& r) {
        print_report(r, opt, out);
        ++done;
        if (total >= 720 && done % (total / 10) == 0) err << "kgroth: " << done << "/" << total << " checked\n";
      });
    } else {
      reports.push_back(check_conjecture(*single, cache));
      print_report(reports.back(), opt, out);
    }
    results.push_back(summarize_conjecture(reports, description));
  }
  if (all || opt.suite == "fk") results.push_back(suite_fk(population, description, cache));
  if (all || opt.suite == "schub-key") results.push_back(suite_schub_to_key(population, description, cache));
  if (all || opt.suite == "bksty") results.push_back(suite_bksty(population, description, opt.vars > 0 ? opt.vars : 3));
  if (all || opt.suite == "fg") results.push_back(suite_fg(population, description, opt.vars > 0 ? opt.vars : n));
  if (all || opt.suite == "oracle") {
    Expander expander(cache);
    results.push_back(suite_oracle(population, description, cache, expander));
  }

  bool passed = true;
  if (all) {
    SuiteReport total{"all", description, 0, {}};
    for (const auto& s : results) {
      print_suite(s, opt, out);
      total.checked += s.checked;
      for (const auto& f : s.failures) total.failures.push_back(s.suite + ": " + f);
    }
    print_suite(total, opt, out);
    passed = total.passed();
  } else {
    print_suite(results.front(), opt, out);
    passed = results.front().passed();
  }
  if (opt.timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "kgroth: " << opt.suite << " " << description << " in " << ms << " ms\n";
  }
  return passed ? 0 : 1;
}

int cmd_cache_info(const Options& opt, std::ostream& out) {
  const std::string path = cache_path(opt);
  if (path.empty()) throw InputError("cache-info needs --cache or KGROTH_CACHE");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read cache file " + path);
  FamilyCache cache;
  cache.load(in);
  if (json_format(opt, false)) {
    out << Json{{"path", path}, {"groth", cache.groth_entries()}, {"lascoux", cache.lascoux_entries()}}.dump() << '\n';
  } else {
    out << "path: " << path << '\n'
        << "groth: " << cache.groth_entries() << '\n'
        << "lascoux: " << cache.lascoux_entries() << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck-to-Lascoux expansions: compute, expand, verify", "kgroth"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::string> formats{"text", "json"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--cache", opt.cache_path, "Memo cache file (JSON lines)");
  };

  auto* groth = app.add_subcommand("groth", "beta-Grothendieck polynomial of a permutation");
  auto* schub = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  for (auto* sub : {groth, schub}) {
    sub->add_option("PERM", opt.positional, "Permutation, e.g. 31524 or 3,1,5,2,4");
    sub->add_option("--w", opt.w, "Permutation");
    common(sub);
  }
  auto* lascoux = app.add_subcommand("lascoux", "beta-Lascoux polynomial of a weak composition");
  auto* key = app.add_subcommand("key", "Key polynomial of a weak composition");
  for (auto* sub : {lascoux, key}) {
    sub->add_option("ALPHA", opt.positional, "Weak composition, e.g. 1,0,2,1");
    sub->add_option("--alpha", opt.alpha, "Weak composition");
    common(sub);
  }
  auto* lkey = app.add_subcommand("left-key", "Left key of an increasing tableau");
  lkey->add_option("TABLEAU", opt.positional, "Rows separated by '/', entries by ',', e.g. 1,2/2")->required();
  lkey->add_flag("--trace", opt.trace, "Print each reverse rectification as JSON lines");
  common(lkey);

  auto* tabs = app.add_subcommand("tableaux", "Conjecture tableaux of a permutation, or all fillings of a shape");
  tabs->add_option("PERM", opt.positional, "Permutation");
  tabs->add_option("--w", opt.w, "Permutation");
  tabs->add_flag("--reduced", opt.reduced, "Only tableaux whose word is reduced");
  tabs->add_option("--shape", opt.shape, "Partition, e.g. 2,1");
  tabs->add_option("--max", opt.max_entry, "Largest entry");
  tabs->add_option("--kind", opt.kind, "increasing | semistandard | row-strict | set-valued");
  common(tabs);

  auto* expand = app.add_subcommand("expand", "Expand a polynomial in the key, Lascoux or Schur basis");
  expand->add_option("--groth", opt.groth_sel, "Grothendieck polynomial of this permutation");
  expand->add_option("--lascoux", opt.lascoux_sel, "Lascoux polynomial of this composition");
  expand->add_option("--key", opt.key_sel, "Key polynomial of this composition");
  expand->add_option("--stable", opt.stable_sel, "Stable Grothendieck polynomial of this permutation");
  expand->add_option("--basis", opt.basis, "key | lascoux | schur");
  expand->add_option("--vars", opt.vars, "Number of variables");
  common(expand);

  auto* verify = app.add_subcommand("verify", "Check the conjecture and the theorem suites");
  verify->add_option("--n", opt.n, "Check every permutation of S_n");
  verify->add_option("--w", opt.w, "Check one permutation");
  verify->add_option("--suite", opt.suite, "conjecture | fk | schub-key | bksty | fg | oracle | warning | all");
  verify->add_option("--jobs", opt.jobs, "Worker threads");
  verify->add_option("--vars", opt.vars, "Variables for the stable suites");
  verify->add_flag("--allow-large", opt.allow_large, "Lift the n <= 7 ceiling");
  verify->add_flag("--timing", opt.timing, "Include elapsed times");
  common(verify);

  auto* info = app.add_subcommand("cache-info", "Summarize a cache file");
  common(info);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    FamilyCache cache;
    const std::string path = cache_path(opt);
    const bool uses_cache = !info->parsed() && !lkey->parsed() && !tabs->parsed();
    if (uses_cache && !path.empty()) cache.load_file(path);

    int code = 0;
    if (groth->parsed()) {
      print_polynomial(cache.grothendieck(Permutation::parse(selector(opt.positional, opt.w, "permutation"))), opt, out);
    } else if (schub->parsed()) {
      print_polynomial(schubert(Permutation::parse(selector(opt.positional, opt.w, "permutation")), cache), opt, out);
    } else if (lascoux->parsed()) {
      print_polynomial(cache.lascoux(Composition::parse(selector(opt.positional, opt.alpha, "composition"))), opt, out);
    } else if (key->parsed()) {
      print_polynomial(cache.key(Composition::parse(selector(opt.positional, opt.alpha, "composition"))), opt, out);
    } else if (lkey->parsed()) {
      code = cmd_left_key(opt, out);
    } else if (tabs->parsed()) {
      code = cmd_tableaux(opt, out);
    } else if (expand->parsed()) {
      code = cmd_expand(opt, cache, out);
    } else if (verify->parsed()) {
      code = cmd_verify(opt, cache, out, err);
    } else if (info->parsed()) {
      code = cmd_cache_info(opt, out);
    }
    if (uses_cache && !path.empty()) cache.save_file(path);
    return code;
  } catch (const StructuralError& e) {
    err << "error: " << e.what();
    for (const auto& [r, c] : e.cells()) err << " (" << r + 1 << "," << c + 1 << ")";
    err << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotInSpanError& e) {
    err << "not in span: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace kgroth

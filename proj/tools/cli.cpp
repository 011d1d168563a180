#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylcyc/bernoulli.hpp"
#include "weylcyc/errors.hpp"
#include "weylcyc/generators.hpp"
#include "weylcyc/integrate.hpp"
#include "weylcyc/lie.hpp"
#include "weylcyc/limits.hpp"
#include "weylcyc/parse.hpp"
#include "weylcyc/suites.hpp"

namespace weylcyc::cli {
namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string format = "text";
  long long degree_cap = 0;
  long long expansion_cap = 0;
  int chamber_cap = 0;
};

void apply_caps(const Common& c) {
  Limits l = limits_from_environment(Limits{});
  if (c.degree_cap > 0) l.degree_cap = static_cast<int>(c.degree_cap);
  if (c.expansion_cap > 0) l.expansion_cap = static_cast<std::size_t>(c.expansion_cap);
  if (c.chamber_cap > 0) l.chamber_cap = c.chamber_cap;
  set_limits(l);
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--degree-cap", c.degree_cap, "max total degree of intermediate polynomials")->check(CLI::PositiveNumber);
  sub->add_option("--expansion-cap", c.expansion_cap, "max derivative plans per evaluation")->check(CLI::PositiveNumber);
  sub->add_option("--chamber-cap", c.chamber_cap, "max variables in a cube integral")->check(CLI::PositiveNumber);
}

// ------------------------------------------------------------ eval-tau

struct EvalArgs {
  int n = 1, r = 1, k = -1;
  std::string chain, file;
};

// Derivation plans behind τ_2n on every monomial word of a scalar chain.
std::size_t count_plans(const TauCocycle& tau, const Chain<WeylPoly>& c) {
  std::size_t total = 0;
  for (const auto& [w, coef] : c.terms()) {
    std::vector<Monomial> word(w.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == w.size()) {
        total += tau.plans(word).size();
        return;
      }
      for (const auto& [m, c2] : w[i].terms()) {
        word[i] = m;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return total;
}

std::vector<std::string> chain_inputs(const EvalArgs& a) {
  std::vector<std::string> out;
  if (!a.chain.empty()) out.push_back(a.chain);
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw InvalidArgument("cannot read chain file '" + a.file + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out.push_back(line);
    }
  }
  if (out.empty()) throw InvalidArgument("eval-tau needs --chain or --file");
  return out;
}

int cmd_eval(const EvalArgs& a, const Common& c, std::ostream& out) {
  if (a.n < 1 || a.n > kMaxRank) throw InvalidArgument("--n must lie in 1.." + std::to_string(kMaxRank));
  if (a.r < 1) throw InvalidArgument("--r must be positive");
  const int k = a.k < 0 ? a.n : a.k;
  if (k > a.n) throw InvalidArgument("--k must lie in 0..n");

  json results = json::array();
  for (const auto& text : chain_inputs(a)) {
    json entry;
    entry["chain"] = text;
    Rational value;
    if (a.r == 1) {
      const auto chain = parse_chain(text, a.n);
      if (k == a.n) {
        const auto& tau = tau_cocycle(a.n);
        value = tau.cochain()(chain);
        entry["plans"] = count_plans(tau, chain);
      } else {
        value = TauFamily<WeylPoly>(a.n, 1).component(k)(chain);
      }
      if (k == a.n) {
        std::vector<WeylPoly> vs;
        for (int j = 1; j <= a.n; ++j) {
          vs.push_back(WeylPoly::p(a.n, j));
          vs.push_back(WeylPoly::q(a.n, j));
        }
        if (chain == wedge_embed(WeylPoly::constant(a.n, 1), vs)) {
          const Rational stated = factorial(2 * a.n);
          entry["pairing"] = {{"stated_value", to_string(stated)},
                              {"ratio", to_string(Rational(value / stated))},
                              {"mismatch", value != stated}};
        }
      }
    } else {
      const auto chain = parse_matrix_chain(text, a.n, a.r);
      value = matrix_tau_family(a.n, a.r).component(k)(chain);
    }
    entry["value"] = to_string(value);
    results.push_back(std::move(entry));
  }

  if (c.format == "json") {
    json j;
    j["command"] = "eval-tau";
    j["n"] = a.n;
    j["r"] = a.r;
    j["k"] = k;
    j["results"] = results;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& e : results) {
      out << e["value"].get<std::string>();
      if (e.contains("plans")) out << "  plans " << e["plans"].get<std::size_t>();
      out << "\n";
      if (e.contains("pairing"))
        out << "  pairing with 1 (x) p1^q1^..: stated " << e["pairing"]["stated_value"].get<std::string>() << ", ratio "
            << e["pairing"]["ratio"].get<std::string>() << (e["pairing"]["mismatch"].get<bool>() ? " (mismatch)" : "")
            << "\n";
    }
  }
  return kPass;
}

// ------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, const SuiteConfig& cfg, const Common& c, std::ostream& out) {
  const auto rep = run_suite(suite, cfg);
  if (c.format == "json") {
    out << rep.to_json().dump(2) << "\n";
  } else {
    out << rep.to_text();
  }
  return rep.passed() ? kPass : kIdentityFailure;
}

// ------------------------------------------------------------ table

struct TableArgs {
  std::string kind;
  int size = 4;
  int n = 2;
  std::uint64_t seed = 20240601;
  std::string matrix;
};

QMatrix parse_rows(const std::string& text) {
  // "a,b;c,d"
  std::vector<std::vector<Rational>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Rational> vals;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) vals.push_back(parse_rational(cell));
    rows.push_back(std::move(vals));
  }
  const int n = static_cast<int>(rows.size());
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw InvalidArgument("--matrix must be square, rows separated by ';'");
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  if (n < 1 || n > kMaxRank) throw InvalidArgument("--matrix size must lie in 1.." + std::to_string(kMaxRank));
  return m;
}

int cmd_table(const TableArgs& a, const Common& c, std::ostream& out) {
  if (a.size < 0) throw InvalidArgument("table size must be nonnegative");
  json j;
  j["command"] = "table";
  j["kind"] = a.kind;
  j["size"] = a.size;
  std::ostringstream text;
  if (a.kind == "bernoulli") {
    if (a.size > 200) throw CapExceeded("bernoulli table limited to 200 entries");
    const auto b = bernoulli_numbers(a.size);
    json rows = json::array();
    for (int i = 0; i <= a.size; ++i) {
      rows.push_back({{"j", i}, {"B_j", to_string(b[static_cast<std::size_t>(i)])}});
      text << "B_" << i << " = " << to_string(b[static_cast<std::size_t>(i)]) << "\n";
    }
    j["rows"] = rows;
  } else if (a.kind == "cycle-weights") {
    if (a.size > limits().chamber_cap)
      throw CapExceeded("cycle length " + std::to_string(a.size) + " exceeds chamber cap " +
                        std::to_string(limits().chamber_cap));
    const auto b = bernoulli_numbers(std::max(a.size, 2));
    json rows = json::array();
    text << "l  cube integral  (-1)^l B_l/l!  match\n";
    for (int l = 2; l <= a.size; ++l) {
      const Rational w = cycle_weight(l);
      const Rational stated = (l % 2 == 0 ? 1 : -1) * b[static_cast<std::size_t>(l)] / factorial(l);
      rows.push_back({{"l", l},
                      {"cube_integral", to_string(w)},
                      {"stated", to_string(stated)},
                      {"matches_stated", w == stated},
                      {"matches_negated", w == -stated}});
      text << l << "  " << to_string(w) << "  " << to_string(stated) << "  "
           << (w == stated ? "yes" : (w == -stated ? "sign flipped" : "no")) << "\n";
    }
    j["rows"] = rows;
  } else if (a.kind == "ahat-components") {
    if (a.size > limits().series_cap) throw CapExceeded("series truncation exceeds cap " + std::to_string(limits().series_cap));
    QMatrix x;
    if (!a.matrix.empty()) {
      x = parse_rows(a.matrix);
    } else {
      if (a.n < 1 || a.n > kMaxRank) throw InvalidArgument("--n must lie in 1.." + std::to_string(kMaxRank));
      Rng rng(a.seed);
      x = random_matrix(rng, a.n, a.n, 2);
      j["seed"] = a.seed;
    }
    const SpElement sp = gl_embed(x);
    const auto comps = ahat_series(std::max(a.size, 1)).components(HElement(sp, QMatrix(1, 1)));
    j["matrix"] = x.to_string();
    j["sp_element"] = sp.poly().to_string();
    json rows = json::array();
    text << "x = " << x.to_string() << "\n" << "embedded " << sp.poly().to_string() << "\n";
    for (int i = 0; i <= a.size; ++i) {
      rows.push_back({{"k", i}, {"Ahat_k", to_string(comps[static_cast<std::size_t>(i)])}});
      text << "Ahat_" << i << " = " << to_string(comps[static_cast<std::size_t>(i)]) << "\n";
    }
    j["rows"] = rows;
  } else {
    throw InvalidArgument("unknown table '" + a.kind + "'");
  }
  if (c.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation and verification of cyclic cocycles on the Weyl algebra", "weylcyc"};
  app.require_subcommand(1);

  Common common;
  EvalArgs eval;
  auto* ev = app.add_subcommand("eval-tau", "evaluate tau_2k on a chain");
  ev->add_option("--n", eval.n, "rank: A_2n has 2n generators");
  ev->add_option("--r", eval.r, "matrix size, 1 for the scalar cocycle");
  ev->add_option("--k", eval.k, "component tau_2k (default n)");
  ev->add_option("--chain", eval.chain, "chain, e.g. \"[1; p1; q1] - [1; q1; p1]\"");
  ev->add_option("--file", eval.file, "file with one chain per line");
  add_common(ev, common);

  std::string suite;
  SuiteConfig cfg;
  auto* ver = app.add_subcommand("verify", "run an identity suite");
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--n", cfg.n, "rank");
  ver->add_option("--r", cfg.r, "matrix size for matrix checks");
  ver->add_option("--m", cfg.m, "largest h_m order (hm suite)");
  ver->add_option("--k", cfg.k, "single component k (thm-1-3 suite)");
  ver->add_option("--seed", cfg.seed, "seed of the sample generator");
  ver->add_option("--samples", cfg.samples, "samples per identity (0 = suite default)");
  add_common(ver, common);

  TableArgs table;
  auto* tab = app.add_subcommand("table", "print an exact table");
  tab->add_option("kind", table.kind, "bernoulli | cycle-weights | ahat-components")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "cycle-weights", "ahat-components"}));
  tab->add_option("size", table.size, "largest index");
  tab->add_option("--n", table.n, "gl_n size of the sampled matrix (ahat-components)");
  tab->add_option("--seed", table.seed, "seed for the sampled matrix");
  tab->add_option("--matrix", table.matrix, "explicit matrix \"a,b;c,d\" (ahat-components)");
  add_common(tab, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    apply_caps(common);
    if (*ev) {
      code = cmd_eval(eval, common, out);
    } else if (*ver) {
      code = cmd_verify(suite, cfg, common, out);
    } else {
      code = cmd_table(table, common, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
  err << "runtime " << ms.count() << " ms\n";
  return code;
}

}  // namespace weylcyc::cli

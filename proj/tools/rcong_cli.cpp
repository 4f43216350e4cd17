// rcong: command-line calculator for r-congruences.
//
// Subcommands: check, classes, perm, solve, verify. Every command accepts
// --format {text|json}. Exit codes: 0 for success / an affirmative answer,
// 1 for a negative finding (not congruent, unsolvable, a falsified claim),
// 2 for usage errors. Integers are decimal with an optional leading minus
// and no size cap; in JSON output integer values are decimal strings so
// arbitrary precision survives parsing.

#include <cctype>
#include <cstddef>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <rcong/rcong.hpp>

using nlohmann::json;
using rcong::Integer;

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string dec(const Integer& x) { return rcong::detail::to_dec(x); }

Integer parse_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw usage_error("not a decimal integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw usage_error("not a decimal integer: '" + s + "'");
  return Integer(s);
}

rcong::modulus<Integer> parse_modulus(const std::string& s) {
  Integer m = parse_integer(s);
  if (m == 0) throw usage_error("modulus must be nonzero");
  return rcong::modulus<Integer>(m);
}

struct int_range {
  Integer lo;
  Integer hi;
};

int_range parse_range(const std::string& s) {
  std::size_t sep = s.find("..", 1);  // skip a leading minus sign
  if (sep == std::string::npos)
    throw usage_error("range must look like lo..hi, got '" + s + "'");
  int_range r{parse_integer(s.substr(0, sep)),
              parse_integer(s.substr(sep + 2))};
  if (r.lo > r.hi)
    throw usage_error("range lower bound exceeds upper bound");
  return r;
}

// --bounds m=8,v=8,k=4,n=3,cap=10 (any subset of keys)
rcong::grid_bounds parse_bounds(const std::string& s) {
  rcong::grid_bounds b;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos
                                         ? std::string::npos
                                         : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw usage_error("bounds entry must look like key=value, got '" +
                        item + "'");
    std::string key = item.substr(0, eq);
    long long value;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw usage_error("bad bounds value in '" + item + "'");
    }
    if (value < 0)
      throw usage_error("bounds value must be nonnegative in '" + item + "'");
    if (key == "m") b.max_modulus = value;
    else if (key == "v") b.max_abs = value;
    else if (key == "k") b.max_power = value;
    else if (key == "n") b.max_moduli = value;
    else if (key == "cap") b.counterexample_cap =
        static_cast<std::size_t>(value);
    else throw usage_error("unknown bounds key '" + key + "'");
  }
  try {
    rcong::validate(b);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  return b;
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

// ---------------------------------------------------------------------------

int run_check(const std::string& as, const std::string& bs,
              const std::string& rs, const std::string& ms, bool balanced,
              const std::string& format) {
  Integer a = parse_integer(as), b = parse_integer(bs), r = parse_integer(rs);
  rcong::modulus<Integer> m = parse_modulus(ms);
  auto conv = balanced ? rcong::remainder_convention::balanced
                       : rcong::remainder_convention::least_nonnegative;

  rcong::congruence_claim<Integer> claim{a, b, r, m};
  bool congruent = is_r_congruent(claim);
  std::optional<Integer> q;
  if (congruent) q = Integer(Integer(a - b - r) / m.value());
  auto kind = classify(r, m);
  Integer canonical = canonical_r(a, b, m, conv);

  if (format == "json") {
    json result{{"congruent", congruent},
                {"classification", to_string(kind)},
                {"canonical_r", dec(canonical)}};
    result["q"] = q ? json(dec(*q)) : json(nullptr);
    emit(json{{"command", "check"},
              {"inputs",
               {{"a", dec(a)},
                {"b", dec(b)},
                {"r", dec(r)},
                {"m", dec(m.value())},
                {"convention", to_string(conv)}}},
              {"result", result}});
  } else {
    std::cout << to_string(claim) << ": "
              << (congruent ? "congruent" : "not congruent");
    if (q) std::cout << "  (q = " << dec(*q) << ")";
    std::cout << "\n";
    std::cout << "index classification: " << to_string(kind) << "\n";
    std::cout << "canonical r (" << to_string(conv) << "): "
              << dec(canonical) << "\n";
  }
  return congruent ? 0 : 1;
}

int run_classes(const std::string& ms, const std::string& rs,
                const std::string& range, const std::string& format) {
  rcong::modulus<Integer> m = parse_modulus(ms);
  Integer r = parse_integer(rs);
  std::optional<int_range> window;
  if (!range.empty()) window = parse_range(range);

  auto table = make_class_table(m, r);
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json entry{{"label", dec(row.label)}, {"rho", dec(row.cls.rho())}};
      if (window) {
        json members = json::array();
        for (const Integer& x :
             members_in_range(row.cls, window->lo, window->hi))
          members.push_back(dec(x));
        entry["members"] = members;
      }
      rows.push_back(entry);
    }
    json inputs{{"m", dec(m.value())}, {"r", dec(r)}};
    inputs["range"] = window ? json{{"lo", dec(window->lo)},
                                    {"hi", dec(window->hi)}}
                             : json(nullptr);
    emit(json{{"command", "classes"},
              {"inputs", inputs},
              {"result", {{"rows", rows}}}});
  } else {
    std::cout << "r-residue classes for shift r = " << dec(r) << " (mod "
              << dec(m.value()) << ")\n";
    for (const auto& row : table.rows) {
      std::cout << "a = " << dec(row.label) << " -> class "
                << dec(row.cls.rho()) << " (mod " << dec(m.value()) << ")";
      if (window) {
        std::cout << "  { ...";
        for (const Integer& x :
             members_in_range(row.cls, window->lo, window->hi))
          std::cout << ", " << dec(x);
        std::cout << ", ... }";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_perm(const std::string& ms, const std::string& rs,
             const std::string& format) {
  rcong::modulus<Integer> m = parse_modulus(ms);
  Integer r = parse_integer(rs);
  rcong::shift_permutation<Integer> f(m, r);
  auto cycles = cycle_decomposition(f);
  auto subgroup = generated_subgroup(f);
  Integer ord = order(f);

  if (format == "json") {
    json images = json::array();
    for (Integer i(0); i < m.value(); i = Integer(i + 1))
      images.push_back(dec(f.apply(i)));
    json jcycles = json::array();
    for (const auto& cycle : cycles) {
      json jc = json::array();
      for (const Integer& label : cycle) jc.push_back(dec(label));
      jcycles.push_back(jc);
    }
    json shifts = json::array();
    for (const auto& p : subgroup) shifts.push_back(dec(p.shift()));
    emit(json{{"command", "perm"},
              {"inputs", {{"m", dec(m.value())}, {"r", dec(r)}}},
              {"result",
               {{"shift", dec(f.shift())},
                {"identity", f.is_identity()},
                {"images", images},
                {"cycles", jcycles},
                {"order", dec(ord)},
                {"subgroup_size",
                 static_cast<std::uint64_t>(subgroup.size())},
                {"subgroup_shifts", shifts}}}});
  } else {
    std::cout << "shift permutation for r = " << dec(r) << " (mod "
              << dec(m.value()) << "): shift " << dec(f.shift())
              << (f.is_identity() ? " (identity)" : "") << "\n";
    std::cout << "labels:";
    for (Integer i(0); i < m.value(); i = Integer(i + 1))
      std::cout << " " << dec(i);
    std::cout << "\nimages:";
    for (Integer i(0); i < m.value(); i = Integer(i + 1))
      std::cout << " " << dec(f.apply(i));
    std::cout << "\ncycles:";
    for (const auto& cycle : cycles) {
      std::cout << " (";
      for (std::size_t i = 0; i < cycle.size(); ++i)
        std::cout << (i ? " " : "") << dec(cycle[i]);
      std::cout << ")";
    }
    std::cout << "\norder: " << dec(ord) << "\n";
    std::cout << "subgroup size: " << subgroup.size() << "\n";
  }
  return 0;
}

int run_solve(const std::string& as, const std::string& bs,
              const std::string& rs, const std::string& ms,
              const std::string& format) {
  Integer a = parse_integer(as), b = parse_integer(bs), r = parse_integer(rs);
  rcong::modulus<Integer> m = parse_modulus(ms);
  auto s = solve_linear(a, b, r, m);
  Integer g = rcong::detail::int_gcd(a, m.value());

  if (format == "json") {
    json xs = json::array();
    for (const Integer& x : s.solutions) xs.push_back(dec(x));
    emit(json{{"command", "solve"},
              {"inputs",
               {{"a", dec(a)},
                {"b", dec(b)},
                {"r", dec(r)},
                {"m", dec(m.value())}}},
              {"result",
               {{"solvable", s.solvable},
                {"solutions", xs},
                {"solution_count",
                 static_cast<std::uint64_t>(s.solutions.size())},
                {"gcd", dec(g)}}}});
  } else {
    std::cout << dec(a) << "x ≡_" << dec(r) << " " << dec(b) << " (mod "
              << dec(m.value()) << "): "
              << (s.solvable ? "solvable" : "unsolvable");
    if (!s.solvable) {
      std::cout << "  (gcd(" << dec(a) << ", " << dec(m.value()) << ") = "
                << dec(g) << " does not divide b + r = " << dec(Integer(b + r))
                << ")";
    }
    std::cout << "\n";
    if (s.solvable) {
      std::cout << "x ≡";
      for (std::size_t i = 0; i < s.solutions.size(); ++i)
        std::cout << (i ? ", " : " ") << dec(s.solutions[i]);
      std::cout << " (mod " << dec(m.value()) << ")  ["
                << s.solutions.size()
                << (s.solutions.size() == 1 ? " solution]" : " solutions]")
                << "\n";
    }
  }
  return s.solvable ? 0 : 1;
}

json report_to_json(const rcong::verification_report<Integer>& rep) {
  json ces = json::array();
  for (const auto& ce : rep.counterexamples) {
    json values = json::object();
    for (const auto& nv : ce.values) values[nv.name] = dec(nv.value);
    ces.push_back(json{{"part", ce.part}, {"values", values}});
  }
  return json{{"lemma", rcong::to_string(rep.lemma)},
              {"verdict", rcong::to_string(rep.result)},
              {"grid", rep.grid},
              {"cases_checked", rep.cases_checked},
              {"counterexamples_total", rep.counterexamples_total},
              {"counterexamples", ces}};
}

void print_report_text(const rcong::verification_report<Integer>& rep) {
  std::cout << rcong::to_string(rep.lemma) << ": "
            << rcong::to_string(rep.result) << "  (" << rep.cases_checked
            << " cases";
  if (rep.result == rcong::verdict::falsified)
    std::cout << ", " << rep.counterexamples_total << " counterexamples";
  std::cout << ")\n";
  std::cout << "  grid: " << rep.grid << "\n";
  for (const auto& ce : rep.counterexamples) {
    std::cout << "  counterexample";
    if (!ce.part.empty()) std::cout << " [" << ce.part << "]";
    std::cout << ":";
    for (const auto& nv : ce.values)
      std::cout << " " << nv.name << "=" << dec(nv.value);
    std::cout << "\n";
  }
}

int run_verify(const std::string& which, const std::string& bounds_spec,
               const std::string& format) {
  rcong::grid_bounds bounds;
  if (!bounds_spec.empty()) bounds = parse_bounds(bounds_spec);

  std::vector<rcong::verification_report<Integer>> reports;
  if (which == "all") {
    reports = rcong::verify_all<Integer>(bounds);
  } else {
    auto id = rcong::parse_lemma_id(which);
    if (!id)
      throw usage_error("unknown lemma id '" + which +
                        "' (expected one of L2.3 L2.4 L2.5 L2.7i L2.7ii "
                        "T2.8 T2.9-order L2.10i L2.10ii L2.10iii L2.10iv "
                        "L2.10v L2.11 L2.12 L2.13 T2.14-psi, or all)");
    reports.push_back(rcong::verify<Integer>(*id, bounds));
  }

  bool any_falsified = false;
  for (const auto& rep : reports)
    any_falsified |= rep.result == rcong::verdict::falsified;

  if (format == "json") {
    json jreports = json::array();
    for (const auto& rep : reports) jreports.push_back(report_to_json(rep));
    emit(json{{"command", "verify"},
              {"inputs",
               {{"lemma", which},
                {"bounds",
                 {{"max_modulus", bounds.max_modulus},
                  {"max_abs", bounds.max_abs},
                  {"max_power", bounds.max_power},
                  {"max_moduli", bounds.max_moduli},
                  {"counterexample_cap",
                   static_cast<std::uint64_t>(bounds.counterexample_cap)}}}}},
              {"result", {{"reports", jreports},
                          {"all_confirmed", !any_falsified}}}});
  } else {
    for (const auto& rep : reports) print_report_text(rep);
  }
  return any_falsified ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculator for congruences with a shifted remainder index"};
  app.require_subcommand(1);
  // let --format appear after the subcommand as well as before it
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string a, b, r, m, range, bounds_spec, lemma;
  bool balanced = false;

  CLI::App* check =
      app.add_subcommand("check", "test whether a is r-congruent to b mod m");
  check->add_option("a", a, "left integer")->required();
  check->add_option("b", b, "right integer")->required();
  check->add_option("r", r, "remainder index")->required();
  check->add_option("m", m, "modulus (nonzero)")->required();
  check->add_flag("--balanced", balanced,
                  "report the canonical r in the balanced range "
                  "(-m/2, m/2] instead of [0, m)");

  CLI::App* classes = app.add_subcommand(
      "classes", "tabulate the r-residue classes of 0..m-1");
  classes->add_option("m", m, "modulus (nonzero)")->required();
  classes->add_option("r", r, "remainder index")->required();
  classes->add_option("--range", range,
                      "also list each class's members in lo..hi");

  CLI::App* perm = app.add_subcommand(
      "perm", "show the class shift permutation and the subgroup it "
              "generates");
  perm->add_option("m", m, "modulus (nonzero)")->required();
  perm->add_option("r", r, "remainder index")->required();

  CLI::App* solve =
      app.add_subcommand("solve", "solve ax = b + r-remainder (mod m) for x");
  solve->add_option("a", a, "coefficient")->required();
  solve->add_option("b", b, "right-hand side")->required();
  solve->add_option("r", r, "remainder index")->required();
  solve->add_option("m", m, "modulus (nonzero)")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "exhaustively verify a claim (or all) over a bounded grid");
  verify->add_option("lemma", lemma, "claim id (e.g. L2.13) or 'all'")
      ->required();
  verify->add_option("--bounds", bounds_spec,
                     "grid bounds as m=8,v=8,k=4,n=3,cap=10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(a, b, r, m, balanced, format);
    if (classes->parsed()) return run_classes(m, r, range, format);
    if (perm->parsed()) return run_perm(m, r, format);
    if (solve->parsed()) return run_solve(a, b, r, m, format);
    if (verify->parsed()) return run_verify(lemma, bounds_spec, format);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

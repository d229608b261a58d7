#include "epw/cli.hpp"

#include "epw/cep.hpp"
#include "epw/errors.hpp"
#include "epw/fewamp.hpp"
#include "epw/formula.hpp"
#include "epw/negequiv.hpp"
#include "epw/obdd.hpp"
#include "epw/obdd_io.hpp"
#include "epw/random_instances.hpp"
#include "epw/report.hpp"
#include "epw/twodag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

namespace epw::cli {

using nlohmann::json;

namespace {

Method parse_method(const std::string& m) {
  if (m == "brute") return Method::Brute;
  if (m == "symbolic") return Method::Symbolic;
  throw Error("unknown method \"" + m + "\" (expected brute or symbolic)");
}

BigInt parse_big(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(std::string("invalid ") + what + ": \"" + text + "\"");
  }
  return BigInt(text);
}

bool is_file_ref(const std::string& s) { return !s.empty() && s.front() == '@'; }

json load_ref(const std::string& s) { return read_json_file(s.substr(1)); }

/// OBDD operands: either "@file" or a formula over --n built with the
/// identity order. All operands end up in one manager.
std::pair<Obdd, Obdd> load_obdd_pair(const std::string& f, const std::string& g, std::size_t n) {
  std::shared_ptr<BddManager> manager;
  if (is_file_ref(f)) {
    manager = BddManager::create(read_obdd_order(load_ref(f)));
  } else if (is_file_ref(g)) {
    manager = BddManager::create(read_obdd_order(load_ref(g)));
  } else {
    if (n == 0) throw Error("--n is required when both operands are formulas");
    manager = BddManager::create_identity(n);
  }
  auto one = [&](const std::string& s) {
    return is_file_ref(s) ? load_obdd(load_ref(s), manager)
                          : build(parse_formula(s, manager->num_vars()), manager);
  };
  Obdd a = one(f);
  Obdd b = one(g);
  return {a, b};
}

struct SelftestTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  json failed = json::array();

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failed.size() < 20) failed.push_back(what);
    }
  }
};

json run_selftest(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SelftestTally t;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = 2 + rng() % 5;
    const Formula g = random_formula(rng, n, 4, rng() & 1u);
    const Formula f = (rng() & 1u) ? apply_negation_vector(g, random_vector(rng, n))
                                   : random_formula(rng, n, 4, rng() & 1u);
    const auto brute = decide_negation_equivalence(f, g, n, Method::Brute);
    const auto symbolic = decide_negation_equivalence(f, g, n, Method::Symbolic);
    t.expect(brute.power_of_two_or_zero, "formula witness count not 0 or 2^m: " + f.to_string());
    t.expect(brute.witness_count == symbolic.witness_count,
             "brute/symbolic disagree on " + f.to_string() + " vs " + g.to_string());
    t.expect(brute.witnesses == symbolic.witnesses, "witness sets differ: " + f.to_string());

    const TwoDag dg = random_dag(rng, 5, 30);
    const TwoDag df = relabel(apply_flips(dg, random_vector(rng, dg.max_depth() + 1)), rng);
    const auto dag = decide_interchange(df, dg);
    t.expect(dag.equivalent && dag.power_of_two_or_zero, "planted dag pair not recovered");

    const BigInt target = rng() % 300;
    const BigInt total = rng() % 300;
    const BigInt actual = total == 0 ? BigInt(0) : BigInt(rng() % (total.convert_to<std::uint64_t>() + 1));
    const PaddingInstance inst(target, actual, total);
    t.expect(is_power_of_two(padded_count(inst)) == (actual == target), "padding law fails");
  }
  for (const char* name : {"pow2", "pow4", "nonmult:2", "nonmult:3", "nonmult:5"}) {
    const auto set = make_acceptance_set(name);
    const auto table = build_constants(set, 30);
    for (std::size_t m = 1; m <= 30; ++m) {
      t.expect(set->contains(amplified_count(table, m)), std::string("amplified count outside ") + name);
    }
    t.expect(verify_growth(table, *set->gap_constant()).pass, std::string("growth bound fails for ") + name);
  }
  return {{"seed", seed},       {"trials", trials},          {"checks", t.checks},
          {"failures", t.failures}, {"pass", t.failures == 0}, {"failed", t.failed}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witness structure of negation equivalence, path amplification and padding"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::size_t n = 0;
  std::string f, g, method = "brute";

  auto* negeq = app.add_subcommand("negeq", "Negation equivalence of two formulas");
  negeq->add_option("--n", n, "Number of variables")->required();
  negeq->add_option("--f", f, "First formula")->required();
  negeq->add_option("--g", g, "Second formula (the one whose inputs are negated)")->required();
  negeq->add_option("--method", method, "brute | symbolic");

  std::string obdd_method = "symbolic";
  auto* negeq_obdd = app.add_subcommand("negeq-obdd", "Negation equivalence of two OBDDs");
  negeq_obdd->add_option("--n", n, "Number of variables (when operands are formulas)");
  negeq_obdd->add_option("--f", f, "@file or formula")->required();
  negeq_obdd->add_option("--g", g, "@file or formula")->required();
  negeq_obdd->add_option("--method", obdd_method, "brute | symbolic");

  auto* dageq = app.add_subcommand("dageq", "Interchange equivalence of two 2-dags");
  dageq->add_option("--f", f, "@file with the first 2-dag")->required();
  dageq->add_option("--g", g, "@file with the second 2-dag (the one that is flipped)")->required();

  auto* stabilizer = app.add_subcommand("stabilizer", "Negation stabilizer of one function");
  stabilizer->add_option("--n", n, "Number of variables (formula input)");
  stabilizer->add_option("--f", f, "Formula or @file OBDD")->required();
  stabilizer->add_option("--method", method, "brute | symbolic");

  std::string set_spec = "pow2";
  std::size_t p = 0;
  std::string k_text, bound_text, run_pattern;
  auto* amplify = app.add_subcommand("amplify", "Amplifier constants for an acceptance set");
  amplify->add_option("--set", set_spec, "pow2 | pow4 | pow:q | nonmult:k | dexp | file:path");
  amplify->add_option("--p", p, "Bound on accepting paths")->required();
  amplify->add_option("--k", k_text, "Non-gappy constant for the growth check");
  amplify->add_option("--run", run_pattern, "Path outcomes over {A,R} to simulate");

  auto* nongappy = app.add_subcommand("nongappy", "Bounded non-gappy check");
  nongappy->add_option("--set", set_spec, "Acceptance set");
  nongappy->add_option("--k", k_text, "Gap constant")->required();
  nongappy->add_option("--bound", bound_text, "Largest member to check")->required();

  std::string target_text, actual_text, total_text;
  auto* cpad = app.add_subcommand("cpad", "Pad an exact-count computation to a power of two");
  cpad->add_option("--f", target_text, "Target count")->required();
  cpad->add_option("--g", actual_text, "Accepting paths")->required();
  cpad->add_option("--t", total_text, "Total paths")->required();

  std::uint64_t seed = 1;
  std::size_t trials = 100;
  auto* selftest = app.add_subcommand("selftest", "Randomized consistency checks");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--trials", trials, "Random instances per family");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    json report;
    int status = kExitOk;
    if (negeq->parsed()) {
      report = to_json(decide_negation_equivalence(parse_formula(f, n), parse_formula(g, n), n,
                                                   parse_method(method)));
    } else if (negeq_obdd->parsed()) {
      auto [a, b] = load_obdd_pair(f, g, n);
      report = to_json(decide_negation_equivalence(a, b, parse_method(obdd_method)));
    } else if (dageq->parsed()) {
      if (!is_file_ref(f) || !is_file_ref(g)) throw Error("dageq operands must be @file references");
      report = to_json(decide_interchange(validate_dag(parse_raw_dag(load_ref(f))),
                                          validate_dag(parse_raw_dag(load_ref(g)))));
    } else if (stabilizer->parsed()) {
      GF2Basis basis;
      if (is_file_ref(f)) {
        const json doc = load_ref(f);
        const Obdd a = load_obdd(doc, BddManager::create(read_obdd_order(doc)));
        basis = parse_method(method) == Method::Brute ? self_stabilizer(truth_table(a)) : self_stabilizer(a);
      } else {
        const Formula formula = parse_formula(f, n);
        basis = parse_method(method) == Method::Brute ? self_stabilizer(formula, n)
                                                      : self_stabilizer(build(formula, BddManager::create_identity(n)));
      }
      report = {{"dim", basis.dim()}, {"basis", to_json(basis)}, {"size", to_json(pow2(static_cast<unsigned>(basis.dim())))}};
    } else if (amplify->parsed()) {
      const auto set = make_acceptance_set(set_spec);
      const AmplifierTable table = build_constants(set, p);
      report = to_json(table);
      json counts = json::array();
      json outside = json::array();
      for (std::size_t m = 0; m <= p; ++m) {
        const BigInt count = amplified_count(table, m);
        counts.push_back(to_json(count));
        const bool ok = m == 0 ? count == 0 : set->contains(count);
        if (!ok) outside.push_back(m);
      }
      report["amplified_counts"] = counts;
      report["membership"] = {{"pass", outside.empty()}, {"violations", outside}};
      std::optional<BigInt> k = k_text.empty() ? set->gap_constant() : std::optional<BigInt>(parse_big(k_text, "k"));
      if (k) {
        report["growth"] = to_json(verify_growth(table, *k));
        report["growth"]["k"] = to_json(*k);
      }
      if (!run_pattern.empty()) {
        const FewRun run = FewRun::from_string(run_pattern);
        const BigInt simulated = simulate_amplifier(table, run);
        const BigInt expected = amplified_count(table, run.accepting());
        report["simulation"] = {{"accepting", run.accepting()},
                                {"paths", to_json(simulated)},
                                {"matches_formula", simulated == expected}};
        if (simulated != expected) status = kExitInvariantViolation;
      }
      if (!outside.empty()) status = kExitInvariantViolation;
    } else if (nongappy->parsed()) {
      const auto set = make_acceptance_set(set_spec);
      report = to_json(check_non_gappy(*set, parse_big(k_text, "k"), parse_big(bound_text, "bound")));
      report["set"] = set->name();
    } else if (cpad->parsed()) {
      report = to_json(PaddingInstance(parse_big(target_text, "f"), parse_big(actual_text, "g"),
                                       parse_big(total_text, "t")));
    } else if (selftest->parsed()) {
      report = run_selftest(seed, trials);
      if (!report["pass"].get<bool>()) status = kExitInvariantViolation;
    }
    out << report.dump(2) << "\n";
    return status;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace epw::cli

// Batch front end: enumeration, generator actions, the GF(q) oracle, and the
// verification bundles, with JSON on stdout and progress on stderr.
//
// Exit codes: 0 success, 1 a check ran and failed, 2 usage or precondition
// error, 3 work budget exceeded.

#include "mirabolic/json_io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

namespace {

using namespace mirabolic;

GeneratorToken parse_token(const std::string& s) {
  if (s == "L" || s == "l") return GeneratorToken::l();
  if (s.size() >= 2) {
    const char k = s[0];
    if (k == 'E' || k == 'e') return GeneratorToken::e(std::stoi(s.substr(1)));
    if (k == 'F' || k == 'f') return GeneratorToken::f(std::stoi(s.substr(1)));
    if ((k == 'H' || k == 'h') && s.size() >= 3) {
      if (s[1] == '+') return GeneratorToken::h_plus(std::stoi(s.substr(2)));
      if (s[1] == '-') return GeneratorToken::h_minus(std::stoi(s.substr(2)));
    }
  }
  throw std::invalid_argument("unrecognized token '" + s +
                              "' (expected E1, F2, H+1, H-2 or L)");
}

WeightConvention parse_convention(const std::string& s) {
  for (auto c : all_weight_conventions())
    if (s == convention_name(c)) return c;
  throw std::invalid_argument("unknown convention '" + s + "'");
}

std::string convention_choices() {
  std::string out;
  for (auto c : all_weight_conventions())
    out += std::string(out.empty() ? "" : ",") + convention_name(c);
  return out;
}

WorkBudget make_budget(const std::string& max_work) {
  WorkBudget b;
  b.limit = max_work.empty() ? default_work_limit() : Int(max_work);
  return b;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convolution algebra of decorated matrices over GF(q)"};
  app.require_subcommand(1);

  int n = 1, m = 1, d = 1, q = 2;
  int size = 1, basis_index = -1;
  std::string side = "left", token_str, output = "json", x_str, max_work;
  std::string profile, kind, convention = convention_name(default_convention());
  std::vector<int> q_list = {2, 3};
  std::vector<std::string> v_samples;
  bool formula_only = false, require_unique = false;

  auto add_ctx = [&](CLI::App* cmd, int dmax) {
    cmd->add_option("--n", n, "row count of the left flag type")
        ->check(CLI::Range(1, 8))
        ->required();
    cmd->add_option("--m", m, "column count / right flag type")
        ->check(CLI::Range(1, 8))
        ->required();
    cmd->add_option("--d", d, "total entry sum (ambient dimension)")
        ->check(CLI::Range(0, dmax))
        ->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "payload format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-work", max_work,
                    "work budget override (default from MIRABOLIC_MAX_WORK)");
  };
  auto add_side_token = [&](CLI::App* cmd) {
    cmd->add_option("--side", side, "which action to apply")
        ->check(CLI::IsMember({"left", "right"}));
    cmd->add_option("--token", token_str, "generator: E1, F2, H+1, H-2, L")
        ->required();
  };
  auto add_element_input = [&](CLI::App* cmd) {
    cmd->add_option("--x", x_str,
                    "basis element, e.g. \"[[1,0];[0,1]]{(1,1)}\"");
    cmd->add_option("--basis-index", basis_index,
                    "index into the canonical basis enumeration")
        ->check(CLI::Range(0, 1 << 24));
  };

  std::function<int()> action;

  auto* c_basis = app.add_subcommand("basis", "enumerate the decorated-matrix basis");
  add_ctx(c_basis, 12);
  add_output(c_basis);
  c_basis->callback([&] {
    action = [&]() -> int {
      const Context ctx{n, m, d};
      if (output == "json") {
        std::cout << basis_json(ctx) << "\n";
      } else {
        for (const auto& k : enumerate_decorated(n, m, d))
          std::cout << k.str() << "\n";
      }
      return 0;
    };
  });

  auto* c_act = app.add_subcommand("act", "apply one generator to an element");
  add_ctx(c_act, 12);
  add_side_token(c_act);
  add_element_input(c_act);
  add_output(c_act);
  c_act->callback([&] {
    action = [&]() -> int {
      const Context ctx{n, m, d};
      if ((x_str.empty()) == (basis_index < 0))
        throw std::invalid_argument("give exactly one of --x / --basis-index");
      DecoratedMatrix x;
      if (!x_str.empty()) {
        x = parse_matrix(x_str, n, m);
      } else {
        const auto keys = enumerate_decorated(n, m, d);
        if (basis_index >= static_cast<int>(keys.size()))
          throw std::invalid_argument("--basis-index beyond the basis size");
        x = keys[static_cast<size_t>(basis_index)];
      }
      const GeneratorToken t = parse_token(token_str);
      const ModuleElement e = ModuleElement::basis(ctx, x);
      const ModuleElement r = side == "left" ? act_left(t, e) : act_right(e, t);
      std::cout << serialize_element(r, output == "json") << "\n";
      return 0;
    };
  });

  auto* c_gen = app.add_subcommand(
      "generator", "expand one generator over the square-context basis");
  c_gen->add_option("--size", size, "flag type of the acting algebra")
      ->check(CLI::Range(1, 8))
      ->required();
  c_gen->add_option("--d", d, "total entry sum")->check(CLI::Range(0, 12))->required();
  c_gen->add_option("--token", token_str, "generator: E1, F2, H+1, H-2, L")
      ->required();
  add_output(c_gen);
  c_gen->callback([&] {
    action = [&]() -> int {
      const ModuleElement g =
          generator_element(parse_token(token_str), size, d);
      std::cout << serialize_element(g, output == "json") << "\n";
      return 0;
    };
  });

  auto* c_orbits = app.add_subcommand(
      "oracle-orbits", "classify all (flag, flag, vector) triples over GF(q)");
  add_ctx(c_orbits, 4);
  c_orbits->add_option("--q", q, "field size")->check(CLI::IsMember({2, 3, 5}))->required();
  add_budget(c_orbits);
  c_orbits->callback([&] {
    action = [&]() -> int {
      WorkBudget budget = make_budget(max_work);
      std::cout << orbit_table_json(build_orbit_table(Context{n, m, d}, q, budget))
                << "\n";
      return 0;
    };
  });

  auto* c_check = app.add_subcommand(
      "oracle-check", "generator action computed by brute-force convolution");
  add_ctx(c_check, 4);
  c_check->add_option("--q", q, "field size")->check(CLI::IsMember({2, 3, 5}))->required();
  add_side_token(c_check);
  add_element_input(c_check);
  c_check->add_option("--convention", convention,
                      "weight convention (" + convention_choices() + ")");
  add_budget(c_check);
  c_check->callback([&] {
    action = [&]() -> int {
      const Context ctx{n, m, d};
      if ((x_str.empty()) == (basis_index < 0))
        throw std::invalid_argument("give exactly one of --x / --basis-index");
      DecoratedMatrix x;
      if (!x_str.empty()) {
        x = parse_matrix(x_str, n, m);
      } else {
        const auto keys = enumerate_decorated(n, m, d);
        if (basis_index >= static_cast<int>(keys.size()))
          throw std::invalid_argument("--basis-index beyond the basis size");
        x = keys[static_cast<size_t>(basis_index)];
      }
      WorkBudget budget = make_budget(max_work);
      const GeneratorToken t = parse_token(token_str);
      const auto values = oracle_generator_action(
          t, x, q, side == "left", parse_convention(convention), budget);
      std::cout << oracle_action_json(ctx, q, t, side == "left", x, values)
                << "\n";
      return 0;
    };
  });

  auto* c_verify = app.add_subcommand("verify", "run mechanized checks");
  c_verify->add_option("--profile", profile, "bundle to run (desk)")
      ->check(CLI::IsMember({"desk"}));
  c_verify->add_option("--kind", kind, "single check to run")
      ->check(CLI::IsMember({"presentation", "bimodule", "agreement"}));
  c_verify->add_option("--n", n, "rows")->check(CLI::Range(1, 8));
  c_verify->add_option("--m", m, "columns")->check(CLI::Range(1, 8));
  c_verify->add_option("--d", d, "total entry sum")->check(CLI::Range(0, 12));
  c_verify->add_option("--q", q, "field size (agreement)")
      ->check(CLI::IsMember({2, 3, 5}));
  c_verify->add_option("--side", side, "presentation side")
      ->check(CLI::IsMember({"left", "right"}));
  c_verify->add_option("--convention", convention,
                       "weight convention (" + convention_choices() +
                           ", or auto)");
  add_budget(c_verify);
  c_verify->callback([&] {
    action = [&]() -> int {
      WorkBudget budget = make_budget(max_work);
      if (profile == "desk") {
        const auto results = run_acceptance_suite(budget);
        bool all = true;
        for (const auto& r : results) {
          all = all && r.passed;
          std::cerr << "[" << r.id << "] " << (r.passed ? "pass" : "FAIL")
                    << " " << r.title << " (" << r.seconds << "s)\n";
        }
        std::cout << criteria_json(results) << "\n";
        return all ? 0 : 1;
      }
      const Context ctx{n, m, d};
      if (kind == "presentation" || kind == "bimodule") {
        const auto reports = kind == "presentation"
                                 ? verify_presentation(ctx, side == "left")
                                 : verify_bimodule(ctx);
        std::cout << relation_reports_json(kind, ctx, reports) << "\n";
        for (const auto& r : reports)
          if (!r.passed) return 1;
        return 0;
      }
      if (kind == "agreement") {
        const WeightConvention conv = convention == "auto"
                                          ? calibrated_convention(budget)
                                          : parse_convention(convention);
        const auto rep = verify_oracle_agreement(ctx, q, conv, budget);
        std::cout << agreement_json(rep) << "\n";
        return rep.passed && rep.parity_ok ? 0 : 1;
      }
      throw std::invalid_argument("give --profile desk or --kind <check>");
    };
  });

  auto* c_cal = app.add_subcommand(
      "calibrate", "compare every weight convention against the oracle");
  add_ctx(c_cal, 4);
  c_cal->add_option("--q", q_list, "field sizes (repeatable)")
      ->check(CLI::IsMember({2, 3, 5}));
  c_cal->add_flag("--require-unique", require_unique,
                  "fail when several conventions survive");
  add_budget(c_cal);
  c_cal->callback([&] {
    action = [&]() -> int {
      WorkBudget budget = make_budget(max_work);
      const auto rep = calibrate_normalization(Context{n, m, d}, q_list, budget);
      std::cout << calibration_json(rep) << "\n";
      std::cerr << rep.str();
      if (!rep.has_choice) return 1;
      if (require_unique && rep.ambiguous) return 1;
      return 0;
    };
  });

  auto* c_dims = app.add_subcommand(
      "dims", "dimension formula vs enumeration vs orbit counts");
  add_ctx(c_dims, 12);
  c_dims->add_option("--q", q_list, "field sizes for the orbit count")
      ->check(CLI::IsMember({2, 3, 5}));
  c_dims->add_flag("--formula-only", formula_only,
                   "skip the GF(q) orbit tables");
  add_budget(c_dims);
  c_dims->callback([&] {
    action = [&]() -> int {
      if (!formula_only && d > 4)
        throw std::invalid_argument(
            "orbit counting needs --d at most 4; pass --formula-only");
      WorkBudget budget = make_budget(max_work);
      const auto rep = verify_dimensions(
          Context{n, m, d}, formula_only ? std::vector<int>{} : q_list, budget);
      std::cout << dimension_json(rep) << "\n";
      return rep.passed ? 0 : 1;
    };
  });

  auto* c_cent = app.add_subcommand(
      "centralizer", "word-span and commutant dimensions at sample points");
  add_ctx(c_cent, 4);
  c_cent->add_option("--v", v_samples,
                     "rational specializations of v (default 2 3 5/2)");
  c_cent->callback([&] {
    action = [&]() -> int {
      std::vector<Rational> samples;
      for (const auto& s : v_samples) samples.push_back(parse_rational(s));
      const bool custom = !samples.empty();
      if (!custom)
        samples = {Rational(2), Rational(3), Rational(5) / 2};
      CentralizerReport rep;
      try {
        rep = centralizer_report(Context{n, m, d}, samples);
      } catch (const SampleDegenerate& e) {
        if (custom) throw;
        std::cerr << "resampling: " << e.what() << "\n";
        rep = centralizer_report(
            Context{n, m, d},
            {Rational(7), Rational(11) / 3, Rational(4)});
      }
      std::cout << centralizer_json(rep) << "\n";
      return rep.passed ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const ScaleExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NoConsistentConvention& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

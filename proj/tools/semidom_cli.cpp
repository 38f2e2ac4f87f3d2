// Command-line surface: factoring, length sets, localization arithmetic,
// ideal queries, and the verification suites. Text output by default,
// JSON with --json; identical invocations produce identical bytes.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semidom/semidom.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace semidom;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

/// SEMIDOM_BUDGET_SCALE (positive rational "p" or "p/q") multiplies every
/// default budget cap.
Budget env_budget() {
  Budget b;
  const char* s = std::getenv("SEMIDOM_BUDGET_SCALE");
  if (!s || !*s) return b;
  std::string str(s);
  double num = 0, den = 1;
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      num = std::stod(str);
    } else {
      num = std::stod(str.substr(0, slash));
      den = std::stod(str.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw ParseError("SEMIDOM_BUDGET_SCALE: cannot parse '" + str + "'");
  }
  if (!(num > 0) || !(den > 0))
    throw ParseError("SEMIDOM_BUDGET_SCALE must be a positive rational");
  return b.scaled(num / den);
}

std::vector<Poly> parse_gen_list(Instance inst, std::string text) {
  // accept both "2,3" and the ideal literal "(2,3)"
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  std::vector<Poly> gens;
  std::size_t pos = 0;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") == std::string::npos)
      throw ParseError("empty generator in list '" + text + "'");
    gens.push_back(parse_element(inst, cur).v);
    cur.clear();
  };
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return gens;
}

/// Fraction text "num/den", split at the last top-level '/'. A plain
/// element denotes t/1.
Fraction parse_fraction(const MultiplicativeSet& S, const std::string& text) {
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) split = i;
  }
  auto strip_parens = [](std::string s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      int d = 0;
      bool wraps = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++d;
        if (s[i] == ')') --d;
        if (d == 0) {
          wraps = false;
          break;
        }
      }
      if (!wraps) break;
      s = s.substr(1, s.size() - 2);
    }
    return s;
  };
  if (split == std::string::npos)
    return localize_map(S, parse_element(S.inst, text).v);
  Poly num = parse_element(S.inst, strip_parens(text.substr(0, split))).v;
  // the denominator only needs to lie in <S>, not in the instance
  Poly den = parse_poly(strip_parens(text.substr(split + 1)));
  return make_fraction(S, num, den);
}

json budget_json(const Budget& b) {
  return json{{"degree_cap", b.degree_cap},
              {"height_cap", b.height_cap},
              {"pair_cap", b.pair_cap},
              {"divisor_cap", b.divisor_cap},
              {"summand_cap", b.summand_cap},
              {"coeff_height_cap", b.coeff_height_cap},
              {"exponent_cap", b.exponent_cap},
              {"enum_cap", b.enum_cap}};
}

std::string element_kind(const Element& e, const Budget& budget) {
  if (e.v.is_zero()) return "zero";
  if (is_mult_unit(e.inst, e.v)) return "unit";
  Verdict atom = is_atom(e, budget);
  if (atom.is_yes()) return "atom";
  if (atom.is_no()) return "composite";
  return "unknown";
}

int report_factor(Instance inst, const std::string& text, bool additive,
                  bool as_json, const Budget& budget, bool lengths_only) {
  Element e = parse_element(inst, text);
  FactorizationSet zs = additive ? additive_factorizations(e, budget)
                                 : factorizations(e, budget);
  LengthSet ls;
  ls.complete = zs.complete;
  for (const auto& z : zs.all) ls.lengths.insert(z.length());

  if (as_json) {
    json j;
    j["element"] = to_string(e.v);
    j["kind"] = element_kind(e, budget);
    j["unit"] = zs.all.empty() ? std::string("1") : to_string(zs.all[0].unit);
    j["factorizations"] = json::array();
    for (const auto& z : zs.all) j["factorizations"].push_back(to_string(z));
    j["lengths"] = json::array();
    for (auto l : ls.lengths) j["lengths"].push_back(l);
    j["complete"] = zs.complete;
    j["budget"] = budget_json(budget);
    if (!zs.descent_witness.empty()) j["descent_witness"] = zs.descent_witness;
    std::cout << j.dump(2) << "\n";
  } else if (lengths_only) {
    std::string out = "{";
    bool first = true;
    for (auto l : ls.lengths) {
      if (!first) out += ",";
      out += std::to_string(l);
      first = false;
    }
    out += "}";
    std::cout << "L(" << to_string(e.v) << ") = " << out
              << (ls.complete ? "" : "  [incomplete]") << "\n";
  } else {
    if (zs.all.empty()) {
      if (!zs.descent_witness.empty())
        std::cout << "no atomic factorization; descent: "
                  << zs.descent_witness << "\n";
      else if (zs.complete)
        std::cout << "empty factorization (unit)\n";
      else
        std::cout << "no factorization found within budget\n";
    }
    for (const auto& z : zs.all) std::cout << to_string(z) << "\n";
    std::string out = "{";
    bool first = true;
    for (auto l : ls.lengths) {
      if (!first) out += ",";
      out += std::to_string(l);
      first = false;
    }
    out += "}";
    std::cout << "lengths " << out << (zs.complete ? "" : "  [incomplete]")
              << "\n";
  }
  if (!zs.complete) return kExitUnknown;
  return kExitOk;
}

int verdict_exit(const Verdict& v) {
  return v.is_unknown() ? kExitUnknown : kExitOk;
}

void print_verdict(const std::string& label, const Verdict& v, bool as_json) {
  if (as_json) {
    json j;
    j["query"] = label;
    j["verdict"] = to_string(v.answer);
    if (v.is_unknown())
      j["budget"] = v.budget_used.describe();
    else
      j["witness"] = v.witness;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << label << ": " << v.render() << "\n";
  }
}

json suite_json(const SuiteResult& r) {
  json j;
  j["suite"] = r.name;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["passed"] = r.passed;
  j["failed"] = r.failures.size();
  j["failures"] = r.failures;
  j["status"] = r.ok() ? "PASS" : "FAIL";
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semidom: exact semidomain localization and factorization"};
  app.require_subcommand(1);

  std::string instance_id = "n0";
  bool as_json = false;

  // factor / lengths
  auto add_factor_like = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--instance", instance_id, "instance id")->required();
    sub->add_flag("--json", as_json, "JSON output");
    return sub;
  };
  std::string factor_elem;
  bool additive = false;
  CLI::App* factor_cmd =
      add_factor_like("factor", "factorizations Z(b) of an element");
  factor_cmd->add_option("element", factor_elem, "element literal")->required();
  factor_cmd->add_flag("--additive", additive, "additive factorizations");

  std::string lengths_elem;
  bool lengths_additive = false;
  CLI::App* lengths_cmd =
      add_factor_like("lengths", "length set L(b) of an element");
  lengths_cmd->add_option("element", lengths_elem, "element literal")
      ->required();
  lengths_cmd->add_flag("--additive", lengths_additive,
                        "additive factorizations");

  // localize
  std::string mulset_text, op_text;
  std::vector<std::string> frac_args;
  CLI::App* loc_cmd =
      app.add_subcommand("localize", "fraction arithmetic in S^-1 S");
  loc_cmd->add_option("--instance", instance_id, "instance id")->required();
  loc_cmd->add_option("--mulset", mulset_text, "multiplicative-set generators")
      ->required();
  loc_cmd->add_option("--op", op_text, "add | mul | eq")->required();
  loc_cmd->add_option("fractions", frac_args, "two fraction literals")
      ->expected(2);
  loc_cmd->add_flag("--json", as_json, "JSON output");

  // ideal
  std::string gens_text, ideal_mulset, query_text, query_arg;
  CLI::App* ideal_cmd = app.add_subcommand("ideal", "ideal queries");
  ideal_cmd->add_option("--instance", instance_id, "instance id")->required();
  ideal_cmd->add_option("--gens", gens_text, "ideal generators")->required();
  ideal_cmd->add_option("--mulset", ideal_mulset,
                        "multiplicative set for extension queries");
  ideal_cmd
      ->add_option("query", query_text,
                   "member | subtractive | prime | whole | extend-member | "
                   "contract-member")
      ->required();
  ideal_cmd->add_option("arg", query_arg, "query argument (element/fraction)");
  ideal_cmd->add_flag("--json", as_json, "JSON output");

  // check
  std::string suite_name;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  int workers = 1;
  CLI::App* check_cmd =
      app.add_subcommand("check", "run a verification suite");
  check_cmd->add_option("--suite", suite_name, "suite name")->required();
  check_cmd->add_option("--seed", seed, "sampling seed");
  check_cmd->add_option("--samples", samples, "sample count");
  check_cmd->add_option("--workers", workers, "parallel workers");
  check_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Budget budget = env_budget();

    if (factor_cmd->parsed())
      return report_factor(parse_instance(instance_id), factor_elem, additive,
                           as_json, budget, false);
    if (lengths_cmd->parsed())
      return report_factor(parse_instance(instance_id), lengths_elem,
                           lengths_additive, as_json, budget, true);

    if (loc_cmd->parsed()) {
      Instance inst = parse_instance(instance_id);
      auto S = make_mult_set(inst, parse_gen_list(inst, mulset_text));
      Fraction u = parse_fraction(S, frac_args[0]);
      Fraction v = parse_fraction(S, frac_args[1]);
      if (op_text == "eq") {
        bool eq = frac_eq(S, u, v);
        if (as_json)
          std::cout << json{{"op", "eq"},
                            {"lhs", to_string(u)},
                            {"rhs", to_string(v)},
                            {"result", eq ? "EQUAL" : "NOT-EQUAL"}}
                           .dump(2)
                    << "\n";
        else
          std::cout << (eq ? "EQUAL" : "NOT-EQUAL") << "\n";
        return kExitOk;
      }
      if (op_text != "add" && op_text != "mul") {
        std::cerr << "usage error: unknown op '" << op_text << "'\n";
        return kExitUsage;
      }
      Fraction r = op_text == "add" ? frac_add(S, u, v) : frac_mul(S, u, v);
      if (as_json)
        std::cout << json{{"op", op_text},
                          {"lhs", to_string(u)},
                          {"rhs", to_string(v)},
                          {"result", to_string(r)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << to_string(r) << "\n";
      return kExitOk;
    }

    if (ideal_cmd->parsed()) {
      Instance inst = parse_instance(instance_id);
      Ideal I = make_ideal(inst, parse_gen_list(inst, gens_text));
      if (query_text == "member") {
        if (query_arg.empty()) {
          std::cerr << "usage error: 'member' needs an element argument\n";
          return kExitUsage;
        }
        auto mv = ideal_membership(I, parse_element(inst, query_arg).v, budget);
        print_verdict("member", mv.verdict, as_json);
        return verdict_exit(mv.verdict);
      }
      if (query_text == "subtractive") {
        Verdict v = check_subtractive(I, budget);
        print_verdict("subtractive", v, as_json);
        return verdict_exit(v);
      }
      if (query_text == "prime") {
        Verdict v = check_prime_ideal(I, budget);
        print_verdict("prime", v, as_json);
        return verdict_exit(v);
      }
      if (query_text == "whole" || query_text == "extend-member" ||
          query_text == "contract-member") {
        if (ideal_mulset.empty()) {
          std::cerr << "usage error: '" << query_text
                    << "' needs --mulset\n";
          return kExitUsage;
        }
        auto S = make_mult_set(inst, parse_gen_list(inst, ideal_mulset));
        if (query_text == "whole") {
          Verdict v = extension_is_whole(I, S, budget);
          print_verdict("whole", v, as_json);
          return verdict_exit(v);
        }
        if (query_arg.empty()) {
          std::cerr << "usage error: '" << query_text
                    << "' needs a fraction argument\n";
          return kExitUsage;
        }
        LocalizedIdeal J = extend_ideal(I, S);
        if (query_text == "extend-member") {
          Verdict v = loc_ideal_membership(J, parse_fraction(S, query_arg),
                                           budget);
          print_verdict("extend-member", v, as_json);
          return verdict_exit(v);
        }
        Verdict v = contract_ideal(J).member(
            parse_element(inst, query_arg).v, budget);
        print_verdict("contract-member", v, as_json);
        return verdict_exit(v);
      }
      std::cerr << "usage error: unknown ideal query '" << query_text << "'\n";
      return kExitUsage;
    }

    if (check_cmd->parsed()) {
      const auto& suites = all_suites();
      SuiteResult r;
      bool found = false;
      for (const auto& [name, fn] : suites) {
        if (name == suite_name) {
          r = fn(seed, samples, workers, budget);
          found = true;
          break;
        }
      }
      if (!found) {
        std::cerr << "usage error: unknown suite '" << suite_name << "'\n";
        return kExitUsage;
      }
      if (as_json) {
        std::cout << suite_json(r).dump(2) << "\n";
      } else {
        std::cout << r.name << " seed=" << r.seed << " samples=" << r.samples
                  << " passed=" << r.passed << " failed=" << r.failures.size()
                  << " " << (r.ok() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
      }
      return r.ok() ? kExitOk : kExitViolation;
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "findec/analytic.hpp"
#include "findec/checks.hpp"
#include "findec/ddl.hpp"
#include "findec/polynomial.hpp"
#include "findec/quasi_shuffle.hpp"
#include "findec/semigroup.hpp"
#include "findec/structure.hpp"

using json = nlohmann::ordered_json;
using namespace findec;

namespace {

int g_exit = 0;

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Resolves a positional semigroup argument: builtin spec, or a path to a
/// multiplication table file.
SemigroupPtr handle_for(const std::string& arg) {
  if (arg.rfind("table:", 0) != 0 && std::filesystem::is_regular_file(arg))
    return builtin("table:" + arg);
  return builtin(arg);
}

json poly_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"term", m.str()}, {"coeff", rat_str(c)}});
  return {{"text", p.str()}, {"terms", terms}};
}

json tensor_json(const TensorPolynomial& t) {
  json terms = json::array();
  for (const auto& [pq, c] : t.terms())
    terms.push_back({{"left", pq.first.str()}, {"right", pq.second.str()}, {"coeff", rat_str(c)}});
  return {{"text", t.str()}, {"terms", terms}};
}

json identity_json(const char* op, const IdentityReport& rep) {
  return {{"op", op},          {"lhs", rep.lhs},
          {"rhs", rep.rhs},    {"difference", rep.diff()},
          {"budget", rep.budget}, {"tol", rep.tol},
          {"expansion", rep.expansion.str()}, {"pass", rep.pass}};
}

void print_identity(const IdentityReport& rep) {
  std::cout << "lhs        = " << fmt_double(rep.lhs) << "\n";
  std::cout << "rhs        = " << fmt_double(rep.rhs) << "\n";
  std::cout << "difference = " << fmt_double(rep.diff()) << "\n";
  std::cout << "budget     = " << fmt_double(rep.budget + rep.tol) << "\n";
  std::cout << "expansion  = " << rep.expansion.str() << "\n";
  std::cout << (rep.pass ? "pass" : "fail") << "\n";
  if (!rep.pass) g_exit = 1;
}

json validation_json(const ValidationReport& rep) {
  json items = json::array();
  for (const CheckItem& it : rep.items)
    items.push_back(
        {{"name", it.name}, {"pass", it.pass}, {"cases", it.cases}, {"witness", it.witness}});
  return {{"bound", rep.bound}, {"exhaustive", rep.exhaustive}, {"pass", rep.ok()},
          {"items", items}};
}

json criterion_json(const CriterionReport& rep) {
  json conds = json::array();
  for (const CriterionVerdict& v : rep.conditions)
    conds.push_back({{"condition", v.condition},
                     {"verdict", v.verdict},
                     {"cases", v.cases},
                     {"witness", v.witness}});
  return {{"bound", rep.bound}, {"pass", rep.all_verified()}, {"conditions", conds}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computer-algebra workbench for finite-decomposition semigroups"};
  app.require_subcommand(1);
  std::string format = "text";

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  // qs -----------------------------------------------------------------
  auto* qs_cmd = app.add_subcommand("qs", "expand a generalized shuffle product");
  std::string qs_kind, qs_u, qs_v;
  qs_cmd->add_option("kind", qs_kind, "shuffle, stuffle, diamond, or ldiag")->required();
  qs_cmd->add_option("u", qs_u, "left word")->required();
  qs_cmd->add_option("v", qs_v, "right word")->required();
  add_format(qs_cmd);
  qs_cmd->callback([&] {
    QsKind kind = qs_kind_from_name(qs_kind);
    Element u = qs_parse_word(kind, qs_u);
    Element v = qs_parse_word(kind, qs_v);
    Polynomial p = quasi_shuffle(kind, u, v);
    if (format == "json") {
      json out = {{"op", "qs"}, {"kind", qs_kind}, {"u", u.str()}, {"v", v.str()},
                  {"result", poly_json(p)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << p.str() << "\n";
    }
  });

  // coprod ---------------------------------------------------------------
  auto* co_cmd = app.add_subcommand("coprod", "coproduct of one basis element");
  std::string co_sg, co_elem;
  co_cmd->add_option("--semigroup", co_sg, "semigroup handle")->required();
  co_cmd->add_option("element", co_elem, "element to split")->required();
  add_format(co_cmd);
  co_cmd->callback([&] {
    SemigroupPtr S = handle_for(co_sg);
    TensorPolynomial t = coproduct(*S, S->parse(co_elem));
    if (format == "json") {
      json out = {{"op", "coprod"}, {"semigroup", S->name()}, {"element", co_elem},
                  {"result", tensor_json(t)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << t.str() << "\n";
    }
  });

  // dual -----------------------------------------------------------------
  auto* dual_cmd = app.add_subcommand("dual", "check <P*Q|R> = <P(x)Q|Delta R>");
  std::string dual_sg, dual_p, dual_q, dual_r;
  dual_cmd->add_option("--semigroup", dual_sg, "semigroup handle")->required();
  dual_cmd->add_option("P", dual_p, "left polynomial")->required();
  dual_cmd->add_option("Q", dual_q, "right polynomial")->required();
  dual_cmd->add_option("R", dual_r, "paired polynomial")->required();
  add_format(dual_cmd);
  dual_cmd->callback([&] {
    SemigroupPtr S = handle_for(dual_sg);
    Polynomial P = parse_polynomial(*S, dual_p);
    Polynomial Q = parse_polynomial(*S, dual_q);
    Polynomial R = parse_polynomial(*S, dual_r);
    DualityReport rep = duality_check(*S, P, Q, R);
    if (format == "json") {
      json out = {{"op", "dual"}, {"semigroup", S->name()}, {"lhs", rat_str(rep.lhs)},
                  {"rhs", rat_str(rep.rhs)}, {"pass", rep.ok()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "<P*Q|R>        = " << rat_str(rep.lhs) << "\n";
      std::cout << "<P(x)Q|Delta R> = " << rat_str(rep.rhs) << "\n";
      std::cout << (rep.ok() ? "pass" : "fail") << "\n";
    }
    if (!rep.ok()) g_exit = 1;
  });

  // conv -----------------------------------------------------------------
  auto* conv_cmd = app.add_subcommand("conv", "convolution of finitely supported functions");
  std::string conv_sg, conv_f, conv_g, conv_at;
  conv_cmd->add_option("--semigroup", conv_sg, "semigroup handle")->required();
  conv_cmd->add_option("f", conv_f, "left function, as a polynomial")->required();
  conv_cmd->add_option("g", conv_g, "right function, as a polynomial")->required();
  conv_cmd->add_option("--at", conv_at, "evaluate only at this element");
  add_format(conv_cmd);
  conv_cmd->callback([&] {
    SemigroupPtr S = handle_for(conv_sg);
    Polynomial f = parse_polynomial(*S, conv_f);
    Polynomial g = parse_polynomial(*S, conv_g);
    if (!conv_at.empty()) {
      Rational v = convolve_at(*S, f, g, S->parse(conv_at));
      if (format == "json") {
        json out = {{"op", "conv"}, {"semigroup", S->name()}, {"at", conv_at},
                    {"value", rat_str(v)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << rat_str(v) << "\n";
      }
      return;
    }
    Polynomial h = convolve(*S, f, g);
    if (format == "json") {
      json out = {{"op", "conv"}, {"semigroup", S->name()}, {"result", poly_json(h)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << h.str() << "\n";
    }
  });

  // ddl -----------------------------------------------------------------
  auto* ddl_cmd = app.add_subcommand("ddl", "disjoint direct limits");
  ddl_cmd->require_subcommand(1);
  std::string ddl_spec, ddl_x, ddl_y;
  long long ddl_bound = 8;

  auto* ddl_check = ddl_cmd->add_subcommand("check", "validate axioms and criterion conditions");
  ddl_check->add_option("system", ddl_spec, "fig1, defect-i/ii/iii, or a .ddl file")->required();
  ddl_check->add_option("--bound", ddl_bound, "ball radius for infinite systems");
  add_format(ddl_check);
  ddl_check->callback([&] {
    DdlSystem sys = resolve_ddl(ddl_spec);
    ValidationReport val = validate_system(sys, ddl_bound);
    CriterionReport crit = fd_criterion_check(sys, ddl_bound);
    bool pass = val.ok() && crit.all_verified();
    if (format == "json") {
      json out = {{"op", "ddl-check"}, {"system", sys.name}, {"validation", validation_json(val)},
                  {"criterion", criterion_json(crit)}, {"pass", pass}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "system: " << sys.name << "\n";
      for (const CheckItem& it : val.items) {
        std::cout << "axiom " << it.name << ": " << (it.pass ? "pass" : "fail") << " ("
                  << it.cases << " cases)";
        if (!it.pass) std::cout << " witness: " << it.witness;
        std::cout << "\n";
      }
      for (const CriterionVerdict& v : crit.conditions) {
        std::cout << "condition (" << v.condition << "): " << v.verdict << " (" << v.cases
                  << " cases)";
        if (!v.witness.empty()) std::cout << " witness: " << v.witness;
        std::cout << "\n";
      }
      std::cout << (pass ? "pass" : "fail") << "\n";
    }
    if (!pass) g_exit = 1;
  });

  auto* ddl_demo = ddl_cmd->add_subcommand("demo", "enumerate a system's ball");
  ddl_demo->add_option("system", ddl_spec, "fig1, defect-i/ii/iii, or a .ddl file")->required();
  ddl_demo->add_option("--bound", ddl_bound, "ball radius");
  add_format(ddl_demo);
  ddl_demo->callback([&] {
    DdlSystem sys = resolve_ddl(ddl_spec);
    const auto labels = sys.index.labels_up_to(ddl_bound);
    if (format == "json") {
      json comps = json::array();
      for (const auto& l : labels)
        comps.push_back({{"label", l}, {"component", sys.component(l)->name()}});
      json ball = json::array();
      for (const Element& x : sys.ball(ddl_bound)) ball.push_back(x.str());
      json out = {{"op", "ddl-demo"}, {"system", sys.name},
                  {"index", sys.index.description}, {"components", comps}, {"ball", ball}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "system: " << sys.name << "\n";
      std::cout << "index: " << sys.index.description << "\n";
      for (const auto& l : labels)
        std::cout << "component " << l << ": " << sys.component(l)->name() << "\n";
      std::cout << "ball at bound " << ddl_bound << ":";
      for (const Element& x : sys.ball(ddl_bound)) std::cout << " " << x.str();
      std::cout << "\n";
    }
  });

  auto* ddl_mul = ddl_cmd->add_subcommand("mul", "multiply two glued elements");
  ddl_mul->add_option("system", ddl_spec, "fig1, defect-i/ii/iii, or a .ddl file")->required();
  ddl_mul->add_option("x", ddl_x, "left element, \"(label|element)\"")->required();
  ddl_mul->add_option("y", ddl_y, "right element, \"(label|element)\"")->required();
  add_format(ddl_mul);
  ddl_mul->callback([&] {
    DdlSystem sys = resolve_ddl(ddl_spec);
    Element z = sys.mul(sys.parse(ddl_x), sys.parse(ddl_y));
    if (format == "json") {
      json out = {{"op", "ddl-mul"}, {"system", sys.name}, {"x", ddl_x}, {"y", ddl_y},
                  {"result", z.str()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << z.str() << "\n";
    }
  });

  // peel -----------------------------------------------------------------
  auto* peel_cmd = app.add_subcommand("peel", "strip unit groups off a monoid");
  std::string peel_sg;
  bool peel_verify = false, peel_rebuild = false;
  long long peel_bound = 8;
  peel_cmd->add_option("semigroup", peel_sg, "builtin handle or table file")->required();
  peel_cmd->add_flag("--verify", peel_verify, "check the full decomposition story");
  peel_cmd->add_flag("--rebuild", peel_rebuild, "reglue the layers and compare tables");
  peel_cmd->add_option("--bound", peel_bound, "ball radius for infinite handles");
  add_format(peel_cmd);
  peel_cmd->callback([&] {
    SemigroupPtr S = handle_for(peel_sg);
    if (peel_rebuild) {
      RebuildResult R = rebuild_as_ddl(S);
      if (format == "json") {
        json out = {{"op", "peel-rebuild"}, {"semigroup", S->name()},
                    {"layers", static_cast<long long>(R.peeling.layers.size())},
                    {"products", R.cases}, {"tables_match", R.tables_match}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "layers: " << R.peeling.layers.size() << "\n";
        std::cout << "products compared: " << R.cases << "\n";
        std::cout << (R.tables_match ? "tables match" : "tables differ") << "\n";
      }
      if (!R.tables_match) g_exit = 1;
      return;
    }
    if (peel_verify) {
      StructureReport rep = verify_structure_theorem(S, peel_bound);
      if (format == "json") {
        json items = json::array();
        for (const CheckItem& it : rep.items)
          items.push_back({{"name", it.name}, {"pass", it.pass}, {"cases", it.cases},
                           {"witness", it.witness}});
        json out = {{"op", "peel-verify"}, {"semigroup", S->name()},
                    {"exhaustive", rep.bound == 0}, {"pass", rep.ok()}, {"items", items}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (const CheckItem& it : rep.items) {
          std::cout << it.name << ": " << (it.pass ? "pass" : "fail") << " (" << it.cases
                    << " cases)";
          if (!it.pass) std::cout << " witness: " << it.witness;
          std::cout << "\n";
        }
        std::cout << (rep.ok() ? "pass" : "fail") << "\n";
      }
      if (!rep.ok()) g_exit = 1;
      return;
    }
    PeelingResult P = peel(S);
    if (format == "json") {
      json layers = json::array();
      for (const PeelLayer& L : P.layers) {
        json members = json::array();
        if (L.group->finite())
          for (const Element& x : L.group->elements()) members.push_back(x.str());
        layers.push_back({{"index", L.index}, {"neutral", L.neutral.str()},
                          {"elements", members}});
      }
      json term;
      if (P.terminal_empty()) {
        term = nullptr;
      } else if (P.finite) {
        json members = json::array();
        for (const Element& x : P.terminal_elements) members.push_back(x.str());
        term = {{"elements", members}};
      } else {
        term = {{"handle", P.terminal->name()}};
      }
      json out = {{"op", "peel"}, {"semigroup", S->name()}, {"layers", layers},
                  {"terminal", term}};
      std::cout << out.dump(2) << "\n";
    } else {
      for (const PeelLayer& L : P.layers) {
        std::cout << "layer " << L.index << " (neutral " << L.neutral.str() << "):";
        if (L.group->finite())
          for (const Element& x : L.group->elements()) std::cout << " " << x.str();
        else
          std::cout << " " << L.group->name();
        std::cout << "\n";
      }
      if (P.terminal_empty()) {
        std::cout << "terminal: empty\n";
      } else if (P.finite) {
        std::cout << "terminal:";
        for (const Element& x : P.terminal_elements) std::cout << " " << x.str();
        std::cout << "\n";
      } else {
        std::cout << "terminal: " << P.terminal->name() << "\n";
      }
    }
  });

  // chen -----------------------------------------------------------------
  auto* chen_cmd = app.add_subcommand("chen", "product rule for polylogarithm series");
  std::string chen_u, chen_v;
  double chen_z = 0.5, chen_tol = 1e-8;
  long long chen_N = 2000;
  chen_cmd->add_option("--u", chen_u, "left word over x0, x1")->required();
  chen_cmd->add_option("--v", chen_v, "right word over x0, x1")->required();
  chen_cmd->add_option("--z", chen_z, "evaluation point in (0,1)");
  chen_cmd->add_option("--N", chen_N, "truncation order");
  chen_cmd->add_option("--tol", chen_tol, "extra tolerance on top of the budget");
  add_format(chen_cmd);
  chen_cmd->callback([&] {
    IdentityReport rep =
        chen_check(parse_word_elem(chen_u), parse_word_elem(chen_v), chen_z, chen_N, chen_tol);
    if (format == "json")
      std::cout << identity_json("chen", rep).dump(2) << "\n";
    else
      print_identity(rep);
    if (!rep.pass) g_exit = 1;
  });

  // zeta -----------------------------------------------------------------
  auto* zeta_cmd = app.add_subcommand("zeta", "nested zeta series");
  std::string zeta_s, zeta_t;
  long long zeta_N = 10000;
  double zeta_tol = 1e-10;
  zeta_cmd->add_option("s", zeta_s, "composition, e.g. \"2,2\" (leading entry >= 2)")
      ->required();
  zeta_cmd->add_option("--N", zeta_N, "truncation order");
  zeta_cmd->add_option("--stuffle", zeta_t, "check zeta(s)*zeta(t) against the expansion");
  zeta_cmd->add_option("--tol", zeta_tol, "extra tolerance on top of the budget");
  add_format(zeta_cmd);
  zeta_cmd->callback([&] {
    Element s = parse_composition_elem(zeta_s);
    if (!zeta_t.empty()) {
      IdentityReport rep = stuffle_check(s, parse_composition_elem(zeta_t), zeta_N, zeta_tol);
      if (format == "json")
        std::cout << identity_json("zeta-stuffle", rep).dump(2) << "\n";
      else
        print_identity(rep);
      if (!rep.pass) g_exit = 1;
      return;
    }
    SeriesValue v = zeta(s, zeta_N);
    if (format == "json") {
      json out = {{"op", "zeta"}, {"s", s.str()}, {"N", zeta_N}, {"value", v.value},
                  {"bound", v.bound}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "zeta" << s.str() << " = " << fmt_double(v.value) << "\n";
      std::cout << "tail bound <= " << fmt_double(v.bound) << "\n";
    }
  });

  // check (whole suite) ----------------------------------------------------
  auto* check_cmd = app.add_subcommand("check", "run every module's invariant sweep");
  long long check_bound = 12;
  unsigned long long check_seed = 1;
  std::string check_exec = "parallel", check_fixtures;
  check_cmd->add_option("--bound", check_bound, "effort bound (0 runs zero cases)");
  check_cmd->add_option("--seed", check_seed, "seed for the randomized polynomial cases");
  check_cmd->add_option("--exec", check_exec, "serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));
  check_cmd->add_option("--fixtures", check_fixtures, "directory with good/ and defects/ files");
  add_format(check_cmd);
  check_cmd->callback([&] {
    auto reports = check_all(check_bound, exec_from_name(check_exec), check_seed, check_fixtures);
    long long failures = 0, cases = 0;
    for (const CheckReport& r : reports) {
      failures += r.failure_count;
      cases += r.cases;
    }
    if (format == "json") {
      json reps = json::array();
      for (const CheckReport& r : reports) {
        json fs = json::array();
        for (const std::string& f : r.failures) fs.push_back(f);
        reps.push_back({{"name", r.name}, {"cases", r.cases}, {"pass", r.pass()},
                        {"failures", fs}});
      }
      json out = {{"op", "check"}, {"bound", check_bound}, {"seed", check_seed},
                  {"exec", check_exec}, {"reports", reps}, {"pass", failures == 0}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "seed " << check_seed << ", bound " << check_bound << ", " << check_exec
                << "\n";
      for (const CheckReport& r : reports) {
        std::cout << r.name << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.cases
                  << " cases)\n";
        for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
      }
      if (check_bound == 0) std::cout << "warning: bound 0, all sweeps ran 0 cases\n";
      if (failures == 0)
        std::cout << "all checks passed (" << cases << " cases)\n";
      else
        std::cout << "FAILED: " << failures << " case(s) across the suite\n";
    }
    if (failures != 0) g_exit = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}

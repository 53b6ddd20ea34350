#ifndef CNSS_CLI_HPP
#define CNSS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cnss/boolean_parity.hpp"
#include "cnss/chevalley.hpp"
#include "cnss/cnss_core.hpp"
#include "cnss/common.hpp"
#include "cnss/exclusion.hpp"
#include "cnss/field.hpp"
#include "cnss/graph.hpp"
#include "cnss/parse.hpp"
#include "cnss/polynomial.hpp"
#include "cnss/report.hpp"
#include "cnss/verify.hpp"

namespace cnss {

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err, Report* captured = nullptr);

namespace detail {

/// Arguments like --grid/--system/--graph accept either a file path or inline
/// text (with ';' standing in for newlines). A readable file wins.
inline std::string read_text_argument(const std::string& value) {
  std::ifstream in(value);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string text = value;
  for (char& c : text) {
    if (c == ';') c = '\n';
  }
  return text;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(item, &used);
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error("invalid integer '" + item + "' in list '" + s + "'");
    }
  }
  if (out.empty()) throw Error("expected a comma-separated integer list, got '" + s + "'");
  return out;
}

inline std::vector<std::uint32_t> parse_residue_point(const std::string& s,
                                                      const PrimeField& field) {
  std::vector<std::uint32_t> out;
  for (std::int64_t v : parse_int_list(s)) {
    out.push_back(Fp::from_signed(v, field).value());
  }
  return out;
}

/// 1-based vertex list from the command line to the library's 0-based form.
inline std::vector<std::uint32_t> parse_vertex_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  for (std::int64_t v : parse_int_list(s)) {
    if (v < 1) throw Error("vertex indices are 1-based, got " + std::to_string(v));
    out.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return out;
}

inline nlohmann::json vertices_to_json(const std::vector<std::uint32_t>& zero_based) {
  nlohmann::json a = nlohmann::json::array();
  for (std::uint32_t v : zero_based) a.push_back(v + 1);
  return a;
}

inline nlohmann::json point_to_json(const std::vector<Fp>& point) {
  nlohmann::json a = nlohmann::json::array();
  for (const Fp& v : point) a.push_back(v.value());
  return a;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err, Report* captured) {
  CLI::App app{"Combinatorial Nullstellensatz toolkit over prime fields"};
  app.name("cnss");

  std::uint32_t p_flag = 0;
  std::int64_t n_flag = -1;
  bool json_flag = false;
  std::uint64_t seed_flag = 20260814;
  std::uint64_t budget_flag = 0;
  app.add_option("-p,--prime", p_flag, "prime modulus of the field F_p");
  app.add_option("-n,--arity", n_flag, "number of variables x1..xn")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json_flag, "emit the report as JSON instead of text");
  app.add_option("--seed", seed_flag, "seed for randomized suites")
      ->capture_default_str();
  app.add_option("--budget", budget_flag,
                 "override the enumeration budget (0 = module defaults)");
  app.require_subcommand(1);

  auto need_field = [&]() -> PrimeField {
    if (p_flag == 0) throw Error("the -p/--prime flag is required for this subcommand");
    return PrimeField(p_flag);
  };
  auto need_arity = [&]() -> std::size_t {
    if (n_flag < 0) throw Error("the -n/--arity flag is required for this subcommand");
    return static_cast<std::size_t>(n_flag);
  };
  auto field_budget = [&] { return budget_flag ? budget_flag : kFieldPointBudget; };
  auto cube_budget = [&] { return budget_flag ? budget_flag : kCubeBudget; };
  auto subset_budget = [&] { return budget_flag ? budget_flag : kSubsetBudget; };
  auto finish = [&](Report& r) -> int {
    if (captured) *captured = r;
    emit_report(r, json_flag, out);
    return r.all_passed() ? 0 : 1;
  };

  // --- eval ------------------------------------------------------------
  std::string eval_expr, eval_at;
  std::int64_t eval_expect = 0;
  CLI::App* eval_sub = app.add_subcommand("eval", "evaluate a polynomial at a point");
  eval_sub->fallthrough();
  eval_sub->add_option("expr", eval_expr, "polynomial expression")->required();
  eval_sub->add_option("--at", eval_at, "comma-separated point coordinates")->required();
  CLI::Option* expect_opt =
      eval_sub->add_option("--expect", eval_expect, "assert the value equals this residue");

  // --- reduce ----------------------------------------------------------
  std::string reduce_expr, reduce_mode = "field";
  CLI::App* reduce_sub =
      app.add_subcommand("reduce", "apply an evaluation-preserving exponent reduction");
  reduce_sub->fallthrough();
  reduce_sub->add_option("expr", reduce_expr, "polynomial expression")->required();
  reduce_sub->add_option("--mode", reduce_mode, "field: exponents to [1, p-1]; boolean: to 1")
      ->check(CLI::IsMember({"field", "boolean"}));

  // --- supp ------------------------------------------------------------
  std::string supp_expr;
  bool supp_maximal = false;
  CLI::App* supp_sub = app.add_subcommand("supp", "list the support of a polynomial");
  supp_sub->fallthrough();
  supp_sub->add_option("expr", supp_expr, "polynomial expression")->required();
  supp_sub->add_flag("--maximal", supp_maximal,
                     "only the maximal exponent vectors (componentwise order)");

  // --- witness ---------------------------------------------------------
  std::string witness_expr, witness_grid;
  CLI::App* witness_sub =
      app.add_subcommand("witness", "search a grid for a point where f is nonzero");
  witness_sub->fallthrough();
  witness_sub->add_option("expr", witness_expr, "polynomial expression")->required();
  witness_sub
      ->add_option("--grid", witness_grid,
                   "grid file or inline sets ('0,1;0,1'), or 'full'")
      ->required();

  // --- exclude ---------------------------------------------------------
  std::string exclude_kind, exclude_expr, exclude_at;
  CLI::App* exclude_sub =
      app.add_subcommand("exclude", "construct an exclusion polynomial");
  exclude_sub->fallthrough();
  exclude_sub
      ->add_option("--kind", exclude_kind, "point, boolean, subset, axis, or inverse")
      ->required()
      ->check(CLI::IsMember({"point", "boolean", "subset", "axis", "inverse"}));
  exclude_sub->add_option("expr", exclude_expr, "polynomial to cancel (kind=point)");
  exclude_sub->add_option("--at", exclude_at,
                          "target point (residues for point, 0/1 bits otherwise)");

  // --- chevalley --------------------------------------------------------
  std::string chev_system, chev_known_root;
  CLI::App* chev_sub =
      app.add_subcommand("chevalley", "root counting and residue prediction");
  chev_sub->fallthrough();
  chev_sub->require_subcommand(1);
  chev_sub->add_option("--system", chev_system, "system file or inline 'p=3 n=2;x1*x2'")
      ->required();
  CLI::App* chev_count = chev_sub->add_subcommand("count", "brute-force common-root count");
  CLI::App* chev_warning =
      chev_sub->add_subcommand("warning", "Chevalley-Warning divisibility check");
  chev_warning->add_option("--known-root", chev_known_root,
                           "a known common root; asserts a second one exists");
  CLI::App* chev_classify =
      chev_sub->add_subcommand("classify", "+1/-1/0 classification when deg sum <= n");
  CLI::App* chev_predict =
      chev_sub->add_subcommand("predict", "residue prediction from the reduced indicator");
  for (CLI::App* s : {chev_count, chev_warning, chev_classify, chev_predict}) {
    s->fallthrough();
  }

  // --- parity -----------------------------------------------------------
  std::string parity_expr, parity_system;
  std::int64_t parity_set_size = -1;
  CLI::App* parity_sub =
      app.add_subcommand("parity", "Boolean-cube parity theorems");
  parity_sub->fallthrough();
  parity_sub->require_subcommand(1);
  CLI::App* parity_t6 = parity_sub->add_subcommand(
      "t6", "parity balance of the nonzero and zero sets");
  CLI::App* parity_t7 =
      parity_sub->add_subcommand("t7", "parity difference identity (-1)^n d");
  CLI::App* parity_t8 =
      parity_sub->add_subcommand("t8", "multiple-values and coefficient-law checks");
  for (CLI::App* s : {parity_t6, parity_t7, parity_t8}) {
    s->fallthrough();
    s->add_option("expr", parity_expr, "polynomial expression")->required();
  }
  CLI::App* parity_cor = parity_sub->add_subcommand(
      "corollary", "shared-roots parity corollary (optionally over a ground set)");
  parity_cor->fallthrough();
  parity_cor->add_option("--system", parity_system, "system file or inline text")
      ->required();
  parity_cor->add_option("--set-size", parity_set_size,
                         "ground-set size |A| for the subset form")
      ->check(CLI::NonNegativeNumber);

  // --- graph ------------------------------------------------------------
  std::string graph_file, graph_vertices;
  std::int64_t graph_k = 0;
  std::int64_t graph_d = 3;
  CLI::App* graph_sub = app.add_subcommand("graph", "graph applications");
  graph_sub->fallthrough();
  graph_sub->require_subcommand(1);
  graph_sub->add_option("--graph", graph_file, "graph file or inline 'n=4;1 2;2 3'")
      ->required();
  CLI::App* graph_degree = graph_sub->add_subcommand(
      "degree-poly", "edge-subset polynomial for degree ≡ k (mod p)");
  CLI::App* graph_t9 =
      graph_sub->add_subcommand("t9", "parity balance of qualifying edge subsets");
  CLI::App* graph_nbr = graph_sub->add_subcommand(
      "neighborhood", "exploratory vertex-neighborhood condition counts");
  CLI::App* graph_cliques =
      graph_sub->add_subcommand("cliques", "d-clique counts K(I) by vertex subset");
  CLI::App* graph_clique_poly = graph_sub->add_subcommand(
      "clique-poly", "vertex-subset polynomial for intersecting-clique counts");
  CLI::App* graph_prop62 = graph_sub->add_subcommand(
      "prop62", "search a nonempty U with intersecting-clique count ≡ 0 (mod p)");
  for (CLI::App* s : {graph_degree, graph_t9, graph_nbr, graph_cliques,
                      graph_clique_poly, graph_prop62}) {
    s->fallthrough();
  }
  for (CLI::App* s : {graph_degree, graph_t9, graph_nbr, graph_clique_poly}) {
    s->add_option("-k,--residue", graph_k, "target residue k")->capture_default_str();
  }
  for (CLI::App* s : {graph_cliques, graph_clique_poly, graph_prop62}) {
    s->add_option("-d,--clique-size", graph_d, "clique size d >= 2")
        ->capture_default_str();
  }
  for (CLI::App* s : {graph_degree, graph_t9, graph_nbr, graph_cliques}) {
    s->add_option("--vertices", graph_vertices, "1-based vertex subset, e.g. 1,2,4");
  }

  // --- verify -----------------------------------------------------------
  CLI::App* verify_sub =
      app.add_subcommand("verify", "run the full property and acceptance suite");
  verify_sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cnss");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval_sub) {
      PrimeField field = need_field();
      std::size_t n = need_arity();
      Polynomial f = parse_polynomial(eval_expr, field, n);
      std::vector<std::uint32_t> at = detail::parse_residue_point(eval_at, field);
      if (at.size() != n) {
        throw Error("--at has " + std::to_string(at.size()) + " coordinates, expected " +
                    std::to_string(n));
      }
      std::uint32_t value = f.eval_residues(at);

      Report r;
      r.command = "eval";
      r.inputs = {{"p", field.modulus()}, {"n", n}, {"expr", eval_expr}, {"at", at}};
      r.result = {{"value", value}};
      if (expect_opt->count() > 0) {
        std::uint32_t want = Fp::from_signed(eval_expect, field).value();
        r.result["expected"] = want;
        r.add_assertion("value matches --expect", value == want);
      }
      out << value << "\n";
      return finish(r);
    }

    if (*reduce_sub) {
      PrimeField field = need_field();
      std::size_t n = need_arity();
      const std::uint32_t p = field.modulus();
      Polynomial f = parse_polynomial(reduce_expr, field, n);
      bool boolean_mode = reduce_mode == "boolean";
      Polynomial g = boolean_mode ? reduce_boolean(f) : reduce_field(f);

      Report r;
      r.command = "reduce";
      r.inputs = {{"p", p}, {"n", n}, {"expr", reduce_expr}, {"mode", reduce_mode}};
      r.result = {{"reduced", format_polynomial(g)},
                  {"terms_before", f.term_count()},
                  {"terms_after", g.term_count()}};

      std::uint32_t exp_bound = boolean_mode ? 1 : p - 1;
      bool exponents_ok = true;
      for (const auto& [m, c] : g.terms()) {
        for (std::uint32_t e : m.exponents()) {
          if (e > exp_bound) exponents_ok = false;
        }
      }
      r.add_assertion(boolean_mode ? "reduced polynomial is multilinear"
                                   : "reduced exponents lie in [0, p-1]",
                      exponents_ok);

      const std::uint32_t radix = boolean_mode ? 2 : p;
      std::uint64_t points = 1;
      for (std::size_t i = 0; i < n; ++i) {
        points = detail::saturating_mul(points, radix);
      }
      std::uint64_t budget = boolean_mode ? cube_budget() : field_budget();
      const std::string claim = boolean_mode
                                    ? "reduction preserves evaluation on {0,1}^n"
                                    : "reduction preserves evaluation on F_p^n";
      if (points <= budget) {
        bool agree = true;
        detail::for_each_tuple(radix, n, [&](const std::vector<std::uint32_t>& x) {
          if (f.eval_residues(x) != g.eval_residues(x)) agree = false;
        });
        r.add_assertion(claim, agree);
      } else {
        r.add_not_applicable(claim + std::string(" (domain exceeds budget)"));
      }
      return finish(r);
    }

    if (*supp_sub) {
      PrimeField field = need_field();
      std::size_t n = need_arity();
      Polynomial f = parse_polynomial(supp_expr, field, n);
      std::vector<Monomial> monomials = supp_maximal ? support_maximal(f) : support(f);

      Report r;
      r.command = "supp";
      r.inputs = {{"p", field.modulus()}, {"n", n}, {"expr", supp_expr},
                  {"maximal", supp_maximal}};
      nlohmann::json list = nlohmann::json::array();
      for (const Monomial& m : monomials) {
        std::string mono = format_monomial(m);
        if (mono.empty()) mono = "1";  // the constant monomial
        list.push_back(mono);
        out << mono << "\n";
      }
      r.result = {{"support", list}, {"count", monomials.size()}};
      return finish(r);
    }

    if (*witness_sub) {
      PrimeField field = need_field();
      std::size_t n = need_arity();
      Polynomial f = parse_polynomial(witness_expr, field, n);
      Grid grid = Grid::parse(detail::read_text_argument(witness_grid), field, n);
      bool hypothesis = generalized_hypothesis(f, grid);
      std::optional<Witness> w = find_witness(f, grid, field_budget());

      Report r;
      r.command = "witness";
      r.inputs = {{"p", field.modulus()}, {"n", n}, {"expr", witness_expr},
                  {"grid", witness_grid}};
      r.result = {{"generalized_hypothesis", hypothesis}, {"found", w.has_value()}};
      if (hypothesis) {
        r.add_assertion("grid admits a witness (generalized hypothesis)", w.has_value());
      } else {
        r.add_not_applicable("grid admits a witness (generalized hypothesis)");
      }
      if (w) {
        r.result["point"] = detail::point_to_json(w->point);
        r.result["value"] = w->value.value();
        r.certificate = nlohmann::json::object(
            {{"point", detail::point_to_json(w->point)}, {"value", w->value.value()}});
        r.add_assertion("witness re-evaluates to its nonzero value",
                        !w->value.is_zero() && f.eval(w->point) == w->value);
      }
      return finish(r);
    }

    if (*exclude_sub) {
      PrimeField field = need_field();
      const std::uint32_t p = field.modulus();
      Report r;
      r.command = "exclude";
      r.inputs = {{"p", p}, {"kind", exclude_kind}};

      if (exclude_kind == "point") {
        std::size_t n = need_arity();
        if (exclude_expr.empty()) throw Error("kind=point requires a polynomial expression");
        if (exclude_at.empty()) throw Error("kind=point requires --at");
        Polynomial f = parse_polynomial(exclude_expr, field, n);
        std::vector<std::uint32_t> c = detail::parse_residue_point(exclude_at, field);
        if (c.size() != n) {
          throw Error("--at has " + std::to_string(c.size()) + " coordinates, expected " +
                      std::to_string(n));
        }
        std::vector<Fp> point;
        for (std::uint32_t v : c) point.emplace_back(v, field);
        Polynomial g = exclude_point(f, point);

        r.inputs["n"] = n;
        r.inputs["expr"] = exclude_expr;
        r.inputs["at"] = c;
        std::uint32_t fc = f.eval_residues(c);
        std::uint32_t gc = g.eval_residues(c);
        r.result = {{"polynomial", format_polynomial(g)}, {"f_at_target", fc},
                    {"g_at_target", gc}};
        r.add_assertion("exclusion cancels f at the target",
                        gc == detail::neg_mod(fc, p) && (f + g).eval_residues(c) == 0);
        std::uint64_t points = 1;
        for (std::size_t i = 0; i < n; ++i) points = detail::saturating_mul(points, p);
        if (points <= field_budget()) {
          bool vanishes = true;
          detail::for_each_tuple(p, n, [&](const std::vector<std::uint32_t>& x) {
            if (x != c && g.eval_residues(x) != 0) vanishes = false;
          });
          r.add_assertion("exclusion vanishes off the target", vanishes);
        } else {
          r.add_not_applicable("exclusion vanishes off the target (domain exceeds budget)");
        }
        out << format_polynomial(g) << "\n";
      } else if (exclude_kind == "boolean" || exclude_kind == "subset") {
        if (exclude_at.empty()) throw Error("kind=" + exclude_kind + " requires --at");
        std::vector<std::int64_t> raw = detail::parse_int_list(exclude_at);
        std::vector<std::uint8_t> bits;
        for (std::int64_t v : raw) {
          if (v != 0 && v != 1) throw Error("--at must be a 0/1 vector for this kind");
          bits.push_back(static_cast<std::uint8_t>(v));
        }
        if (n_flag >= 0 && static_cast<std::size_t>(n_flag) != bits.size()) {
          throw Error("--at has " + std::to_string(bits.size()) +
                      " coordinates, expected " + std::to_string(n_flag));
        }
        BooleanPoint b(bits);
        const std::size_t n = b.arity();
        bool boolean_kind = exclude_kind == "boolean";
        Polynomial g = boolean_kind ? exclude_boolean_point(b, field)
                                    : exclude_indicator_subset(b, field);
        r.inputs["n"] = n;
        r.inputs["at"] = raw;
        r.result = {{"polynomial", format_polynomial(g)}, {"ones", b.ones()}};

        std::uint32_t at_target = boolean_kind
                                      ? p - 1
                                      : ((n - b.ones()) % 2 == 0 ? 1 % p
                                                                 : detail::neg_mod(1 % p, p));
        const std::string claim =
            boolean_kind ? "exclusion equals p-1 at the target and 0 elsewhere on the cube"
                         : "product equals (-1)^(n-k) at the target and 0 elsewhere on the cube";
        if (n <= 32 && (std::uint64_t{1} << n) <= cube_budget()) {
          detail::CubeEvaluator eval(g);
          std::uint32_t target_mask = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (bits[i]) target_mask |= (std::uint32_t{1} << i);
          }
          bool ok = true;
          for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            std::uint32_t v = eval.eval_mask(mask);
            if (v != (mask == target_mask ? at_target : 0)) ok = false;
          }
          r.add_assertion(claim, ok);
        } else {
          r.add_not_applicable(claim + std::string(" (cube exceeds budget)"));
        }
        out << format_polynomial(g) << "\n";
      } else if (exclude_kind == "axis" || exclude_kind == "inverse") {
        bool axis = exclude_kind == "axis";
        Polynomial g = axis ? axis_zero_exclusion(field) : inverse_pair_exclusion(field);
        r.inputs["n"] = 2;
        r.result = {{"polynomial", format_polynomial(g)}};
        const std::string claim =
            axis ? "polynomial takes value a at (a,0), b at (0,b), 0 elsewhere"
                 : "polynomial equals a^2 on the line a+b=0 and 0 elsewhere";
        if (detail::saturating_mul(p, p) <= field_budget()) {
          bool ok = true;
          for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) {
              std::uint32_t v = g.eval_residues({a, b});
              std::uint32_t want;
              if (axis) {
                want = (b == 0) ? a : (a == 0 ? b : 0);
              } else {
                want = ((a + b) % p == 0) ? detail::mul_mod(a, a, p) : 0;
              }
              if (v != want) ok = false;
            }
          }
          r.add_assertion(claim, ok);
        } else {
          r.add_not_applicable(claim + std::string(" (domain exceeds budget)"));
        }
        out << format_polynomial(g) << "\n";
      }
      return finish(r);
    }

    if (*chev_sub) {
      PolySystem sys = PolySystem::parse(detail::read_text_argument(chev_system));
      const std::uint32_t p = sys.field().modulus();
      const std::size_t n = sys.arity();
      Report r;
      r.inputs = {{"system", chev_system}, {"p", p}, {"n", n}, {"size", sys.size()}};

      std::uint64_t points = 1;
      for (std::size_t i = 0; i < n; ++i) points = detail::saturating_mul(points, p);

      if (*chev_count) {
        r.command = "chevalley count";
        std::uint64_t count = count_common_roots(sys, field_budget());
        r.result = {{"count", count}, {"residue", count % p}};
        out << count << "\n";
      } else if (*chev_warning) {
        r.command = "chevalley warning";
        std::optional<std::vector<Fp>> known;
        if (!chev_known_root.empty()) {
          std::vector<Fp> root;
          for (std::uint32_t v : detail::parse_residue_point(chev_known_root,
                                                             sys.field())) {
            root.emplace_back(v, sys.field());
          }
          known = std::move(root);
          r.inputs["known_root"] = detail::point_to_json(*known);
        }
        WarningReport rep = warning_check(sys, known, field_budget());
        r.result = {{"root_count", rep.root_count}, {"divisible", rep.divisible}};
        r.add_assertion("common-root count is divisible by p", rep.divisible);
        if (known) {
          if (rep.second_root) {
            r.result["second_root"] = detail::point_to_json(*rep.second_root);
            r.certificate = nlohmann::json::object(
                {{"second_root", detail::point_to_json(*rep.second_root)}});
          }
          r.add_assertion("a second distinct common root exists",
                          rep.second_root.has_value());
        }
      } else if (*chev_classify) {
        r.command = "chevalley classify";
        ResiduePrediction pred = theorem4_classify(sys);
        r.result = {{"predicted", pred.predicted}, {"rule", to_string(pred.rule)},
                    {"q", pred.certificate}};
        r.certificate = nlohmann::json::object({{"q", pred.certificate}});
        if (points <= field_budget()) {
          std::uint64_t count = count_common_roots(sys, field_budget());
          r.result["oracle"] = count;
          r.add_assertion("classification matches the brute-force count mod p",
                          count % p == pred.predicted);
        } else {
          r.add_not_applicable(
              "classification matches the brute-force count mod p (exceeds budget)");
        }
      } else if (*chev_predict) {
        r.command = "chevalley predict";
        ResiduePrediction pred = theorem5_predict(sys);
        r.result = {{"predicted", pred.predicted}, {"rule", to_string(pred.rule)},
                    {"d", pred.certificate}};
        r.certificate = nlohmann::json::object({{"d", pred.certificate}});
        if (points <= field_budget()) {
          std::uint64_t count = count_common_roots(sys, field_budget());
          r.result["oracle"] = count;
          r.add_assertion("prediction matches the brute-force count mod p",
                          count % p == pred.predicted);
        } else {
          r.add_not_applicable(
              "prediction matches the brute-force count mod p (exceeds budget)");
        }
      }
      return finish(r);
    }

    if (*parity_sub) {
      Report r;
      if (*parity_t6 || *parity_t7 || *parity_t8) {
        PrimeField field = need_field();
        std::size_t n = need_arity();
        Polynomial f = parse_polynomial(parity_expr, field, n);
        r.inputs = {{"p", field.modulus()}, {"n", n}, {"expr", parity_expr}};

        if (*parity_t6) {
          r.command = "parity t6";
          Theorem6Report rep = theorem6_check(f, cube_budget());
          r.result = {{"hypothesis_holds", rep.hypothesis_holds},
                      {"hypothesis_holds_reduced", rep.hypothesis_holds_reduced},
                      {"nonzero_even", rep.nonzero.even_count},
                      {"nonzero_odd", rep.nonzero.odd_count},
                      {"zero_even", rep.zero.even_count},
                      {"zero_odd", rep.zero.odd_count}};
          if (rep.hypothesis_holds) {
            r.add_assertion("nonzero set is parity-balanced mod p",
                            rep.nonzero_balanced.value_or(false));
            r.add_assertion("zero set is parity-balanced mod p",
                            rep.zero_balanced.value_or(false));
          } else {
            r.add_not_applicable("nonzero set is parity-balanced mod p");
            r.add_not_applicable("zero set is parity-balanced mod p");
          }
        } else if (*parity_t7) {
          r.command = "parity t7";
          Theorem7Report rep = theorem7_predict(f, cube_budget());
          r.result = {{"d", rep.d},
                      {"d_field", rep.d_field},
                      {"reductions_agree", rep.reductions_agree},
                      {"predicted", rep.predicted},
                      {"nonzero_even", rep.nonzero.even_count},
                      {"nonzero_odd", rep.nonzero.odd_count},
                      {"difference", rep.nonzero.difference_mod_p()}};
          r.certificate = nlohmann::json::object({{"d", rep.d}});
          r.add_assertion("nonzero-set parity difference equals (-1)^n d (mod p)",
                          rep.identity_holds);
        } else {
          r.command = "parity t8";
          Theorem8Report rep = theorem8_analyze(f, field_budget());
          r.result = {{"nonzero_count", rep.nonzero_count},
                      {"reduced_has_top_term", rep.reduced_has_top_term},
                      {"reduced_is_zero", rep.reduced_is_zero},
                      {"top_coefficient", rep.top_coefficient}};
          if (rep.unique_point) {
            r.result["unique_point"] = detail::point_to_json(*rep.unique_point);
            r.result["unique_value"] = rep.unique_value;
          }
          if (rep.multiple_values_ok) {
            r.add_assertion("claim (a): f attains at least two nonzero values",
                            *rep.multiple_values_ok);
          } else {
            r.add_not_applicable("claim (a): f attains at least two nonzero values");
          }
          if (rep.coefficient_law_ok) {
            r.add_assertion(
                "claim (b): top coefficient equals (-1)^n times the unique value",
                *rep.coefficient_law_ok);
          } else {
            r.add_not_applicable(
                "claim (b): top coefficient equals (-1)^n times the unique value");
          }
        }
      } else {
        PolySystem sys = PolySystem::parse(detail::read_text_argument(parity_system));
        r.command = "parity corollary";
        r.inputs = {{"system", parity_system}, {"p", sys.field().modulus()},
                    {"n", sys.arity()}};
        if (parity_set_size >= 0) {
          r.inputs["set_size"] = parity_set_size;
          SubsetParityReport rep = corollary_subset_parity(
              sys, static_cast<std::size_t>(parity_set_size), cube_budget());
          r.result = {{"degree_bound_lhs", rep.degree_bound_lhs},
                      {"degree_bound_holds", rep.degree_bound_holds}};
          if (rep.inner) {
            r.result["even"] = rep.inner->shared_roots.even_count;
            r.result["odd"] = rep.inner->shared_roots.odd_count;
          }
          if (rep.degree_bound_holds && rep.inner) {
            r.add_assertion("qualifying subsets are parity-balanced mod p",
                            rep.inner->balanced.value_or(false));
          } else {
            r.add_not_applicable(
                "qualifying subsets are parity-balanced mod p (degree bound fails)");
          }
        } else {
          SharedRootsParityReport rep =
              corollary_shared_roots_parity(sys, cube_budget());
          r.result = {{"hypothesis_holds", rep.hypothesis_holds},
                      {"even", rep.shared_roots.even_count},
                      {"odd", rep.shared_roots.odd_count}};
          if (rep.hypothesis_holds) {
            r.add_assertion("Boolean shared roots are parity-balanced mod p",
                            rep.balanced.value_or(false));
          } else {
            r.add_not_applicable("Boolean shared roots are parity-balanced mod p");
          }
        }
      }
      return finish(r);
    }

    if (*graph_sub) {
      Graph g = Graph::parse(detail::read_text_argument(graph_file));
      Report r;
      r.inputs = {{"graph", graph_file}, {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()}};

      std::optional<std::vector<std::uint32_t>> verts;
      if (!graph_vertices.empty()) {
        verts = detail::parse_vertex_list(graph_vertices);
        r.inputs["subset"] = detail::vertices_to_json(*verts);
      }

      auto zero_one_on_cube = [&](Report& rep, const Polynomial& f,
                                  const std::string& claim) {
        if (f.arity() <= 32 && (std::uint64_t{1} << f.arity()) <= cube_budget()) {
          detail::CubeEvaluator eval(f);
          bool ok = true;
          for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.arity()); ++mask) {
            if (eval.eval_mask(mask) > 1) ok = false;
          }
          rep.add_assertion(claim, ok);
        } else {
          rep.add_not_applicable(claim + " (cube exceeds budget)");
        }
      };

      if (*graph_degree) {
        r.command = "graph degree-poly";
        PrimeField field = need_field();
        Fp k = Fp::from_signed(graph_k, field);
        r.inputs["p"] = field.modulus();
        r.inputs["k"] = k.value();
        Polynomial f = degree_subset_poly(g, field, k, verts);
        nlohmann::json legend = nlohmann::json::array();
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
          legend.push_back("x" + std::to_string(i + 1) + "=(" +
                           std::to_string(g.edges()[i].first + 1) + "," +
                           std::to_string(g.edges()[i].second + 1) + ")");
        }
        r.result = {{"polynomial", format_polynomial(f)}, {"edge_variables", legend}};
        zero_one_on_cube(r, f, "polynomial is 0/1-valued on every edge subset");
        out << format_polynomial(f) << "\n";
      } else if (*graph_t9) {
        r.command = "graph t9";
        PrimeField field = need_field();
        Fp k = Fp::from_signed(graph_k, field);
        r.inputs["p"] = field.modulus();
        r.inputs["k"] = k.value();
        Theorem9Report rep = theorem9_check(g, field, k, verts, cube_budget());
        r.result = {{"even", rep.even_count}, {"odd", rep.odd_count},
                    {"qualifying", rep.qualifying}, {"bound_lhs", rep.bound_lhs},
                    {"bound_holds", rep.bound_holds}};
        if (rep.bound_holds) {
          r.add_assertion("qualifying edge subsets are parity-balanced mod p",
                          rep.balanced.value_or(false));
        } else {
          r.add_not_applicable(
              "qualifying edge subsets are parity-balanced mod p (bound fails)");
        }
      } else if (*graph_nbr) {
        r.command = "graph neighborhood";
        PrimeField field = need_field();
        Fp k = Fp::from_signed(graph_k, field);
        if (!verts) throw Error("neighborhood requires --vertices");
        r.inputs["p"] = field.modulus();
        r.inputs["k"] = k.value();
        Polynomial f = vertex_neighborhood_poly(g, field, *verts, k);
        NeighborhoodReport rep = neighborhood_counts(g, field, *verts, k, subset_budget());
        r.result = {{"polynomial", format_polynomial(f)},
                    {"even", rep.even_count}, {"odd", rep.odd_count},
                    {"qualifying", rep.qualifying},
                    {"boundary_condition", rep.boundary_condition}};
        // Exploratory: no parity assertion is attached to these counts.
      } else if (*graph_cliques) {
        r.command = "graph cliques";
        r.inputs["d"] = graph_d;
        if (graph_d < 2) throw Error("clique size d must be at least 2");
        std::size_t d = static_cast<std::size_t>(graph_d);
        if (verts) {
          std::uint64_t count = clique_count_containing(g, d, *verts);
          r.result = {{"count", count}};
          out << count << "\n";
        } else {
          CliqueStats stats = clique_stats(g, d);
          nlohmann::json counts = nlohmann::json::array();
          for (const auto& [mask, count] : stats.counts) {
            counts.push_back({{"subset", detail::vertices_to_json(
                                             detail::mask_to_vertices(mask))},
                              {"count", count}});
          }
          r.result = {{"d", stats.d}, {"total", stats.count(0)}, {"counts", counts}};
        }
      } else if (*graph_clique_poly) {
        r.command = "graph clique-poly";
        PrimeField field = need_field();
        Fp k = Fp::from_signed(graph_k, field);
        if (graph_d < 2) throw Error("clique size d must be at least 2");
        r.inputs["p"] = field.modulus();
        r.inputs["k"] = k.value();
        r.inputs["d"] = graph_d;
        Polynomial f =
            clique_intersection_poly(g, field, static_cast<std::size_t>(graph_d), k);
        r.result = {{"polynomial", format_polynomial(f)}};
        zero_one_on_cube(r, f, "polynomial is 0/1-valued on every vertex indicator");
        out << format_polynomial(f) << "\n";
      } else if (*graph_prop62) {
        r.command = "graph prop62";
        PrimeField field = need_field();
        if (graph_d < 2) throw Error("clique size d must be at least 2");
        std::size_t d = static_cast<std::size_t>(graph_d);
        r.inputs["p"] = field.modulus();
        r.inputs["d"] = graph_d;
        Prop62Result res = prop62_search(g, field, d, subset_budget());
        r.result = {{"subset", detail::vertices_to_json(res.subset)},
                    {"count", res.intersecting_count}};
        r.certificate =
            nlohmann::json::object({{"subset", detail::vertices_to_json(res.subset)}});
        // Independent re-derivation through the inclusion-exclusion identity.
        CliqueStats stats = clique_stats(g, d);
        std::int64_t ie = 0;
        for (std::uint32_t sub = res.subset_mask; sub != 0;
             sub = (sub - 1) & res.subset_mask) {
          std::int64_t term = static_cast<std::int64_t>(stats.count(sub));
          ie += (std::popcount(sub) % 2 == 1) ? term : -term;
        }
        r.add_assertion(
            "subset is nonempty with intersecting-clique count ≡ 0 (mod p)",
            res.subset_mask != 0 &&
                ie == static_cast<std::int64_t>(res.intersecting_count) &&
                res.intersecting_count % field.modulus() == 0);
      }
      return finish(r);
    }

    if (*verify_sub) {
      VerifyOptions vopts;
      vopts.seed = seed_flag;
      vopts.cli_runner = [](const std::vector<std::string>& a, std::ostream& o,
                            std::ostream& e) { return run_command(a, o, e); };
      SuiteRun suite = run_suite(vopts);

      Report r;
      r.command = "verify";
      r.inputs = {{"seed", seed_flag}};
      std::size_t failures = 0;
      for (const CheckResult& c : suite.checks) {
        r.add_assertion(c.name + ": " + c.detail, c.pass);
        if (!c.pass) ++failures;
      }
      r.result = {{"checks", suite.checks.size()}, {"failures", failures},
                  {"elapsed_seconds", suite.elapsed_seconds}};
      return finish(r);
    }

    throw Error("no subcommand dispatched");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cnss

#endif  // CNSS_CLI_HPP

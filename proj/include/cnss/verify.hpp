#ifndef CNSS_VERIFY_HPP
#define CNSS_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

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

namespace cnss {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20260814;
  /// Invokes the CLI in-process: (args, stdout, stderr) -> exit status.
  /// Injected by callers so the suite can test the exit-status contract
  /// without depending on the CLI header.
  std::function<int(const std::vector<std::string>&, std::ostream&, std::ostream&)>
      cli_runner;
};

struct SuiteRun {
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;

  bool all_passed() const {
    for (const CheckResult& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

namespace detail {

/// Deterministic RNG wrapper. Draws use modulo reduction rather than
/// std::uniform_int_distribution so sequences are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  std::uint32_t residue(const PrimeField& field) {
    return static_cast<std::uint32_t>(below(field.modulus()));
  }
  bool coin() { return below(2) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& values) {
    return values[below(values.size())];
  }

 private:
  std::mt19937_64 engine_;
};

inline Polynomial random_polynomial(Rng& rng, const PrimeField& field, std::size_t arity,
                                    std::size_t max_terms, std::uint32_t max_exponent) {
  Polynomial f(field, arity);
  std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(arity);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(max_exponent + 1));
    f.add_term(Monomial(std::move(e)), rng.residue(field));
  }
  return f;
}

/// Random polynomial of total degree at most `max_degree`: each of the
/// degree units is assigned to a random variable or dropped.
inline Polynomial random_polynomial_bounded(Rng& rng, const PrimeField& field,
                                            std::size_t arity, std::uint64_t max_degree,
                                            std::size_t max_terms) {
  Polynomial f(field, arity);
  std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(arity, 0);
    for (std::uint64_t unit = 0; unit < max_degree; ++unit) {
      if (arity > 0 && rng.coin()) ++e[rng.below(arity)];
    }
    f.add_term(Monomial(std::move(e)), rng.residue(field));
  }
  return f;
}

inline Graph random_graph(Rng& rng, std::size_t vertices, std::size_t edge_count) {
  std::vector<Graph::Edge> all;
  for (std::uint32_t u = 0; u < vertices; ++u) {
    for (std::uint32_t v = u + 1; v < vertices; ++v) all.emplace_back(u, v);
  }
  // Fisher-Yates prefix shuffle; std::shuffle is avoided because its output
  // is implementation-defined.
  for (std::size_t i = 0; i < edge_count && i < all.size(); ++i) {
    std::size_t j = i + rng.below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(std::min(edge_count, all.size()));
  return Graph(vertices, std::move(all));
}

template <typename Fn>
CheckResult run_check(const std::string& name, Fn&& body) {
  CheckResult result;
  result.name = name;
  try {
    body(result);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

/// The shared corpus behind the Theorem 5 exactness and Theorem 4
/// classification criteria.
inline std::vector<PolySystem> theorem5_corpus(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint32_t> primes{2, 3, 5};
  std::vector<PolySystem> out;
  for (std::size_t i = 0; i < 300; ++i) {
    PrimeField field(rng.pick(primes));
    std::size_t n = 1 + rng.below(3);
    std::size_t m = 1 + rng.below(3);
    std::vector<Polynomial> polys;
    for (std::size_t j = 0; j < m; ++j) {
      polys.push_back(random_polynomial(rng, field, n, 4, 3));
    }
    out.emplace_back(std::move(polys));
  }
  return out;
}

}  // namespace detail

// --- Acceptance criteria ----------------------------------------------------

inline CheckResult criterion1_chevalley_warning(const VerifyOptions& opts) {
  return detail::run_check("criterion-01-chevalley-warning", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x01);
    std::vector<std::uint32_t> primes{2, 3, 5};
    std::size_t failures = 0;
    const std::size_t total = 200;
    for (std::size_t i = 0; i < total; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t n = 2 + rng.below(3);  // 2..4
      std::size_t m = 1 + rng.below(3);
      // Hand each polynomial a degree allowance so the total stays below n.
      std::uint64_t remaining = n - 1;
      std::vector<Polynomial> polys;
      for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t allowance = rng.below(std::min<std::uint64_t>(remaining, 2) + 1);
        polys.push_back(detail::random_polynomial_bounded(rng, field, n, allowance, 4));
        if (Degree d = polys.back().total_degree()) remaining -= *d;
      }
      PolySystem sys(std::move(polys));
      if (count_common_roots(sys) % field.modulus() != 0) ++failures;
    }
    r.pass = failures == 0;
    std::ostringstream os;
    os << (total - failures) << "/" << total
       << " systems with deg sum < n have root count divisible by p";
    r.detail = os.str();
  });
}

inline CheckResult criterion2_theorem5_exactness(const VerifyOptions& opts) {
  return detail::run_check("criterion-02-theorem5-exactness", [&](CheckResult& r) {
    std::size_t failures = 0;
    const auto corpus = detail::theorem5_corpus(opts.seed ^ 0x02);
    for (const PolySystem& sys : corpus) {
      std::uint32_t p = sys.field().modulus();
      ResiduePrediction pred = theorem5_predict(sys);
      if (count_common_roots(sys) % p != pred.predicted) ++failures;
    }

    // Frozen instance: {x1*x2} over F_3 has d = 2 and exactly 5 common roots.
    PrimeField f3(3);
    PolySystem frozen({parse_polynomial("x1*x2", f3, 2)});
    ResiduePrediction pred = theorem5_predict(frozen);
    bool frozen_ok = pred.certificate == 2 && pred.predicted == 2 &&
                     count_common_roots(frozen) == 5;

    r.pass = failures == 0 && frozen_ok;
    std::ostringstream os;
    os << (corpus.size() - failures) << "/" << corpus.size()
       << " systems match (-1)^n*d mod p; frozen instance d=2,count=5 "
       << (frozen_ok ? "ok" : "FAILED");
    r.detail = os.str();
  });
}

inline CheckResult criterion3_theorem4_classification(const VerifyOptions& opts) {
  return detail::run_check("criterion-03-theorem4-classification", [&](CheckResult& r) {
    std::size_t applicable = 0, failures = 0;
    const auto corpus = detail::theorem5_corpus(opts.seed ^ 0x02);
    for (const PolySystem& sys : corpus) {
      if (sys.degree_sum() > sys.arity()) continue;
      ++applicable;
      std::uint32_t p = sys.field().modulus();
      ResiduePrediction pred = theorem4_classify(sys);
      if (count_common_roots(sys) % p != pred.predicted) ++failures;
    }

    PrimeField f3(3);
    ResiduePrediction a = theorem4_classify(PolySystem({parse_polynomial("x1*x2", f3, 2)}));
    ResiduePrediction b = theorem4_classify(
        PolySystem({parse_polynomial("x1", f3, 2), parse_polynomial("x2", f3, 2)}));
    ResiduePrediction c = theorem4_classify(
        PolySystem({parse_polynomial("x1", f3, 2), parse_polynomial("x1", f3, 2)}));
    bool worked = a.predicted == 2 && b.predicted == 1 && c.predicted == 0;

    r.pass = failures == 0 && worked && applicable > 0;
    std::ostringstream os;
    os << (applicable - failures) << "/" << applicable
       << " applicable systems classified correctly; worked instances (2,1,0) "
       << (worked ? "ok" : "FAILED");
    r.detail = os.str();
  });
}

inline CheckResult criterion4_exclusion_contracts(const VerifyOptions& opts) {
  return detail::run_check("criterion-04-exclusion-contracts", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x04);
    std::vector<std::uint32_t> primes{2, 3, 5, 7};
    std::size_t failures = 0;

    // Point exclusion: vanishes off c, (f+g)(c) = 0, g(c) = -f(c).
    for (std::size_t i = 0; i < 200; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t n = 1 + rng.below(3);
      Polynomial f = detail::random_polynomial(rng, field, n, 5, 2 * field.modulus());
      std::vector<Fp> c;
      for (std::size_t j = 0; j < n; ++j) c.emplace_back(rng.residue(field), field);
      Polynomial g = exclude_point(f, c);

      std::vector<std::uint32_t> c_res;
      for (const Fp& v : c) c_res.push_back(v.value());
      std::uint32_t fc = f.eval_residues(c_res);
      bool ok = g.eval_residues(c_res) == detail::neg_mod(fc, field.modulus());
      detail::for_each_tuple(field.modulus(), n, [&](const std::vector<std::uint32_t>& x) {
        if (x != c_res && g.eval_residues(x) != 0) ok = false;
      });
      Polynomial sum = f + g;
      if (sum.eval_residues(c_res) != 0) ok = false;
      if (!ok) ++failures;
    }

    // Boolean exclusions, exhaustive over the cube: all targets for n <= 6,
    // sampled targets for n in 7..10.
    std::size_t boolean_cases = 0;
    for (std::uint32_t p : {2u, 3u}) {
      PrimeField field(p);
      for (std::size_t n = 1; n <= 10; ++n) {
        std::vector<std::uint32_t> targets;
        if (n <= 6) {
          for (std::uint32_t b = 0; b < (1u << n); ++b) targets.push_back(b);
        } else {
          for (int t = 0; t < 3; ++t) {
            targets.push_back(static_cast<std::uint32_t>(rng.below(1u << n)));
          }
        }
        for (std::uint32_t target : targets) {
          ++boolean_cases;
          BooleanPoint bp = BooleanPoint::from_mask(target, n);
          detail::CubeEvaluator h(exclude_boolean_point(bp, field));
          detail::CubeEvaluator g(exclude_indicator_subset(bp, field));
          std::uint32_t expect_g =
              (n - bp.ones()) % 2 == 0 ? 1 % p : detail::neg_mod(1 % p, p);
          bool ok = true;
          for (std::uint32_t b = 0; b < (1u << n); ++b) {
            std::uint32_t hv = h.eval_mask(b);
            std::uint32_t gv = g.eval_mask(b);
            if (b == target) {
              if (hv != p - 1 || gv != expect_g) ok = false;
            } else if (hv != 0 || gv != 0) {
              ok = false;
            }
          }
          if (!ok) ++failures;
        }
      }
    }

    // Axis-zero and inverse-pair exclusions at every point of F_p^2.
    for (std::uint32_t p : {3u, 5u, 7u}) {
      PrimeField field(p);
      Polynomial g = axis_zero_exclusion(field);
      Polynomial h = inverse_pair_exclusion(field);
      bool ok = true;
      for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) {
          std::uint32_t gv = g.eval_residues({a, b});
          std::uint32_t expect_gv = 0;
          if (a != 0 && b == 0) expect_gv = a;
          if (a == 0 && b != 0) expect_gv = b;
          if (gv != expect_gv) ok = false;
          std::uint32_t hv = h.eval_residues({a, b});
          std::uint32_t expect_hv =
              ((a + b) % p == 0) ? detail::mul_mod(a, a, p) : 0;
          if (hv != expect_hv) ok = false;
        }
      }
      if (!ok) ++failures;
    }

    r.pass = failures == 0;
    std::ostringstream os;
    os << "200 random point exclusions, " << boolean_cases
       << " boolean targets (n<=10), axis/inverse for p in {3,5,7}; failures: "
       << failures;
    r.detail = os.str();
  });
}

inline CheckResult criterion5_composite_exclusion(const VerifyOptions& opts) {
  return detail::run_check("criterion-05-composite-exclusion", [&](CheckResult& r) {
    (void)opts;
    std::size_t failures = 0;
    std::ostringstream os;

    // Known values of -C(p-1, k) mod p for the checked (p, k) pairs.
    struct Case { std::uint32_t p, k, coefficient; };
    const std::vector<Case> cases{{3, 2, 2}, {5, 2, 4}, {5, 3, 1}, {5, 4, 4}};

    for (std::uint32_t p : {3u, 5u}) {
      PrimeField field(p);
      Polynomial f = parse_polynomial("x1*x2 - x1 - x2", field, 2);
      Polynomial big = f + axis_zero_exclusion(field) + inverse_pair_exclusion(field);

      for (const Case& c : cases) {
        if (c.p != p) continue;
        std::uint32_t got =
            big.coefficient(Monomial({p - c.k + 1, c.k})).value();
        if (got != c.coefficient) {
          ++failures;
          os << " coeff(p=" << p << ",k=" << c.k << ")=" << got
             << " want " << c.coefficient << ";";
        }
      }

      auto witness = find_witness(big, Grid::full(field, 2));
      bool ok = witness.has_value();
      if (ok) {
        std::uint32_t a = witness->point[0].value(), b = witness->point[1].value();
        std::uint32_t ab = detail::mul_mod(a, b, p);
        std::uint32_t sum = detail::add_mod(a, b, p);
        if (a == 0 || b == 0 || sum == 0 || ab == sum) ok = false;
        if (big.eval_residues({a, b}) != f.eval_residues({a, b})) ok = false;
      }
      if (!ok) {
        ++failures;
        os << " witness check failed for p=" << p << ";";
      }
    }

    r.pass = failures == 0;
    r.detail = "coefficients -C(p-1,k) and re-checked witnesses for p in {3,5}" +
               (failures ? ":" + os.str() : std::string());
  });
}

inline CheckResult criterion6_boolean_parity(const VerifyOptions& opts) {
  return detail::run_check("criterion-06-boolean-parity", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x06);
    std::vector<std::uint32_t> primes{2, 3, 5};
    std::size_t t7_failures = 0, t6_applicable = 0, t6_failures = 0;
    const std::size_t total = 300;
    for (std::size_t i = 0; i < total; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t n = 1 + rng.below(8);
      Polynomial f = detail::random_polynomial(rng, field, n, 4, field.modulus());

      Theorem7Report t7 = theorem7_predict(f);
      if (!t7.identity_holds) ++t7_failures;

      Theorem6Report t6 = theorem6_check(f);
      if (t6.hypothesis_holds) {
        ++t6_applicable;
        if (!(t6.nonzero_balanced.value_or(false) && t6.zero_balanced.value_or(false))) {
          ++t6_failures;
        }
      }
    }
    r.pass = t7_failures == 0 && t6_failures == 0;
    std::ostringstream os;
    os << total << "/" << total << " Theorem 7 identities"
       << (t7_failures ? " MINUS " + std::to_string(t7_failures) + " failures" : "")
       << "; Theorem 6 balance on " << (t6_applicable - t6_failures) << "/"
       << t6_applicable << " applicable instances";
    r.detail = os.str();
  });
}

inline CheckResult criterion7_theorem8_exhaustive(const VerifyOptions& opts) {
  return detail::run_check("criterion-07-theorem8-exhaustive", [&](CheckResult& r) {
    (void)opts;
    std::size_t cases = 0, failures = 0;

    auto check = [&](const Polynomial& f) {
      ++cases;
      Theorem8Report rep = theorem8_analyze(f);
      if (rep.multiple_values_ok && !*rep.multiple_values_ok) ++failures;
      if (rep.coefficient_law_ok && !*rep.coefficient_law_ok) ++failures;
    };

    // All 26 nonzero reduced univariate polynomials over F_3.
    PrimeField f3(3);
    for (std::uint32_t c0 = 0; c0 < 3; ++c0) {
      for (std::uint32_t c1 = 0; c1 < 3; ++c1) {
        for (std::uint32_t c2 = 0; c2 < 3; ++c2) {
          if (c0 == 0 && c1 == 0 && c2 == 0) continue;
          Polynomial f(f3, 1);
          f.add_term(Monomial({0}), c0);
          f.add_term(Monomial({1}), c1);
          f.add_term(Monomial({2}), c2);
          check(f);
        }
      }
    }
    std::size_t univariate = cases;

    // All 15 nonzero multilinear bivariate polynomials over F_2.
    PrimeField f2(2);
    for (std::uint32_t bits = 1; bits < 16; ++bits) {
      Polynomial f(f2, 2);
      if (bits & 1) f.add_term(Monomial({0, 0}), 1);
      if (bits & 2) f.add_term(Monomial({1, 0}), 1);
      if (bits & 4) f.add_term(Monomial({0, 1}), 1);
      if (bits & 8) f.add_term(Monomial({1, 1}), 1);
      check(f);
    }

    r.pass = failures == 0 && cases == 41;
    std::ostringstream os;
    os << univariate << " univariate (p=3) + " << (cases - univariate)
       << " multilinear bivariate (p=2) cases; failures: " << failures;
    r.detail = os.str();
  });
}

inline CheckResult criterion8_theorem9(const VerifyOptions& opts) {
  return detail::run_check("criterion-08-theorem9", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x08);
    std::size_t failures = 0;
    std::ostringstream os;

    // K4 with p=2, k=0: the qualifying subsets are the cycle space.
    PrimeField f2(2);
    Graph k4 = Graph::complete(4);
    Theorem9Report k4_report = theorem9_check(k4, f2, Fp(0, f2));
    bool k4_ok = k4_report.qualifying == 8 && k4_report.even_count == 4 &&
                 k4_report.odd_count == 4 && k4_report.bound_holds &&
                 k4_report.balanced.value_or(false);
    if (!k4_ok) {
      ++failures;
      os << " K4 expected 8 qualifying (4 even, 4 odd), got " << k4_report.qualifying
         << " (" << k4_report.even_count << "," << k4_report.odd_count << ");";
    }

    // Random sweep under the degree bound |V|(p-1) < |E| <= 14.
    std::size_t swept = 0;
    for (std::size_t i = 0; i < 40; ++i) {
      std::uint32_t p = (i % 4 == 0) ? 3 : 2;
      PrimeField field(p);
      std::size_t nv, ne;
      if (p == 2) {
        nv = 4 + rng.below(2);  // 4..5
        std::size_t max_e = std::min<std::size_t>(nv * (nv - 1) / 2, 14);
        ne = nv + 1 + rng.below(max_e - nv);  // |V| < |E| <= max_e
      } else {
        nv = 6;
        ne = 13 + rng.below(2);  // 2|V| = 12 < 13..14
      }
      Graph g = detail::random_graph(rng, nv, ne);
      Fp k(rng.residue(field), field);
      Theorem9Report rep = theorem9_check(g, field, k);
      if (!rep.bound_holds) continue;
      ++swept;
      if (!rep.balanced.value_or(false)) {
        ++failures;
        os << " sweep failure at graph " << i << ";";
      }
    }

    r.pass = failures == 0 && swept > 0;
    r.detail = "K4 cycle space (8 subsets, 4 even/4 odd) " +
               std::string(k4_ok ? "ok" : "FAILED") + "; " + std::to_string(swept) +
               " random graphs under the bound, all balanced" +
               (failures ? ";" + os.str() : std::string());
  });
}

inline CheckResult criterion9_prop62(const VerifyOptions& opts) {
  return detail::run_check("criterion-09-prop62", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x09);
    std::size_t failures = 0;
    std::ostringstream os;

    // Inclusion-exclusion identity on random graphs.
    std::size_t identity_checks = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      std::size_t nv = 4 + rng.below(5);  // 4..8
      std::size_t max_e = nv * (nv - 1) / 2;
      Graph g = detail::random_graph(rng, nv, 1 + rng.below(max_e));
      for (std::size_t d : {3u, 4u}) {
        CliqueStats stats = clique_stats(g, d);
        auto cliques = detail::clique_masks(g, d);
        const std::uint32_t limit = std::uint32_t{1} << nv;
        for (std::uint32_t u_mask = 1; u_mask < limit; ++u_mask) {
          if (std::popcount(u_mask) > 4) continue;
          ++identity_checks;
          std::int64_t ie_sum = 0;
          std::uint32_t sub = u_mask;
          for (; sub != 0; sub = (sub - 1) & u_mask) {
            std::int64_t term = static_cast<std::int64_t>(stats.count(sub));
            ie_sum += (std::popcount(sub) % 2 == 1) ? term : -term;
          }
          std::int64_t direct = 0;
          for (std::uint32_t clique : cliques) {
            if (clique & u_mask) ++direct;
          }
          if (ie_sum != direct) ++failures;
        }
      }
    }

    // Frozen searches.
    PrimeField f2(2);
    Graph triangle_plus(4, {{0, 1}, {0, 2}, {1, 2}});
    Prop62Result t = prop62_search(triangle_plus, f2, 3);
    bool t_ok = t.subset == std::vector<std::uint32_t>{3} && t.intersecting_count == 0;
    if (!t_ok) {
      ++failures;
      os << " triangle+isolated returned mask " << t.subset_mask << ";";
    }
    Prop62Result k4 = prop62_search(Graph::complete(4), f2, 3);
    bool k4_ok = k4.subset == std::vector<std::uint32_t>{0, 1} &&
                 k4.intersecting_count == 4;
    if (!k4_ok) {
      ++failures;
      os << " K4 returned mask " << k4.subset_mask << ";";
    }

    r.pass = failures == 0;
    r.detail = std::to_string(identity_checks) +
               " inclusion-exclusion identities exact; searches: triangle+isolated -> {v4}, "
               "K4 -> {v1,v2}" +
               (failures ? ";" + os.str() : std::string());
  });
}

inline CheckResult criterion10_infrastructure(const VerifyOptions& opts,
                                              double elapsed_so_far) {
  return detail::run_check("criterion-10-infrastructure", [&](CheckResult& r) {
    auto start = std::chrono::steady_clock::now();
    detail::Rng rng(opts.seed ^ 0x0a);
    std::vector<std::uint32_t> primes{2, 3, 5, 7};
    std::size_t failures = 0;

    for (std::size_t i = 0; i < 500; ++i) {
      PrimeField field(rng.pick(primes));
      const std::uint32_t p = field.modulus();
      std::size_t n = rng.below(4);  // 0..3
      Polynomial f = detail::random_polynomial(rng, field, n, 8, 2 * p);

      if (parse_polynomial(format_polynomial(f), field, n) != f) ++failures;

      Polynomial rf = reduce_field(f);
      Polynomial rb = reduce_boolean(f);
      for (const auto& [m, c] : rf.terms()) {
        for (std::uint32_t e : m.exponents()) {
          if (e > p - 1) ++failures;
        }
      }
      for (const auto& [m, c] : rb.terms()) {
        for (std::uint32_t e : m.exponents()) {
          if (e > 1) ++failures;
        }
      }
      bool agree = true;
      detail::for_each_tuple(p, n, [&](const std::vector<std::uint32_t>& x) {
        if (f.eval_residues(x) != rf.eval_residues(x)) agree = false;
      });
      detail::for_each_tuple(2, n, [&](const std::vector<std::uint32_t>& x) {
        if (f.eval_residues(x) != rb.eval_residues(x)) agree = false;
      });
      if (!agree) ++failures;

      // Ring laws at a random point.
      Polynomial g = detail::random_polynomial(rng, field, n, 8, 2 * p);
      std::vector<std::uint32_t> x;
      for (std::size_t j = 0; j < n; ++j) x.push_back(rng.residue(field));
      if ((f + g).eval_residues(x) !=
          detail::add_mod(f.eval_residues(x), g.eval_residues(x), p)) ++failures;
      if ((f * g).eval_residues(x) !=
          detail::mul_mod(f.eval_residues(x), g.eval_residues(x), p)) ++failures;
    }

    // CLI exit-status contract.
    bool cli_ok = false;
    std::string cli_note;
    if (opts.cli_runner) {
      auto run = [&](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        return opts.cli_runner(args, out, err);
      };
      int pass_code = run({"eval", "-p", "5", "-n", "2", "x1*x2-x1-x2", "--at", "2,3"});
      int fail_code = run({"eval", "-p", "5", "-n", "2", "x1*x2-x1-x2", "--at", "2,3",
                           "--expect", "0"});
      int usage_code = run({"no-such-command"});
      int input_code = run({"eval", "-p", "6", "-n", "1", "x1", "--at", "0"});
      int syntax_code = run({"eval", "-p", "5", "-n", "1", "x1 + + 2", "--at", "0"});
      cli_ok = pass_code == 0 && fail_code == 1 && usage_code == 2 &&
               input_code == 2 && syntax_code == 2;
      cli_note = "exit codes " + std::to_string(pass_code) + std::to_string(fail_code) +
                 std::to_string(usage_code) + std::to_string(input_code) +
                 std::to_string(syntax_code) + " (want 01222)";
    } else {
      cli_note = "cli runner not injected";
    }
    if (!cli_ok) ++failures;

    // JSON round-trip and deterministic emission.
    Report report;
    report.command = "witness";
    report.inputs = {{"p", 3}, {"n", 2}, {"expr", "x1*x2-1"}};
    report.result = {{"found", true}, {"point", {0, 0}}, {"value", 2}};
    report.add_assertion("witness value is nonzero", true);
    report.add_not_applicable("generalized hypothesis");
    report.certificate = nlohmann::json{{"point", {0, 0}}};
    if (Report::from_json(report.to_json()) != report) ++failures;
    std::ostringstream emit1, emit2;
    emit_report(report, true, emit1);
    emit_report(report, true, emit2);
    if (emit1.str() != emit2.str() || emit1.str().empty()) ++failures;

    double own = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                     .count();
    double total = elapsed_so_far + own;
    bool time_ok = total < 120.0;
    if (!time_ok) ++failures;

    r.pass = failures == 0;
    std::ostringstream os;
    os << "500 round-trips and reductions; " << cli_note << "; json round-trip; suite "
       << (time_ok ? "within" : "EXCEEDS") << " 120 s budget";
    r.detail = os.str();
  });
}

// --- Additional module properties -------------------------------------------

inline CheckResult property_witness_guarantee(const VerifyOptions& opts) {
  return detail::run_check("property-witness-guarantee", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x10);
    std::vector<std::uint32_t> primes{2, 3, 5, 7};
    std::size_t failures = 0;
    const std::size_t total = 500;
    for (std::size_t i = 0; i < total; ++i) {
      PrimeField field(rng.pick(primes));
      const std::uint32_t p = field.modulus();
      std::size_t n = 1 + rng.below(3);
      Polynomial f = detail::random_polynomial(rng, field, n, 4, p - 1);
      if (f.is_zero()) continue;

      // Build a grid sized to the first maximal support element.
      Monomial a = support_maximal(f).front();
      std::vector<std::vector<std::uint32_t>> sets;
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t want = a.exponents()[j] + 1;
        std::vector<std::uint32_t> all(p);
        for (std::uint32_t v = 0; v < p; ++v) all[v] = v;
        for (std::size_t t = 0; t < want; ++t) {
          std::swap(all[t], all[t + rng.below(p - t)]);
        }
        all.resize(want);
        sets.push_back(std::move(all));
      }
      Grid grid(field, std::move(sets));

      auto w = find_witness(f, grid);
      if (!w) {
        ++failures;
        continue;
      }
      if (w->value.is_zero() || f.eval(w->point) != w->value) ++failures;
      // Determinism: a second scan returns the identical witness.
      auto w2 = find_witness(f, grid);
      if (!w2 || !(*w2 == *w)) ++failures;
    }
    r.pass = failures == 0;
    r.detail = "maximal-support grids always yield a witness (500 draws), "
               "deterministically; failures: " + std::to_string(failures);
  });
}

inline CheckResult property_classic_implies_maximal(const VerifyOptions& opts) {
  return detail::run_check("property-classic-implies-maximal", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x11);
    std::vector<std::uint32_t> primes{2, 3, 5, 7};
    std::size_t failures = 0;
    for (std::size_t i = 0; i < 300; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t n = 1 + rng.below(3);
      Polynomial f = detail::random_polynomial(rng, field, n, 5, 3);
      if (f.is_zero()) continue;
      // The graded-lex leading term always satisfies the classic hypothesis.
      Monomial lead = f.terms().begin()->first;
      DegreeProfile profile{lead.exponents()};
      if (!classic_hypothesis(f, profile)) {
        ++failures;
        continue;
      }
      bool in_maximal = false;
      for (const Monomial& m : support_maximal(f)) {
        if (m == lead) in_maximal = true;
      }
      if (!in_maximal) ++failures;

      // And a profile with the right degree sum but zero coefficient fails.
      std::vector<std::uint32_t> wrong = lead.exponents();
      if (n >= 2 && wrong[0] > 0) {
        --wrong[0];
        ++wrong[1];
        Monomial wm{wrong};
        if (f.coefficient(wm).is_zero() && classic_hypothesis(f, DegreeProfile{wrong})) {
          ++failures;
        }
      }
    }
    r.pass = failures == 0;
    r.detail = "classic hypothesis targets are maximal support elements; failures: " +
               std::to_string(failures);
  });
}

inline CheckResult property_repetition_driver(const VerifyOptions& opts) {
  return detail::run_check("property-repetition-driver", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x12);
    std::vector<std::uint32_t> primes{2, 3};
    std::size_t failures = 0, steps_checked = 0;
    for (std::size_t i = 0; i < 40; ++i) {
      PrimeField field(rng.pick(primes));
      const std::uint32_t p = field.modulus();
      std::size_t n = 1 + rng.below(2);
      std::size_t m = 1 + rng.below(2);
      std::vector<Polynomial> polys;
      for (std::size_t j = 0; j < m; ++j) {
        polys.push_back(detail::random_polynomial(rng, field, n, 3, p));
      }
      PolySystem sys(std::move(polys));

      // Collect the common roots, then exclude them one at a time.
      std::vector<std::vector<std::uint32_t>> roots;
      detail::for_each_tuple(p, n, [&](const std::vector<std::uint32_t>& x) {
        for (const Polynomial& P : sys.polys()) {
          if (P.eval_residues(x) != 0) return;
        }
        roots.push_back(x);
      });

      Polynomial F = common_root_indicator(sys);
      const Monomial top = Monomial::uniform(n, p - 1);
      std::uint32_t d = reduce_field(F).coefficient(top).value();
      std::uint32_t step = (n % 2 == 0) ? 1 % p : detail::neg_mod(1 % p, p);  // (-1)^n
      for (std::size_t j = 0; j < roots.size(); ++j) {
        std::vector<Fp> c;
        for (std::uint32_t v : roots[j]) c.emplace_back(v, field);
        F = F + exclude_point(F, c);
        ++steps_checked;
        std::uint32_t expect =
            detail::sub_mod(d, detail::mul_mod(static_cast<std::uint32_t>((j + 1) % p),
                                               step, p), p);
        if (reduce_field(F).coefficient(top).value() != expect) ++failures;
      }
      // All roots excluded: F is the zero function, so its reduction is the
      // zero polynomial and no witness exists anywhere.
      if (!reduce_field(F).is_zero()) ++failures;
      if (find_witness(F, Grid::full(field, n)).has_value()) ++failures;
    }
    r.pass = failures == 0;
    r.detail = std::to_string(steps_checked) +
               " exclusion steps shift the top coefficient by -(-1)^n each; final "
               "reductions vanish; failures: " + std::to_string(failures);
  });
}

inline CheckResult property_boolean_exclusion_driver(const VerifyOptions& opts) {
  return detail::run_check("property-boolean-exclusion-driver", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x13);
    std::vector<std::uint32_t> primes{2, 3};
    std::size_t failures = 0;
    for (std::size_t i = 0; i < 40; ++i) {
      PrimeField field(rng.pick(primes));
      const std::uint32_t p = field.modulus();
      std::size_t n = 1 + rng.below(6);
      Polynomial f = detail::random_polynomial(rng, field, n, 4, p);
      Polynomial F = f.pow(p - 1);  // 0/1-valued on the cube

      detail::CubeEvaluator eval(F);
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if (eval.eval_mask(b) != 0) {
          F = F + exclude_boolean_point(BooleanPoint::from_mask(b, n), field);
        }
      }
      detail::CubeEvaluator final_eval(F);
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if (final_eval.eval_mask(b) != 0) ++failures;
      }
    }
    r.pass = failures == 0;
    r.detail = "excluding every nonzero cube point of f^{p-1} leaves the zero "
               "function on the cube; failures: " + std::to_string(failures);
  });
}

inline CheckResult property_prop62_parity(const VerifyOptions& opts) {
  return detail::run_check("property-prop62-parity", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x14);
    std::size_t failures = 0, cases = 0;
    for (std::size_t i = 0; i < 30; ++i) {
      std::uint32_t p = (i % 3 == 0) ? 3 : 2;
      PrimeField field(p);
      // Prop 6.2 needs |V| > d(p-1) with d = 3.
      std::size_t nv = (p == 2) ? 4 + rng.below(3) : 7 + rng.below(2);
      std::size_t max_e = nv * (nv - 1) / 2;
      Graph g = detail::random_graph(rng, nv, 1 + rng.below(max_e));
      ++cases;
      if (!prop62_parity_counts(g, field, 3).balanced) ++failures;
    }
    r.pass = failures == 0;
    r.detail = std::to_string(cases) +
               " graphs with |V| > 3(p-1): zero-residue subsets parity-balanced; "
               "failures: " + std::to_string(failures);
  });
}

inline CheckResult property_theorem7_reduction_diagnostic(const VerifyOptions& opts) {
  return detail::run_check("property-theorem7-reduction-diagnostic", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x15);
    std::vector<std::uint32_t> primes{2, 3, 5};
    std::size_t agree = 0, differ = 0, differ_identity_failures = 0;
    for (std::size_t i = 0; i < 150; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t n = 1 + rng.below(5);
      Polynomial f = detail::random_polynomial(rng, field, n, 4, field.modulus());
      Theorem7Report rep = theorem7_predict(f);
      if (rep.reductions_agree) {
        ++agree;
      } else {
        ++differ;
        // The multilinear d must still satisfy the identity even where the
        // mod-(p-1) reduction disagrees.
        if (!rep.identity_holds) ++differ_identity_failures;
      }
    }
    r.pass = differ_identity_failures == 0;
    std::ostringstream os;
    os << "multilinear vs mod-(p-1) coefficient of x1..xn: " << agree << " agree, "
       << differ << " differ; multilinear identity held in every case";
    r.detail = os.str();
  });
}

inline CheckResult property_clique_stats(const VerifyOptions& opts) {
  return detail::run_check("property-clique-stats", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x16);
    std::size_t failures = 0, cases = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      std::size_t nv = 3 + rng.below(4);  // 3..6
      std::size_t max_e = nv * (nv - 1) / 2;
      Graph g = detail::random_graph(rng, nv, 1 + rng.below(max_e));
      std::size_t d = 3 + rng.below(2);
      CliqueStats stats = clique_stats(g, d);
      const std::uint32_t limit = std::uint32_t{1} << nv;
      for (std::uint32_t mask = 0; mask < limit; ++mask) {
        ++cases;
        std::uint64_t k = stats.count(mask);
        if (!detail::is_clique_mask(g, mask) && k != 0) ++failures;
        if (k != clique_count_containing(g, d, detail::mask_to_vertices(mask))) {
          ++failures;
        }
        // Monotone: adding a vertex cannot increase the count.
        for (std::uint32_t v = 0; v < nv; ++v) {
          if (!(mask >> v & 1) && stats.count(mask | (1u << v)) > k) ++failures;
        }
      }
    }
    r.pass = failures == 0;
    r.detail = std::to_string(cases) + " subset counts cross-checked against direct "
               "enumeration; failures: " + std::to_string(failures);
  });
}

inline CheckResult property_indicator_01_valued(const VerifyOptions& opts) {
  return detail::run_check("property-indicator-01-valued", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x17);
    std::vector<std::uint32_t> primes{2, 3};
    std::size_t failures = 0;

    for (std::size_t i = 0; i < 30; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t n = 1 + rng.below(2);
      std::vector<Polynomial> polys;
      for (std::size_t j = 0; j < 1 + rng.below(2); ++j) {
        polys.push_back(detail::random_polynomial(rng, field, n, 3, field.modulus()));
      }
      PolySystem sys(std::move(polys));
      Polynomial ind = common_root_indicator(sys);
      detail::for_each_tuple(field.modulus(), n, [&](const std::vector<std::uint32_t>& x) {
        std::uint32_t v = ind.eval_residues(x);
        if (v > 1) ++failures;
        bool is_root = true;
        for (const Polynomial& P : sys.polys()) {
          if (P.eval_residues(x) != 0) is_root = false;
        }
        if (v != (is_root ? 1u : 0u)) ++failures;
      });
    }

    for (std::size_t i = 0; i < 10; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t nv = 3 + rng.below(2);
      std::size_t max_e = nv * (nv - 1) / 2;
      Graph g = detail::random_graph(rng, nv, 1 + rng.below(max_e));
      Fp k(rng.residue(field), field);
      Polynomial f = degree_subset_poly(g, field, k);
      detail::CubeEvaluator eval(f);
      for (std::uint32_t b = 0; b < (1u << g.edge_count()); ++b) {
        if (eval.eval_mask(b) > 1) ++failures;
      }
      Polynomial cf = clique_intersection_poly(g, field, 3, k);
      detail::CubeEvaluator ceval(cf);
      for (std::uint32_t b = 0; b < (1u << nv); ++b) {
        if (ceval.eval_mask(b) > 1) ++failures;
      }
    }

    r.pass = failures == 0;
    r.detail = "indicator constructions evaluate to 0/1 everywhere; failures: " +
               std::to_string(failures);
  });
}

inline CheckResult property_support_antichain(const VerifyOptions& opts) {
  return detail::run_check("property-support-antichain", [&](CheckResult& r) {
    detail::Rng rng(opts.seed ^ 0x18);
    std::vector<std::uint32_t> primes{2, 3, 5, 7};
    std::size_t failures = 0;
    for (std::size_t i = 0; i < 300; ++i) {
      PrimeField field(rng.pick(primes));
      std::size_t n = 1 + rng.below(3);
      Polynomial f = detail::random_polynomial(rng, field, n, 6, 4);
      auto supp = support(f);
      auto maximal = support_maximal(f);
      for (std::size_t a = 0; a < maximal.size(); ++a) {
        for (std::size_t b = 0; b < maximal.size(); ++b) {
          if (a != b && maximal[a].dominates(maximal[b])) ++failures;
        }
      }
      for (const Monomial& m : supp) {
        bool covered = false;
        for (const Monomial& top : maximal) {
          if (top.dominates(m)) covered = true;
        }
        if (!covered) ++failures;
      }
    }
    r.pass = failures == 0;
    r.detail = "support_maximal is an antichain covering supp; failures: " +
               std::to_string(failures);
  });
}

// --- Suite -------------------------------------------------------------------

inline SuiteRun run_suite(const VerifyOptions& opts = {}) {
  auto start = std::chrono::steady_clock::now();
  SuiteRun run;
  run.checks.push_back(criterion1_chevalley_warning(opts));
  run.checks.push_back(criterion2_theorem5_exactness(opts));
  run.checks.push_back(criterion3_theorem4_classification(opts));
  run.checks.push_back(criterion4_exclusion_contracts(opts));
  run.checks.push_back(criterion5_composite_exclusion(opts));
  run.checks.push_back(criterion6_boolean_parity(opts));
  run.checks.push_back(criterion7_theorem8_exhaustive(opts));
  run.checks.push_back(criterion8_theorem9(opts));
  run.checks.push_back(criterion9_prop62(opts));

  run.checks.push_back(property_witness_guarantee(opts));
  run.checks.push_back(property_classic_implies_maximal(opts));
  run.checks.push_back(property_repetition_driver(opts));
  run.checks.push_back(property_boolean_exclusion_driver(opts));
  run.checks.push_back(property_prop62_parity(opts));
  run.checks.push_back(property_theorem7_reduction_diagnostic(opts));
  run.checks.push_back(property_clique_stats(opts));
  run.checks.push_back(property_indicator_01_valued(opts));
  run.checks.push_back(property_support_antichain(opts));

  double elapsed_so_far =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  run.checks.push_back(criterion10_infrastructure(opts, elapsed_so_far));

  run.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace cnss

#endif  // CNSS_VERIFY_HPP

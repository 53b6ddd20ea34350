#ifndef CNSS_BOOLEAN_PARITY_HPP
#define CNSS_BOOLEAN_PARITY_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnss/chevalley.hpp"
#include "cnss/common.hpp"
#include "cnss/field.hpp"
#include "cnss/polynomial.hpp"

namespace cnss {

enum class SetKind { NonzeroSet, ZeroSet };

inline const char* to_string(SetKind k) {
  return k == SetKind::NonzeroSet ? "nonzero-set" : "zero-set";
}

/// Exact even-ones / odd-ones counts of a selected subset of {0,1}^n.
struct ParityReport {
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;
  std::uint32_t modulus = 2;
  SetKind set_kind = SetKind::NonzeroSet;

  bool balanced_mod_p() const noexcept {
    return even_count % modulus == odd_count % modulus;
  }
  /// (even - odd) mod p.
  std::uint32_t difference_mod_p() const noexcept {
    return detail::sub_mod(static_cast<std::uint32_t>(even_count % modulus),
                           static_cast<std::uint32_t>(odd_count % modulus), modulus);
  }
};

namespace detail {

/// Evaluates a polynomial on Boolean points given as bitmasks (bit i-1 of the
/// mask is the value of x_i). A term contributes its coefficient exactly when
/// every variable it mentions is set.
class CubeEvaluator {
 public:
  explicit CubeEvaluator(const Polynomial& f) : p_(f.field().modulus()) {
    if (f.arity() > 32) throw BudgetError("boolean cube restricted to arity <= 32");
    Polynomial g = reduce_boolean(f);
    for (const auto& [m, c] : g.terms()) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m.exponents()[i] > 0) mask |= (std::uint32_t{1} << i);
      }
      terms_.emplace_back(mask, c);
    }
  }

  std::uint32_t eval_mask(std::uint32_t point) const noexcept {
    std::uint32_t acc = 0;
    for (const auto& [mask, c] : terms_) {
      if ((mask & ~point) == 0) acc = add_mod(acc, c, p_);
    }
    return acc;
  }

 private:
  std::uint32_t p_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> terms_;
};

inline void check_cube_budget(std::size_t arity, std::uint64_t budget) {
  if (arity >= 64 || (std::uint64_t{1} << arity) > budget) {
    throw BudgetError("boolean cube of arity " + std::to_string(arity) +
                      " exceeds budget " + std::to_string(budget));
  }
}

}  // namespace detail

/// Even/odd-ones counts of {b : f(b) != 0} or {b : f(b) = 0} over {0,1}^n.
inline ParityReport boolean_support_counts(const Polynomial& f, SetKind kind,
                                           std::uint64_t budget = kCubeBudget) {
  detail::check_cube_budget(f.arity(), budget);
  detail::CubeEvaluator eval(f);
  ParityReport report;
  report.modulus = f.field().modulus();
  report.set_kind = kind;
  const std::uint32_t limit = std::uint32_t{1} << f.arity();
  for (std::uint32_t b = 0; b < limit; ++b) {
    bool nonzero = eval.eval_mask(b) != 0;
    if (nonzero != (kind == SetKind::NonzeroSet)) continue;
    if (std::popcount(b) % 2 == 0) {
      ++report.even_count;
    } else {
      ++report.odd_count;
    }
  }
  return report;
}

/// Theorem 6 verdict. The hypothesis ("no term of f^{p-1} mentions all n
/// variables") is checked on the literally expanded power; the reduced flag
/// records whether the multilinear form of f^{p-1} would give the same
/// verdict. When the hypothesis holds, both the nonzero set and the zero set
/// must be parity-balanced mod p.
struct Theorem6Report {
  bool hypothesis_holds = false;
  bool hypothesis_holds_reduced = false;
  ParityReport nonzero;
  ParityReport zero;
  std::optional<bool> nonzero_balanced;  // set only when the hypothesis holds
  std::optional<bool> zero_balanced;
};

inline Theorem6Report theorem6_check(const Polynomial& f,
                                     std::uint64_t budget = kCubeBudget) {
  const std::uint32_t p = f.field().modulus();
  const std::size_t n = f.arity();
  Polynomial power = f.pow(p - 1);

  Theorem6Report report;
  if (n == 0) {
    // The empty product prod x_i is the constant monomial, so arity 0 never
    // satisfies the hypothesis; no assertion is made.
    report.hypothesis_holds = false;
    report.hypothesis_holds_reduced = false;
  } else {
    report.hypothesis_holds = true;
    for (const auto& [m, c] : power.terms()) {
      bool full = true;
      for (std::uint32_t e : m.exponents()) {
        if (e == 0) full = false;
      }
      if (full) {
        report.hypothesis_holds = false;
        break;
      }
    }
    report.hypothesis_holds_reduced =
        reduce_boolean(power).coefficient(Monomial::uniform(n, 1)).is_zero();
  }

  report.nonzero = boolean_support_counts(f, SetKind::NonzeroSet, budget);
  report.zero = boolean_support_counts(f, SetKind::ZeroSet, budget);
  if (report.hypothesis_holds) {
    report.nonzero_balanced = report.nonzero.balanced_mod_p();
    report.zero_balanced = report.zero.balanced_mod_p();
  }
  return report;
}

/// Theorem 7: with g the multilinear form of f^{p-1} and d its coefficient on
/// x1*...*xn, the nonzero set satisfies |S_e| - |S_o| = (-1)^n * d (mod p).
/// The identity needs no hypothesis. d_field records the coefficient the
/// mod-(p-1) exponent reduction would give instead (diagnostic only).
struct Theorem7Report {
  std::uint32_t d = 0;
  std::uint32_t predicted = 0;  // (-1)^n * d mod p
  ParityReport nonzero;
  bool identity_holds = false;
  std::uint32_t d_field = 0;
  bool reductions_agree = false;
};

inline Theorem7Report theorem7_predict(const Polynomial& f,
                                       std::uint64_t budget = kCubeBudget) {
  const std::uint32_t p = f.field().modulus();
  const std::size_t n = f.arity();
  Polynomial power = f.pow(p - 1);

  Theorem7Report report;
  report.d = reduce_boolean(power).coefficient(Monomial::uniform(n, 1)).value();
  report.d_field = reduce_field(power).coefficient(Monomial::uniform(n, 1)).value();
  report.reductions_agree = report.d == report.d_field;
  report.predicted = (n % 2 == 0) ? report.d : detail::neg_mod(report.d, p);
  report.nonzero = boolean_support_counts(f, SetKind::NonzeroSet, budget);
  report.identity_holds = report.nonzero.difference_mod_p() == report.predicted;
  return report;
}

/// First corollary of Theorem 6: with g = prod(1 - P_i^{p-1}), if g has no
/// monomial mentioning every variable, the Boolean common-root set of the
/// system is parity-balanced mod p.
struct SharedRootsParityReport {
  bool hypothesis_holds = false;
  ParityReport shared_roots;
  std::optional<bool> balanced;
};

inline SharedRootsParityReport corollary_shared_roots_parity(
    const PolySystem& sys, std::uint64_t budget = kCubeBudget) {
  Polynomial g = common_root_indicator(sys);
  const std::size_t n = sys.arity();

  SharedRootsParityReport report;
  report.hypothesis_holds = n > 0;  // arity 0 is outside the corollary's scope
  for (const auto& [m, c] : g.terms()) {
    bool full = true;
    for (std::uint32_t e : m.exponents()) {
      if (e == 0) full = false;
    }
    if (full && n > 0) {
      report.hypothesis_holds = false;
      break;
    }
  }
  // Shared Boolean roots are exactly where the 0/1-valued indicator is nonzero.
  report.shared_roots = boolean_support_counts(g, SetKind::NonzeroSet, budget);
  if (report.hypothesis_holds) report.balanced = report.shared_roots.balanced_mod_p();
  return report;
}

/// Second corollary: subsets of a ground set A, |A| = arity, encoded by their
/// indicator vectors. Requires (p-1) * sum deg(P_i) < |A|; that bound forces
/// the first corollary's hypothesis, to which this delegates.
struct SubsetParityReport {
  bool degree_bound_holds = false;
  std::uint64_t degree_bound_lhs = 0;  // (p-1) * sum deg
  std::optional<SharedRootsParityReport> inner;
};

inline SubsetParityReport corollary_subset_parity(const PolySystem& sys,
                                                  std::size_t set_size,
                                                  std::uint64_t budget = kCubeBudget) {
  if (sys.arity() != set_size) {
    throw Error("system arity " + std::to_string(sys.arity()) +
                " does not match the ground-set size " + std::to_string(set_size));
  }
  SubsetParityReport report;
  report.degree_bound_lhs = (sys.field().modulus() - 1) * sys.degree_sum();
  report.degree_bound_holds = report.degree_bound_lhs < set_size;
  if (report.degree_bound_holds) {
    report.inner = corollary_shared_roots_parity(sys, budget);
  }
  return report;
}

/// Theorem 8 over all of F_p^n. Claim (a): if the reduced f has no term with
/// every exponent equal to p-1, then f cannot have exactly one nonzero value
/// (reported as |N| >= 2; vacuous when the reduction is the zero polynomial,
/// i.e. f is the zero function). Claim (b): if |N| = 1 with value d, the
/// reduced coefficient of prod x_i^{p-1} equals d * (-1)^n.
struct Theorem8Report {
  std::uint64_t nonzero_count = 0;
  bool reduced_has_top_term = false;
  bool reduced_is_zero = false;
  std::uint32_t top_coefficient = 0;
  std::optional<bool> multiple_values_ok;   // claim (a)
  std::optional<bool> coefficient_law_ok;   // claim (b)
  std::optional<std::vector<Fp>> unique_point;
  std::uint32_t unique_value = 0;
};

inline Theorem8Report theorem8_analyze(const Polynomial& f,
                                       std::uint64_t budget = kFieldPointBudget) {
  if (f.is_zero()) throw Error("theorem 8 requires a nonzero polynomial");
  const PrimeField& field = f.field();
  const std::uint32_t p = field.modulus();
  const std::size_t n = f.arity();

  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) points = detail::saturating_mul(points, p);
  if (points > budget) {
    throw BudgetError("enumerating " + std::to_string(points) +
                      " points exceeds budget " + std::to_string(budget));
  }

  Polynomial reduced = reduce_field(f);
  Theorem8Report report;
  report.reduced_is_zero = reduced.is_zero();
  report.top_coefficient = reduced.coefficient(Monomial::uniform(n, p - 1)).value();
  report.reduced_has_top_term = report.top_coefficient != 0;

  std::optional<std::vector<std::uint32_t>> unique;
  detail::for_each_tuple(p, n, [&](const std::vector<std::uint32_t>& x) {
    std::uint32_t v = f.eval_residues(x);
    if (v == 0) return;
    ++report.nonzero_count;
    if (report.nonzero_count == 1) {
      unique = x;
      report.unique_value = v;
    }
  });

  if (!report.reduced_has_top_term && !report.reduced_is_zero) {
    report.multiple_values_ok = report.nonzero_count >= 2;
  }
  if (report.nonzero_count == 1) {
    std::vector<Fp> pt;
    for (std::uint32_t r : *unique) pt.emplace_back(r, field);
    report.unique_point = std::move(pt);
    std::uint32_t expect = (n % 2 == 0) ? report.unique_value
                                        : detail::neg_mod(report.unique_value, p);
    report.coefficient_law_ok = report.top_coefficient == expect;
  }
  return report;
}

}  // namespace cnss

#endif  // CNSS_BOOLEAN_PARITY_HPP

#ifndef CNSS_CHEVALLEY_HPP
#define CNSS_CHEVALLEY_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnss/common.hpp"
#include "cnss/field.hpp"
#include "cnss/parse.hpp"
#include "cnss/polynomial.hpp"

namespace cnss {

/// A nonempty system P_1, ..., P_m sharing field and arity.
class PolySystem {
 public:
  explicit PolySystem(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw Error("polynomial system must be nonempty");
    for (const Polynomial& f : polys_) {
      if (f.field() != polys_[0].field()) throw Error("system mixes fields");
      if (f.arity() != polys_[0].arity()) throw Error("system mixes arities");
    }
  }

  /// File format: a header line `p=<prime> n=<arity>`, then one polynomial
  /// expression per line. Blank lines are skipped.
  static PolySystem parse(std::string_view text) {
    std::optional<std::uint32_t> p;
    std::optional<std::size_t> n;
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw Error("system file is empty");

    std::string_view header(lines[0]);
    std::size_t pos = 0;
    while (pos < header.size()) {
      while (pos < header.size() &&
             std::isspace(static_cast<unsigned char>(header[pos]))) ++pos;
      if (pos >= header.size()) break;
      std::size_t end = pos;
      while (end < header.size() &&
             !std::isspace(static_cast<unsigned char>(header[end]))) ++end;
      std::string_view t = header.substr(pos, end - pos);
      if (t.rfind("p=", 0) == 0) {
        p = parse_header_value(t.substr(2), "p");
      } else if (t.rfind("n=", 0) == 0) {
        n = parse_header_value(t.substr(2), "n");
      } else {
        throw ParseError("unrecognized header token '" + std::string(t) + "'", pos);
      }
      pos = end;
    }
    if (!p || !n) throw Error("system header must declare p=<prime> n=<arity>");

    PrimeField field(*p);
    std::vector<Polynomial> polys;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      polys.push_back(parse_polynomial(lines[i], field, *n));
    }
    if (polys.empty()) throw Error("system file declares no polynomials");
    return PolySystem(std::move(polys));
  }

  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  const PrimeField& field() const noexcept { return polys_[0].field(); }
  std::size_t arity() const noexcept { return polys_[0].arity(); }
  std::size_t size() const noexcept { return polys_.size(); }

  /// Sum of total degrees over the nonzero members.
  std::uint64_t degree_sum() const noexcept {
    std::uint64_t s = 0;
    for (const Polynomial& f : polys_) {
      if (Degree d = f.total_degree()) s += *d;
    }
    return s;
  }

 private:
  static std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      bool blank = true;
      for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      }
      if (!blank) lines.emplace_back(line);
      if (end == text.size()) break;
      start = end + 1;
    }
    return lines;
  }

  static std::uint32_t parse_header_value(std::string_view digits, const char* key) {
    if (digits.empty()) throw Error(std::string("empty header value for ") + key);
    std::uint64_t v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(std::string("malformed header value for ") + key);
      }
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > PrimeField::kMaxModulus) {
        throw Error(std::string("header value for ") + key + " too large");
      }
    }
    return static_cast<std::uint32_t>(v);
  }

  std::vector<Polynomial> polys_;
};

/// f = prod_i (1 - P_i^{p-1}): equals 1 exactly on the common roots of the
/// system and 0 everywhere else, by Fermat's little theorem.
inline Polynomial common_root_indicator(const PolySystem& sys) {
  const PrimeField& field = sys.field();
  Polynomial one = Polynomial::constant(field, sys.arity(), Fp(1, field));
  Polynomial f = one;
  for (const Polynomial& P : sys.polys()) {
    f = f * (one - P.pow(field.modulus() - 1));
  }
  return f;
}

/// Brute-force oracle: the exact number of common roots in F_p^n.
inline std::uint64_t count_common_roots(const PolySystem& sys,
                                        std::uint64_t budget = kFieldPointBudget) {
  const std::uint32_t p = sys.field().modulus();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < sys.arity(); ++i) points = detail::saturating_mul(points, p);
  if (points > budget) {
    throw BudgetError("enumerating " + std::to_string(points) +
                      " points exceeds budget " + std::to_string(budget));
  }
  std::uint64_t count = 0;
  detail::for_each_tuple(p, sys.arity(), [&](const std::vector<std::uint32_t>& x) {
    for (const Polynomial& P : sys.polys()) {
      if (P.eval_residues(x) != 0) return;
    }
    ++count;
  });
  return count;
}

struct WarningReport {
  std::uint64_t root_count = 0;
  bool divisible = false;                         // root_count ≡ 0 (mod p)
  std::optional<std::vector<Fp>> second_root;     // distinct from the known root
};

/// Chevalley–Warning check: requires degree_sum < n, counts the common roots,
/// and asserts divisibility by p. With a known root, scans for a second
/// distinct root (whose existence the divisibility forces).
inline WarningReport warning_check(const PolySystem& sys,
                                   const std::optional<std::vector<Fp>>& known_root = std::nullopt,
                                   std::uint64_t budget = kFieldPointBudget) {
  if (sys.degree_sum() >= sys.arity()) {
    throw Error("degree sum " + std::to_string(sys.degree_sum()) +
                " is not below the arity " + std::to_string(sys.arity()));
  }
  const PrimeField& field = sys.field();
  std::vector<std::uint32_t> known;
  if (known_root) {
    if (known_root->size() != sys.arity()) throw Error("known root has wrong arity");
    for (const Fp& v : *known_root) {
      if (v.modulus() != field.modulus()) throw Error("known root field mismatch");
      known.push_back(v.value());
    }
    for (const Polynomial& P : sys.polys()) {
      if (P.eval_residues(known) != 0) throw Error("known root is not a common root");
    }
  }

  const std::uint32_t p = field.modulus();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < sys.arity(); ++i) points = detail::saturating_mul(points, p);
  if (points > budget) {
    throw BudgetError("enumerating " + std::to_string(points) +
                      " points exceeds budget " + std::to_string(budget));
  }

  WarningReport report;
  std::optional<std::vector<std::uint32_t>> second;
  detail::for_each_tuple(p, sys.arity(), [&](const std::vector<std::uint32_t>& x) {
    for (const Polynomial& P : sys.polys()) {
      if (P.eval_residues(x) != 0) return;
    }
    ++report.root_count;
    if (known_root && !second && x != known) second = x;
  });
  report.divisible = (report.root_count % p == 0);
  if (second) {
    std::vector<Fp> pt;
    for (std::uint32_t r : *second) pt.emplace_back(r, field);
    report.second_root = std::move(pt);
  }
  return report;
}

enum class Rule { T3, T4, T5 };

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::T3: return "T3";
    case Rule::T4: return "T4";
    default: return "T5";
  }
}

/// Predicted residue of the common-root count mod p, with its certificate:
/// the product coefficient q (rule T4) or the reduced-indicator coefficient d
/// (rule T5).
struct ResiduePrediction {
  std::uint32_t predicted = 0;
  std::uint32_t certificate = 0;
  Rule rule = Rule::T5;
};

/// Parity classification: requires degree_sum <= n. Zero members are dropped
/// (every point satisfies them). If all remaining P_i are nonconstant and the
/// expanded product prod P_i has coefficient q != 0 on x1*...*xn, the count is
/// +1 or -1 mod p according to whether n and m have equal parity; otherwise 0.
inline ResiduePrediction theorem4_classify(const PolySystem& sys) {
  const PrimeField& field = sys.field();
  const std::uint32_t p = field.modulus();
  const std::size_t n = sys.arity();

  std::vector<Polynomial> members;
  for (const Polynomial& P : sys.polys()) {
    if (!P.is_zero()) members.push_back(P);
  }
  if (sys.degree_sum() > n) {
    throw Error("degree sum " + std::to_string(sys.degree_sum()) +
                " exceeds the arity " + std::to_string(n));
  }

  ResiduePrediction out;
  out.rule = Rule::T4;
  if (members.empty()) {
    // Every point is a common root: count = p^n ≡ 0 unless n = 0.
    out.predicted = (n == 0) ? 1 % p : 0;
    return out;
  }
  bool all_nonconstant = true;
  Polynomial prod = Polynomial::constant(field, n, Fp(1, field));
  for (const Polynomial& P : members) {
    if (P.total_degree() == Degree{0}) all_nonconstant = false;
    prod = prod * P;
  }
  if (!all_nonconstant) return out;  // some P_i is a nonzero constant: no roots

  std::uint32_t q = prod.coefficient(Monomial::uniform(n, 1)).value();
  if (q == 0) return out;
  out.certificate = q;
  bool same_parity = (n % 2) == (members.size() % 2);
  out.predicted = same_parity ? 1 % p : detail::neg_mod(1 % p, p);
  return out;
}

/// Theorem 5 predictor: d is the coefficient of prod x_i^{p-1} in the reduced
/// common-root indicator; the count is congruent to (-1)^n * d mod p.
inline ResiduePrediction theorem5_predict(const PolySystem& sys) {
  const PrimeField& field = sys.field();
  const std::uint32_t p = field.modulus();
  const std::size_t n = sys.arity();

  Polynomial g = reduce_field(common_root_indicator(sys));
  std::uint32_t d = g.coefficient(Monomial::uniform(n, p - 1)).value();

  ResiduePrediction out;
  out.rule = Rule::T5;
  out.certificate = d;
  out.predicted = (n % 2 == 0) ? d : detail::neg_mod(d, p);
  return out;
}

}  // namespace cnss

#endif  // CNSS_CHEVALLEY_HPP

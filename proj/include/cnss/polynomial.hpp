#ifndef CNSS_POLYNOMIAL_HPP
#define CNSS_POLYNOMIAL_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnss/common.hpp"
#include "cnss/field.hpp"

namespace cnss {

/// Exponent vector of a monomial x1^e1 * ... * xn^en.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial constant(std::size_t arity) {
    return Monomial(std::vector<std::uint32_t>(arity, 0));
  }

  /// x_index^exponent with a 1-based variable index.
  static Monomial axis(std::size_t arity, std::size_t index, std::uint32_t exponent) {
    if (index < 1 || index > arity) {
      throw Error("variable index " + std::to_string(index) +
                  " out of range for arity " + std::to_string(arity));
    }
    std::vector<std::uint32_t> e(arity, 0);
    e[index - 1] = exponent;
    return Monomial(std::move(e));
  }

  /// (x1 * ... * xn)^exponent.
  static Monomial uniform(std::size_t arity, std::uint32_t exponent) {
    return Monomial(std::vector<std::uint32_t>(arity, exponent));
  }

  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::size_t arity() const noexcept { return exponents_.size(); }
  std::uint32_t exponent(std::size_t index) const { return exponents_.at(index - 1); }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (std::uint32_t e : exponents_) d += e;
    return d;
  }

  /// Componentwise >=.
  bool dominates(const Monomial& other) const {
    if (arity() != other.arity()) throw Error("monomial arity mismatch");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      if (exponents_[i] < other.exponents_[i]) return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    if (arity() != other.arity()) throw Error("monomial arity mismatch");
    std::vector<std::uint32_t> e(exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::uint64_t s = std::uint64_t{exponents_[i]} + other.exponents_[i];
      if (s > std::numeric_limits<std::uint32_t>::max()) {
        throw Error("exponent overflow in monomial product");
      }
      e[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exponents_ == b.exponents_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept {
    return !(a == b);
  }

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded-lexicographic "greater than": higher total degree first, ties broken
/// lexicographically on (e1, e2, ...) descending. Iterating a map keyed with
/// this comparator visits terms in canonical display order and begin() is the
/// leading term.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  }
};

/// Total degree of a polynomial: nullopt encodes the degree of the zero
/// polynomial (minus infinity), which optional's ordering places below every
/// finite value.
using Degree = std::optional<std::uint64_t>;

/// Sparse multivariate polynomial over a prime field, with a fixed arity.
/// Coefficients are stored as canonical residues; zero coefficients are never
/// stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, std::uint32_t, GradedLexGreater>;

  Polynomial(const PrimeField& field, std::size_t arity)
      : field_(field), arity_(arity) {}

  static Polynomial zero(const PrimeField& field, std::size_t arity) {
    return Polynomial(field, arity);
  }

  static Polynomial constant(const PrimeField& field, std::size_t arity, const Fp& value) {
    Polynomial f(field, arity);
    f.add_term(Monomial::constant(arity), value.value());
    return f;
  }

  /// x_index as a polynomial, 1-based index.
  static Polynomial variable(const PrimeField& field, std::size_t arity, std::size_t index) {
    Polynomial f(field, arity);
    f.add_term(Monomial::axis(arity, index, 1), 1 % field.modulus());
    return f;
  }

  static Polynomial from_terms(const PrimeField& field, std::size_t arity,
                               const std::vector<std::pair<Monomial, Fp>>& terms) {
    Polynomial f(field, arity);
    for (const auto& [m, c] : terms) {
      if (m.arity() != arity) throw Error("term arity mismatch");
      f.add_term(m, c.value());
    }
    return f;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Degree total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  Fp coefficient(const Monomial& m) const {
    if (m.arity() != arity_) throw Error("monomial arity mismatch");
    auto it = terms_.find(m);
    return Fp(it == terms_.end() ? 0 : it->second, field_);
  }

  Fp eval(const std::vector<Fp>& point) const {
    std::vector<std::uint32_t> residues;
    residues.reserve(point.size());
    for (const Fp& v : point) {
      if (v.modulus() != field_.modulus()) throw Error("evaluation point field mismatch");
      residues.push_back(v.value());
    }
    return Fp(eval_residues(residues), field_);
  }

  /// Fast path: point given as raw residues in [0, p).
  std::uint32_t eval_residues(const std::vector<std::uint32_t>& point) const {
    if (point.size() != arity_) {
      throw Error("evaluation point has arity " + std::to_string(point.size()) +
                  ", expected " + std::to_string(arity_));
    }
    const std::uint32_t p = field_.modulus();
    for (std::uint32_t v : point) {
      if (v >= p) {
        throw Error("evaluation point entry " + std::to_string(v) +
                    " is not a residue mod " + std::to_string(p));
      }
    }
    std::uint32_t acc = 0;
    for (const auto& [m, c] : terms_) {
      std::uint32_t t = c;
      const auto& e = m.exponents();
      for (std::size_t i = 0; i < arity_ && t != 0; ++i) {
        if (e[i] != 0) t = detail::mul_mod(t, detail::pow_mod(point[i], e[i], p), p);
      }
      acc = detail::add_mod(acc, t, p);
    }
    return acc;
  }

  Polynomial operator+(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
  }

  Polynomial operator-(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial out = *this;
    const std::uint32_t p = field_.modulus();
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, detail::neg_mod(c, p));
    return out;
  }

  Polynomial operator-() const {
    Polynomial out(field_, arity_);
    const std::uint32_t p = field_.modulus();
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, detail::neg_mod(c, p));
    return out;
  }

  Polynomial operator*(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial out(field_, arity_);
    const std::uint32_t p = field_.modulus();
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : rhs.terms_) {
        out.add_term(ma * mb, detail::mul_mod(ca, cb, p));
      }
    }
    return out;
  }

  Polynomial scaled(const Fp& c) const {
    if (c.modulus() != field_.modulus()) throw Error("scalar field mismatch");
    Polynomial out(field_, arity_);
    if (c.is_zero()) return out;
    const std::uint32_t p = field_.modulus();
    for (const auto& [m, coeff] : terms_) {
      out.terms_.emplace(m, detail::mul_mod(coeff, c.value(), p));
    }
    return out;
  }

  Polynomial pow(std::uint64_t e) const {
    Polynomial result = constant(field_, arity_, Fp(1, field_));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      if (e >>= 1) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) noexcept {
    return !(a == b);
  }

  /// Adds c * m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, std::uint32_t c) {
    if (m.arity() != arity_) throw Error("term arity mismatch");
    const std::uint32_t p = field_.modulus();
    c %= p;
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = detail::add_mod(it->second, c, p);
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  void check_compatible(const Polynomial& rhs) const {
    if (field_ != rhs.field_) throw Error("mixed-field polynomial arithmetic");
    if (arity_ != rhs.arity_) throw Error("mixed-arity polynomial arithmetic");
  }

  PrimeField field_;
  std::size_t arity_;
  TermMap terms_;
};

/// Replaces every positive exponent e by ((e - 1) mod (p - 1)) + 1, the unique
/// representative in [1, p - 1] with x^e = x^e' as a function on F_p. Exponent
/// 0 stays 0. The result agrees with the input at every point of F_p^n.
inline Polynomial reduce_field(const Polynomial& f) {
  const std::uint32_t p = f.field().modulus();
  Polynomial out(f.field(), f.arity());
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e = m.exponents();
    for (auto& x : e) {
      if (x > 0) x = (x - 1) % (p - 1) + 1;
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

/// Replaces every positive exponent by 1 (multilinearization). The result
/// agrees with the input at every point of {0,1}^n.
inline Polynomial reduce_boolean(const Polynomial& f) {
  Polynomial out(f.field(), f.arity());
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e = m.exponents();
    for (auto& x : e) {
      if (x > 0) x = 1;
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace cnss

#endif  // CNSS_POLYNOMIAL_HPP

#ifndef CNSS_EXCLUSION_HPP
#define CNSS_EXCLUSION_HPP

#include <cstdint>
#include <vector>

#include "cnss/common.hpp"
#include "cnss/field.hpp"
#include "cnss/polynomial.hpp"

namespace cnss {

/// A point of {0,1}^n together with its 1-count k.
class BooleanPoint {
 public:
  explicit BooleanPoint(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
      if (b > 1) throw Error("boolean point entries must be 0 or 1");
      ones_ += b;
    }
  }

  /// bit i of mask (LSB) becomes coordinate i+1.
  static BooleanPoint from_mask(std::uint32_t mask, std::size_t arity) {
    std::vector<std::uint8_t> bits(arity);
    for (std::size_t i = 0; i < arity; ++i) bits[i] = (mask >> i) & 1;
    return BooleanPoint(std::move(bits));
  }

  std::size_t arity() const noexcept { return bits_.size(); }
  std::size_t ones() const noexcept { return ones_; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Complement point Q with Q_i = 1 - bits_i.
  std::vector<std::uint8_t> complement() const {
    std::vector<std::uint8_t> q(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) q[i] = 1 - bits_[i];
    return q;
  }

  std::vector<std::uint32_t> residues() const {
    return std::vector<std::uint32_t>(bits_.begin(), bits_.end());
  }

  friend bool operator==(const BooleanPoint& a, const BooleanPoint& b) noexcept {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t ones_ = 0;
};

/// g = -f(c) * (-1)^n * prod_j prod_{q != c_j} (x_j - q).
///
/// The double product vanishes at every point other than c (some factor hits
/// zero), while at c each inner product is prod_{r != 0} r = (p-1)! = -1 by
/// Wilson's theorem, so the product is (-1)^n and g(c) = -f(c). Hence f + g
/// agrees with f off c and vanishes at c. If f(c) = 0 the result is the zero
/// polynomial.
inline Polynomial exclude_point(const Polynomial& f, const std::vector<Fp>& c) {
  if (c.size() != f.arity()) throw Error("exclusion point has wrong arity");
  const PrimeField& field = f.field();
  const std::uint32_t p = field.modulus();
  for (const Fp& v : c) {
    if (v.modulus() != p) throw Error("exclusion point field mismatch");
  }
  Fp value = f.eval(c);
  if (value.is_zero()) return Polynomial::zero(field, f.arity());

  // -f(c) * (-1)^n
  Fp scale = -value;
  if (f.arity() % 2 == 1) scale = -scale;

  Polynomial g = Polynomial::constant(field, f.arity(), scale);
  for (std::size_t j = 1; j <= f.arity(); ++j) {
    Polynomial factor = Polynomial::constant(field, f.arity(), Fp(1, field));
    const std::uint32_t cj = c[j - 1].value();
    for (std::uint32_t q = 0; q < p; ++q) {
      if (q == cj) continue;
      factor = factor * (Polynomial::variable(field, f.arity(), j) -
                         Polynomial::constant(field, f.arity(), Fp(q, field)));
    }
    g = g * factor;
  }
  return g;
}

/// h = (-1)^{k+1} * prod_i (Q_i - x_i) where Q is the complement of b and k
/// its 1-count. Multilinear of degree n; h(b) = -1, h = 0 elsewhere on {0,1}^n.
inline Polynomial exclude_boolean_point(const BooleanPoint& b, const PrimeField& field) {
  const std::size_t n = b.arity();
  Polynomial h = Polynomial::constant(field, n, Fp(1, field));
  const auto q = b.complement();
  for (std::size_t i = 1; i <= n; ++i) {
    h = h * (Polynomial::constant(field, n, Fp(q[i - 1], field)) -
             Polynomial::variable(field, n, i));
  }
  if (b.ones() % 2 == 0) h = -h;  // (-1)^{k+1}
  return h;
}

/// g = prod_v (x_v - Q_v): the indicator-subset exclusion with g(b) =
/// (-1)^{n-k} and g = 0 at every other Boolean point.
inline Polynomial exclude_indicator_subset(const BooleanPoint& b, const PrimeField& field) {
  const std::size_t n = b.arity();
  Polynomial g = Polynomial::constant(field, n, Fp(1, field));
  const auto q = b.complement();
  for (std::size_t i = 1; i <= n; ++i) {
    g = g * (Polynomial::variable(field, n, i) -
             Polynomial::constant(field, n, Fp(q[i - 1], field)));
  }
  return g;
}

/// g(x,y) = x(x^{p-1} - y^{p-1}) + y(y^{p-1} - x^{p-1}).
///
/// Vanishes at (0,0) and whenever both coordinates are nonzero (the Fermat
/// powers agree); on the axes it reproduces the nonzero coordinate.
inline Polynomial axis_zero_exclusion(const PrimeField& field) {
  const std::uint64_t e = field.modulus() - 1;
  Polynomial x = Polynomial::variable(field, 2, 1);
  Polynomial y = Polynomial::variable(field, 2, 2);
  return x * (x.pow(e) - y.pow(e)) + y * (y.pow(e) - x.pow(e));
}

/// h(x,y) = (1 - (x+y)^{p-1}) * x^2: zero when x + y != 0, and a^2 at (a, -a).
inline Polynomial inverse_pair_exclusion(const PrimeField& field) {
  Polynomial x = Polynomial::variable(field, 2, 1);
  Polynomial y = Polynomial::variable(field, 2, 2);
  Polynomial one = Polynomial::constant(field, 2, Fp(1, field));
  return (one - (x + y).pow(field.modulus() - 1)) * x * x;
}

}  // namespace cnss

#endif  // CNSS_EXCLUSION_HPP

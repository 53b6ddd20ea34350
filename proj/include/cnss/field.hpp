#ifndef CNSS_FIELD_HPP
#define CNSS_FIELD_HPP

#include <cstdint>
#include <string>

#include "cnss/common.hpp"

namespace cnss {

namespace detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;  // p <= 2^20, so no overflow in 32 bits
  return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

/// b^e mod p with the convention pow_mod(0, 0, p) == 1.
inline std::uint32_t pow_mod(std::uint32_t b, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  std::uint32_t base = b % p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; std::uint64_t{d} * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// A prime field F_p for p prime, p <= 2^20. Acts as a factory for elements.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = std::uint32_t{1} << 20;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p > kMaxModulus) {
      throw Error("modulus " + std::to_string(p) + " exceeds maximum " +
                  std::to_string(kMaxModulus));
    }
    if (!detail::is_prime(p)) {
      throw Error("modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint32_t modulus() const noexcept { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ != b.p_;
  }

 private:
  std::uint32_t p_;
};

/// An element of F_p, stored as the canonical residue in [0, p).
class Fp {
 public:
  Fp(std::uint64_t value, const PrimeField& field)
      : value_(static_cast<std::uint32_t>(value % field.modulus())),
        p_(field.modulus()) {}

  /// Builds from a signed value; negatives wrap around as usual.
  static Fp from_signed(std::int64_t value, const PrimeField& field) {
    std::int64_t p = field.modulus();
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), field);
  }

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp operator+(const Fp& rhs) const {
    check_same_field(rhs);
    return raw(detail::add_mod(value_, rhs.value_, p_), p_);
  }
  Fp operator-(const Fp& rhs) const {
    check_same_field(rhs);
    return raw(detail::sub_mod(value_, rhs.value_, p_), p_);
  }
  Fp operator*(const Fp& rhs) const {
    check_same_field(rhs);
    return raw(detail::mul_mod(value_, rhs.value_, p_), p_);
  }
  Fp operator-() const { return raw(detail::neg_mod(value_, p_), p_); }

  Fp pow(std::uint64_t e) const { return raw(detail::pow_mod(value_, e, p_), p_); }

  /// Multiplicative inverse via Fermat's little theorem. Throws on zero.
  Fp inverse() const {
    if (value_ == 0) throw Error("zero has no multiplicative inverse");
    return pow(p_ - 2);
  }

  friend bool operator==(const Fp& a, const Fp& b) noexcept {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) noexcept { return !(a == b); }

 private:
  static Fp raw(std::uint32_t value, std::uint32_t p) {
    Fp e;
    e.value_ = value;
    e.p_ = p;
    return e;
  }

  void check_same_field(const Fp& rhs) const {
    if (p_ != rhs.p_) throw Error("mixed-field arithmetic between F_" +
                                  std::to_string(p_) + " and F_" +
                                  std::to_string(rhs.p_));
  }

  Fp() : value_(0), p_(2) {}

  std::uint32_t value_;
  std::uint32_t p_;
};

}  // namespace cnss

#endif  // CNSS_FIELD_HPP

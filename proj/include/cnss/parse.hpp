#ifndef CNSS_PARSE_HPP
#define CNSS_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "cnss/common.hpp"
#include "cnss/field.hpp"
#include "cnss/polynomial.hpp"

namespace cnss {

namespace detail {

/// Recursive-descent parser for the expression grammar
///
///   expr   := ['+'|'-'] term { ('+'|'-') term }
///   term   := factor { '*' factor }
///   factor := atom [ '^' number ]
///   atom   := number | 'x' number | '(' expr ')'
///
/// Whitespace between tokens is ignored. Variable indices are 1-based and
/// must not exceed the arity; numeric literals are reduced modulo p.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const PrimeField& field, std::size_t arity)
      : text_(text), field_(field), arity_(arity) {}

  Polynomial parse() {
    Polynomial f = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool digit_ahead() {
    skip_ws();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  /// Unsigned literal reduced modulo p (for coefficients of any length).
  std::uint32_t parse_residue() {
    if (!digit_ahead()) throw ParseError("expected number", pos_);
    const std::uint32_t p = field_.modulus();
    std::uint32_t r = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      r = static_cast<std::uint32_t>(
          (std::uint64_t{r} * 10 + (text_[pos_] - '0')) % p);
      ++pos_;
    }
    return r;
  }

  /// Unsigned literal that must fit the given bound (for indices, exponents).
  std::uint64_t parse_bounded(std::uint64_t bound, const char* what) {
    if (!digit_ahead()) throw ParseError("expected number", pos_);
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > bound) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    return v;
  }

  Polynomial parse_expr() {
    bool negate = false;
    skip_ws();
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial f = parse_term();
    if (negate) f = -f;
    for (;;) {
      if (accept('+')) {
        f = f + parse_term();
      } else if (accept('-')) {
        f = f - parse_term();
      } else {
        break;
      }
    }
    return f;
  }

  Polynomial parse_term() {
    Polynomial f = parse_factor();
    while (accept('*')) f = f * parse_factor();
    return f;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (accept('^')) {
      std::uint64_t e =
          parse_bounded(std::numeric_limits<std::uint32_t>::max(), "exponent");
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = parse_expr();
      expect(')');
      return f;
    }
    if (c == 'x') {
      std::size_t xpos = pos_;
      ++pos_;
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected variable index after 'x'", pos_);
      }
      std::uint64_t index = parse_bounded(arity_, "variable index");
      if (index == 0) throw ParseError("variable indices start at 1", xpos);
      return Polynomial::variable(field_, arity_, static_cast<std::size_t>(index));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(field_, arity_, Fp(parse_residue(), field_));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  PrimeField field_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const PrimeField& field,
                                   std::size_t arity) {
  return detail::ExpressionParser(text, field, arity).parse();
}

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
  return out;
}

/// Canonical text form: terms in graded-lexicographic descending order joined
/// by " + ", coefficients as canonical residues with the factor 1 omitted on
/// non-constant terms. The zero polynomial prints as "0".
inline std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono = format_monomial(m);
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c);
      out += '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace cnss

#endif  // CNSS_PARSE_HPP

#include "catch_amalgamated.hpp"

#include "cnss/field.hpp"
#include "cnss/parse.hpp"
#include "cnss/polynomial.hpp"

using namespace cnss;

TEST_CASE("prime field construction validates the modulus", "[field]") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(104729));
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(0), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1048573 * 2), Error);  // above the supported range
  CHECK(PrimeField(7) == PrimeField(7));
  CHECK(PrimeField(7) != PrimeField(5));
}

TEST_CASE("arithmetic in F_7 matches the worked values", "[field]") {
  PrimeField f7(7);
  Fp a(3, f7), b(5, f7);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 1);
  CHECK(a.inverse().value() == 5);
  CHECK(a.pow(6).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((-a).value() == 4);
}

TEST_CASE("field element edge cases", "[field]") {
  PrimeField f5(5);
  CHECK(Fp(12, f5).value() == 2);            // canonicalized on construction
  CHECK(Fp::from_signed(-1, f5).value() == 4);
  CHECK(Fp::from_signed(-10, f5).value() == 0);
  CHECK(Fp(0, f5).pow(0).value() == 1);      // 0^0 = 1 by convention
  CHECK(Fp(0, f5).is_zero());
  CHECK_THROWS_AS(Fp(0, f5).inverse(), Error);

  PrimeField f7(7);
  CHECK_THROWS_AS(Fp(1, f5) + Fp(1, f7), Error);  // mixed moduli

  // Fermat inverse across the whole field.
  for (std::uint32_t v = 1; v < 7; ++v) {
    Fp x(v, f7);
    CHECK((x * x.inverse()).value() == 1);
  }
}

TEST_CASE("monomial factories, ordering, and domination", "[poly]") {
  Monomial c = Monomial::constant(3);
  CHECK(c.degree() == 0);
  CHECK(c.arity() == 3);

  Monomial ax = Monomial::axis(3, 2, 4);  // x2^4
  CHECK(ax.exponents() == std::vector<std::uint32_t>{0, 4, 0});
  CHECK(ax.exponent(2) == 4);

  Monomial u = Monomial::uniform(2, 2);
  CHECK(u.exponents() == std::vector<std::uint32_t>{2, 2});

  CHECK(u.dominates(Monomial({1, 2})));
  CHECK_FALSE(Monomial({1, 2}).dominates(u));
  CHECK(u.dominates(u));

  // Graded-lex: higher degree first, then lexicographically larger exponents.
  GradedLexGreater gt;
  CHECK(gt(Monomial({2, 0}), Monomial({1, 0})));
  CHECK(gt(Monomial({2, 0}), Monomial({1, 1})));
  CHECK(gt(Monomial({1, 1}), Monomial({0, 2})));
  CHECK_FALSE(gt(Monomial({1, 1}), Monomial({1, 1})));

  CHECK((Monomial({1, 2}) * Monomial({3, 0})).exponents() ==
        std::vector<std::uint32_t>{4, 2});
  CHECK_THROWS_AS(Monomial({1}) * Monomial({1, 2}), Error);  // arity mismatch
}

TEST_CASE("parsing the running example over F_5", "[parse]") {
  PrimeField f5(5);
  Polynomial f = parse_polynomial("x1*x2 - x1 - x2", f5, 2);
  CHECK(f.term_count() == 3);
  CHECK(f.coefficient(Monomial({1, 1})).value() == 1);
  CHECK(f.coefficient(Monomial({1, 0})).value() == 4);
  CHECK(f.coefficient(Monomial({0, 1})).value() == 4);
  CHECK(f.total_degree() == Degree{2});
  CHECK(f.eval_residues({2, 3}) == 1);
}

TEST_CASE("parser handles the full grammar", "[parse]") {
  PrimeField f7(7);
  CHECK(parse_polynomial("(x1+x2)^2", f7, 2) ==
        parse_polynomial("x1^2 + 2*x1*x2 + x2^2", f7, 2));
  CHECK(parse_polynomial("-x1", f7, 1) == parse_polynomial("6*x1", f7, 1));
  CHECK(parse_polynomial("+x1", f7, 1) == parse_polynomial("x1", f7, 1));
  CHECK(parse_polynomial("14", f7, 0).is_zero());
  CHECK(parse_polynomial("2*(x1 - (x1 - 1))", f7, 1) ==
        parse_polynomial("2", f7, 1));
  CHECK(parse_polynomial("x1^0", f7, 1) == parse_polynomial("1", f7, 1));
  // Whitespace is insignificant.
  CHECK(parse_polynomial("  x1 ^ 2 *  x2 ", f7, 2) ==
        parse_polynomial("x1^2*x2", f7, 2));
}

TEST_CASE("parser rejects malformed expressions with positions", "[parse]") {
  PrimeField f5(5);
  CHECK_THROWS_AS(parse_polynomial("x1 + + 2", f5, 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 x2", f5, 2), ParseError);  // missing '*'
  CHECK_THROWS_AS(parse_polynomial("(x1", f5, 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0", f5, 1), ParseError);   // indices are 1-based
  CHECK_THROWS_AS(parse_polynomial("x3", f5, 2), ParseError);   // beyond arity
  CHECK_THROWS_AS(parse_polynomial("x", f5, 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", f5, 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^", f5, 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2**3", f5, 0), ParseError);

  try {
    parse_polynomial("x1 + + 2", f5, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("polynomial ring operations", "[poly]") {
  PrimeField f3(3);
  Polynomial f = parse_polynomial("1 - x1*x2", f3, 2);

  // (1 - x1x2)^2 = 1 + x1x2 + x1^2x2^2 over F_3.
  Polynomial sq = f.pow(2);
  CHECK(sq == parse_polynomial("1 + x1*x2 + x1^2*x2^2", f3, 2));
  CHECK(f.pow(0) == parse_polynomial("1", f3, 2));
  CHECK(f.pow(1) == f);

  Polynomial zero = Polynomial::zero(f3, 2);
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.total_degree().has_value());  // degree of 0 is -infinity
  CHECK((f + zero) == f);
  CHECK((f * zero).is_zero());
  CHECK((f - f).is_zero());
  CHECK((-f + f).is_zero());

  Polynomial x = Polynomial::variable(f3, 2, 1);
  CHECK(x.eval_residues({2, 0}) == 2);
  CHECK(f.scaled(Fp(2, f3)) == parse_polynomial("2 - 2*x1*x2", f3, 2));

  // Cancellation drops terms entirely.
  Polynomial g = parse_polynomial("x1 + 2*x1", f3, 2);
  CHECK(g.is_zero());
}

TEST_CASE("evaluation agrees between Fp points and residue fast path", "[poly]") {
  PrimeField f5(5);
  Polynomial f = parse_polynomial("x1^3*x2 + 4*x2^2 + 3", f5, 2);
  for (std::uint32_t a = 0; a < 5; ++a) {
    for (std::uint32_t b = 0; b < 5; ++b) {
      std::vector<Fp> point{Fp(a, f5), Fp(b, f5)};
      CHECK(f.eval(point).value() == f.eval_residues({a, b}));
    }
  }
  CHECK_THROWS_AS(f.eval_residues({1}), Error);  // wrong arity
  CHECK_THROWS_AS(f.eval_residues({1, 7}), Error);  // not a residue
}

TEST_CASE("field reduction maps exponents into [1, p-1]", "[reduce]") {
  PrimeField f3(3);
  CHECK(reduce_field(parse_polynomial("x1^3", f3, 1)) ==
        parse_polynomial("x1", f3, 1));
  CHECK(reduce_field(parse_polynomial("x1^4", f3, 1)) ==
        parse_polynomial("x1^2", f3, 1));
  CHECK(reduce_field(parse_polynomial("x1^5", f3, 1)) ==
        parse_polynomial("x1", f3, 1));
  // x^2 is already reduced (exponent p-1 stays).
  CHECK(reduce_field(parse_polynomial("x1^2", f3, 1)) ==
        parse_polynomial("x1^2", f3, 1));
  // Collisions merge: x^3 + x collapses to 2x.
  CHECK(reduce_field(parse_polynomial("x1^3 + x1", f3, 1)) ==
        parse_polynomial("2*x1", f3, 1));
  // Exponent 0 is untouched.
  CHECK(reduce_field(parse_polynomial("2", f3, 1)) == parse_polynomial("2", f3, 1));

  // Evaluation is preserved across all of F_3.
  Polynomial f = parse_polynomial("x1^7 + 2*x1^4 + x1 + 1", f3, 1);
  Polynomial g = reduce_field(f);
  for (std::uint32_t v = 0; v < 3; ++v) {
    CHECK(f.eval_residues({v}) == g.eval_residues({v}));
  }
}

TEST_CASE("boolean reduction collapses every positive exponent to 1", "[reduce]") {
  PrimeField f5(5);
  Polynomial f = parse_polynomial("x1^4*x2 + 3*x1^2 + x2 + 2", f5, 2);
  Polynomial g = reduce_boolean(f);
  CHECK(g == parse_polynomial("x1*x2 + 3*x1 + x2 + 2", f5, 2));
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      CHECK(f.eval_residues({a, b}) == g.eval_residues({a, b}));
    }
  }
  // Cancellation after collapsing: x^2 + 4x vanishes on {0,1}.
  CHECK(reduce_boolean(parse_polynomial("x1^2 + 4*x1", f5, 1)).is_zero());
}

TEST_CASE("formatting is canonical graded-lex descending", "[format]") {
  PrimeField f5(5);
  CHECK(format_polynomial(parse_polynomial("x2 + x1*x2 + 3", f5, 2)) ==
        "x1*x2 + x2 + 3");
  CHECK(format_polynomial(parse_polynomial("0", f5, 2)) == "0");
  CHECK(format_polynomial(parse_polynomial("1*x1^1", f5, 1)) == "x1");
  CHECK(format_polynomial(parse_polynomial("4*x1^2*x2", f5, 2)) == "4*x1^2*x2");
  CHECK(format_polynomial(parse_polynomial("3", f5, 0)) == "3");

  // Round trip on a mixed expression.
  Polynomial f = parse_polynomial("2*x1^3 - x2^2*x3 + x1*x2*x3 - 4", f5, 3);
  CHECK(parse_polynomial(format_polynomial(f), f5, 3) == f);
}

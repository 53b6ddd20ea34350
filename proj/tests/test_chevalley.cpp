#include "catch_amalgamated.hpp"

#include "cnss/chevalley.hpp"
#include "cnss/parse.hpp"

using namespace cnss;

namespace {
PolySystem sys_of(const char* text) { return PolySystem::parse(text); }
}  // namespace

TEST_CASE("system files carry a p/n header and one polynomial per line", "[system]") {
  PolySystem s = sys_of("p=3 n=2\nx1*x2\nx1 + x2");
  CHECK(s.field().modulus() == 3);
  CHECK(s.arity() == 2);
  CHECK(s.size() == 2);
  CHECK(s.degree_sum() == 3);

  // Blank lines are skipped; header tokens may come in either order.
  PolySystem s2 = sys_of("n=1 p=5\n\nx1\n");
  CHECK(s2.size() == 1);
  CHECK(s2.field().modulus() == 5);

  CHECK_THROWS_AS(sys_of("x1*x2"), Error);            // missing header
  CHECK_THROWS_AS(sys_of("p=3\nx1"), Error);          // missing n
  CHECK_THROWS_AS(sys_of("p=3 n=1"), Error);          // no polynomials
  CHECK_THROWS_AS(sys_of("p=4 n=1\nx1"), Error);      // not prime
  CHECK_THROWS_AS(sys_of("p=3 n=1 q=2\nx1"), Error);  // unknown token
  CHECK_THROWS_AS(sys_of("p=3 n=1\nx2"), Error);      // variable beyond arity
}

TEST_CASE("degree sum ignores zero members", "[system]") {
  PolySystem s = sys_of("p=3 n=2\nx1*x2\n0");
  CHECK(s.size() == 2);
  CHECK(s.degree_sum() == 2);
}

TEST_CASE("common-root indicator is 0/1-valued and matches membership", "[indicator]") {
  PolySystem s = sys_of("p=2 n=2\nx1 + x2");
  Polynomial ind = common_root_indicator(s);
  CHECK(ind == parse_polynomial("1 + x1 + x2", s.field(), 2));
  CHECK(ind.eval_residues({0, 0}) == 1);
  CHECK(ind.eval_residues({1, 1}) == 1);
  CHECK(ind.eval_residues({1, 0}) == 0);
  CHECK(ind.eval_residues({0, 1}) == 0);
}

TEST_CASE("brute-force root counts on the worked systems", "[count]") {
  CHECK(count_common_roots(sys_of("p=2 n=2\nx1 + x2")) == 2);
  CHECK(count_common_roots(sys_of("p=3 n=2\nx1*x2")) == 5);
  CHECK(count_common_roots(sys_of("p=3 n=2\n1")) == 0);
  CHECK(count_common_roots(sys_of("p=3 n=2\nx1\nx2")) == 1);
  CHECK(count_common_roots(sys_of("p=5 n=1\n0")) == 5);
}

TEST_CASE("root counting respects the point budget", "[count]") {
  PolySystem s = sys_of("p=3 n=3\nx1");
  CHECK_THROWS_AS(count_common_roots(s, 26), BudgetError);
  CHECK(count_common_roots(s, 27) == 9);
}

TEST_CASE("divisibility check with and without a known root", "[warning]") {
  PolySystem s = sys_of("p=2 n=2\nx1 + x2");
  WarningReport plain = warning_check(s);
  CHECK(plain.root_count == 2);
  CHECK(plain.divisible);
  CHECK_FALSE(plain.second_root.has_value());

  std::vector<Fp> origin{Fp(0, s.field()), Fp(0, s.field())};
  WarningReport with_root = warning_check(s, origin);
  REQUIRE(with_root.second_root.has_value());
  CHECK((*with_root.second_root)[0].value() == 1);
  CHECK((*with_root.second_root)[1].value() == 1);

  CHECK(warning_check(sys_of("p=3 n=2\nx1")).root_count == 3);
  CHECK(warning_check(sys_of("p=5 n=3\nx1 + x2 + x3\nx1")).root_count == 5);
}

TEST_CASE("divisibility check rejects bad preconditions", "[warning]") {
  // Degree sum must be strictly below the arity.
  CHECK_THROWS_AS(warning_check(sys_of("p=3 n=2\nx1*x2")), Error);
  CHECK_THROWS_AS(warning_check(sys_of("p=3 n=1\nx1")), Error);

  // A claimed root must actually be a root.
  PolySystem s = sys_of("p=3 n=2\nx1");
  std::vector<Fp> not_root{Fp(1, s.field()), Fp(0, s.field())};
  CHECK_THROWS_AS(warning_check(s, not_root), Error);
}

TEST_CASE("parity classification on the three worked systems", "[classify]") {
  ResiduePrediction a = theorem4_classify(sys_of("p=3 n=2\nx1*x2"));
  CHECK(a.predicted == 2);  // n even, m odd: -1 mod 3
  CHECK(a.certificate == 1);
  CHECK(a.rule == Rule::T4);
  CHECK(count_common_roots(sys_of("p=3 n=2\nx1*x2")) % 3 == 2);

  ResiduePrediction b = theorem4_classify(sys_of("p=3 n=2\nx1\nx2"));
  CHECK(b.predicted == 1);  // n = 2 and m = 2 have equal parity: +1
  CHECK(count_common_roots(sys_of("p=3 n=2\nx1\nx2")) % 3 == 1);

  ResiduePrediction c = theorem4_classify(sys_of("p=3 n=2\nx1\nx1"));
  CHECK(c.predicted == 0);  // q = 0: coefficient of x1*x2 in x1^2
  CHECK(count_common_roots(sys_of("p=3 n=2\nx1\nx1")) % 3 == 0);
}

TEST_CASE("classification edge cases", "[classify]") {
  // Degree sum above the arity is out of scope.
  CHECK_THROWS_AS(theorem4_classify(sys_of("p=3 n=1\nx1*x1")), Error);
  CHECK_THROWS_AS(theorem4_classify(sys_of("p=2 n=2\nx1*x2\nx1")), Error);

  // Zero members are dropped before classification.
  ResiduePrediction d = theorem4_classify(sys_of("p=3 n=1\nx1\n0"));
  CHECK(d.predicted == 1);
  CHECK(count_common_roots(sys_of("p=3 n=1\nx1\n0")) % 3 == 1);

  // All members zero: every point is a root, p^n ≡ 0 for n >= 1.
  ResiduePrediction e = theorem4_classify(sys_of("p=3 n=1\n0"));
  CHECK(e.predicted == 0);

  // A nonzero constant member kills all roots.
  ResiduePrediction f = theorem4_classify(sys_of("p=3 n=1\n2\nx1"));
  CHECK(f.predicted == 0);
  CHECK(count_common_roots(sys_of("p=3 n=1\n2\nx1")) == 0);

  // Linear change of coefficients still matches the oracle.
  ResiduePrediction g = theorem4_classify(sys_of("p=5 n=2\n2*x1 + x2\nx2"));
  CHECK(g.predicted == count_common_roots(sys_of("p=5 n=2\n2*x1 + x2\nx2")) % 5);
}

TEST_CASE("reduced-indicator prediction is exact", "[predict]") {
  ResiduePrediction a = theorem5_predict(sys_of("p=3 n=2\nx1*x2"));
  CHECK(a.certificate == 2);  // d = 2
  CHECK(a.predicted == 2);    // (-1)^2 * 2
  CHECK(a.rule == Rule::T5);
  CHECK(count_common_roots(sys_of("p=3 n=2\nx1*x2")) % 3 == a.predicted);

  ResiduePrediction b = theorem5_predict(sys_of("p=2 n=2\nx1*x2 + x1 + x2"));
  CHECK(b.certificate == 1);
  CHECK(b.predicted == 1);
  CHECK(count_common_roots(sys_of("p=2 n=2\nx1*x2 + x1 + x2")) == 1);

  // Odd arity flips the sign.
  ResiduePrediction c = theorem5_predict(sys_of("p=3 n=1\nx1"));
  CHECK(count_common_roots(sys_of("p=3 n=1\nx1")) % 3 == c.predicted);

  // No degree restriction: a dense high-degree system still predicts exactly.
  ResiduePrediction d = theorem5_predict(sys_of("p=5 n=2\nx1^3*x2^2 + 4*x1\nx2^4 + x1*x2"));
  CHECK(count_common_roots(sys_of("p=5 n=2\nx1^3*x2^2 + 4*x1\nx2^4 + x1*x2")) % 5 ==
        d.predicted);
}

TEST_CASE("mixed systems are rejected at construction", "[system]") {
  PrimeField f3(3), f5(5);
  std::vector<Polynomial> polys;
  polys.push_back(parse_polynomial("x1", f3, 1));
  polys.push_back(parse_polynomial("x1", f5, 1));
  CHECK_THROWS_AS(PolySystem(std::move(polys)), Error);

  std::vector<Polynomial> arity_mix;
  arity_mix.push_back(parse_polynomial("x1", f3, 1));
  arity_mix.push_back(parse_polynomial("x1", f3, 2));
  CHECK_THROWS_AS(PolySystem(std::move(arity_mix)), Error);

  CHECK_THROWS_AS(PolySystem({}), Error);
}

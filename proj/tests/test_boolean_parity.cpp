#include "catch_amalgamated.hpp"

#include "cnss/boolean_parity.hpp"
#include "cnss/parse.hpp"

using namespace cnss;

TEST_CASE("cube evaluator agrees with dense evaluation", "[cube]") {
  PrimeField f5(5);
  Polynomial f = parse_polynomial("x1*x2 + 2*x3 + x1^4 + 3", f5, 3);
  detail::CubeEvaluator eval(f);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<std::uint32_t> point{mask & 1u, (mask >> 1) & 1u, (mask >> 2) & 1u};
    CHECK(eval.eval_mask(mask) == f.eval_residues(point));
  }
}

TEST_CASE("support counts split Boolean points by popcount parity", "[parity]") {
  PrimeField f3(3);
  Polynomial f = parse_polynomial("x1", f3, 2);

  ParityReport nz = boolean_support_counts(f, SetKind::NonzeroSet);
  CHECK(nz.even_count == 1);  // (1,1)
  CHECK(nz.odd_count == 1);   // (1,0)
  CHECK(nz.balanced_mod_p());
  CHECK(nz.difference_mod_p() == 0);

  ParityReport z = boolean_support_counts(f, SetKind::ZeroSet);
  CHECK(z.even_count == 1);  // (0,0)
  CHECK(z.odd_count == 1);   // (0,1)

  // Nonzero set of a nowhere-zero polynomial covers the cube.
  ParityReport all = boolean_support_counts(parse_polynomial("1", f3, 2),
                                            SetKind::NonzeroSet);
  CHECK(all.even_count + all.odd_count == 4);
}

TEST_CASE("parity balance holds exactly when no power term covers all variables",
          "[parity][t6]") {
  PrimeField f3(3);

  Theorem6Report holds = theorem6_check(parse_polynomial("x1", f3, 2));
  CHECK(holds.hypothesis_holds);
  CHECK(holds.hypothesis_holds_reduced);
  REQUIRE(holds.nonzero_balanced.has_value());
  REQUIRE(holds.zero_balanced.has_value());
  CHECK(*holds.nonzero_balanced);
  CHECK(*holds.zero_balanced);

  // (x1+x2)^2 contains 2*x1*x2: the hypothesis fails and no claim is made.
  Theorem6Report fails = theorem6_check(parse_polynomial("x1 + x2", f3, 2));
  CHECK_FALSE(fails.hypothesis_holds);
  CHECK_FALSE(fails.nonzero_balanced.has_value());
  CHECK_FALSE(fails.zero_balanced.has_value());
}

TEST_CASE("literal and multilinear hypothesis flags can disagree", "[parity][t6]") {
  PrimeField f3(3);
  // (x1*x2 + x1)^2 literally mentions every variable via x1^2*x2^2, but its
  // multilinear form is just x1: the coefficient on x1*x2 cancels to zero.
  Polynomial f = parse_polynomial("x1*x2 + x1", f3, 2);
  Theorem6Report rep = theorem6_check(f);
  CHECK_FALSE(rep.hypothesis_holds);
  CHECK(rep.hypothesis_holds_reduced);

  // The balance itself still holds here, as the multilinear form predicts.
  ParityReport nz = boolean_support_counts(f, SetKind::NonzeroSet);
  CHECK(nz.balanced_mod_p());
}

TEST_CASE("arity zero lies outside the parity theorems' scope", "[parity][t6]") {
  PrimeField f3(3);
  Theorem6Report rep = theorem6_check(Polynomial::zero(f3, 0));
  CHECK_FALSE(rep.hypothesis_holds);
  CHECK_FALSE(rep.nonzero_balanced.has_value());
}

TEST_CASE("parity difference identity needs no hypothesis", "[parity][t7]") {
  PrimeField f3(3);

  Theorem7Report a = theorem7_predict(parse_polynomial("x1", f3, 2));
  CHECK(a.identity_holds);
  CHECK(a.d == 0);

  Theorem7Report b = theorem7_predict(parse_polynomial("x1*x2 - 1", f3, 2));
  CHECK(b.identity_holds);

  // The multilinear d differs from the mod-(p-1) reduction here, and only the
  // multilinear one satisfies the identity.
  Theorem7Report c = theorem7_predict(parse_polynomial("x1^2", f3, 1));
  CHECK(c.d == 1);
  CHECK(c.d_field == 0);
  CHECK_FALSE(c.reductions_agree);
  CHECK(c.identity_holds);
  CHECK(c.predicted == 2);  // (-1)^1 * 1 mod 3
  CHECK(c.nonzero.difference_mod_p() == 2);

  // Arity-zero constants satisfy the identity trivially.
  Theorem7Report d = theorem7_predict(parse_polynomial("2", f3, 0));
  CHECK(d.identity_holds);
  Theorem7Report e = theorem7_predict(Polynomial::zero(f3, 0));
  CHECK(e.identity_holds);
}

TEST_CASE("shared-roots corollary", "[parity][corollary]") {
  PolySystem s = PolySystem::parse("p=2 n=2\nx1");
  SharedRootsParityReport rep = corollary_shared_roots_parity(s);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.shared_roots.even_count == 1);
  CHECK(rep.shared_roots.odd_count == 1);
  REQUIRE(rep.balanced.has_value());
  CHECK(*rep.balanced);

  // (1-x1^2)(1-x2^2) has the full monomial x1^2*x2^2: hypothesis fails.
  PolySystem s2 = PolySystem::parse("p=3 n=2\nx1\nx2");
  SharedRootsParityReport rep2 = corollary_shared_roots_parity(s2);
  CHECK_FALSE(rep2.hypothesis_holds);
  CHECK_FALSE(rep2.balanced.has_value());
}

TEST_CASE("subset corollary applies the degree bound (p-1)*degsum < |A|",
          "[parity][corollary]") {
  PolySystem s = PolySystem::parse("p=2 n=3\nx1 + x2 + x3");
  SubsetParityReport rep = corollary_subset_parity(s, 3);
  CHECK(rep.degree_bound_lhs == 1);
  CHECK(rep.degree_bound_holds);
  REQUIRE(rep.inner.has_value());
  CHECK(rep.inner->shared_roots.even_count == 4);
  CHECK(rep.inner->shared_roots.odd_count == 0);
  CHECK(rep.inner->balanced.value_or(false));  // 4 ≡ 0 (mod 2)

  // Bound failure: no inner check is performed.
  PolySystem s2 = PolySystem::parse("p=3 n=2\nx1*x2");
  SubsetParityReport rep2 = corollary_subset_parity(s2, 2);
  CHECK(rep2.degree_bound_lhs == 4);
  CHECK_FALSE(rep2.degree_bound_holds);
  CHECK_FALSE(rep2.inner.has_value());

  CHECK_THROWS_AS(corollary_subset_parity(s, 4), Error);  // |A| != arity
}

TEST_CASE("value-range analysis over the full space", "[parity][t8]") {
  PrimeField f3(3);

  // 1 - x1^2 takes the single nonzero value 1, only at x = 0.
  Theorem8Report unique = theorem8_analyze(parse_polynomial("1 - x1^2", f3, 1));
  CHECK(unique.nonzero_count == 1);
  CHECK(unique.reduced_has_top_term);
  REQUIRE(unique.unique_point.has_value());
  CHECK((*unique.unique_point)[0].value() == 0);
  CHECK(unique.unique_value == 1);
  CHECK(unique.top_coefficient == 2);  // -1 = (-1)^1 * 1
  REQUIRE(unique.coefficient_law_ok.has_value());
  CHECK(*unique.coefficient_law_ok);
  CHECK_FALSE(unique.multiple_values_ok.has_value());  // top term present

  // x1 has no x1^2 term, so it must attain at least two nonzero values.
  Theorem8Report multi = theorem8_analyze(parse_polynomial("x1", f3, 1));
  CHECK_FALSE(multi.reduced_has_top_term);
  REQUIRE(multi.multiple_values_ok.has_value());
  CHECK(*multi.multiple_values_ok);
  CHECK(multi.nonzero_count == 2);

  // x1^3 + 2*x1 is the zero function: its reduction vanishes and the
  // multiple-values claim is vacuous.
  Theorem8Report vac = theorem8_analyze(parse_polynomial("x1^3 + 2*x1", f3, 1));
  CHECK(vac.reduced_is_zero);
  CHECK(vac.nonzero_count == 0);
  CHECK_FALSE(vac.multiple_values_ok.has_value());
  CHECK_FALSE(vac.coefficient_law_ok.has_value());

  CHECK_THROWS_AS(theorem8_analyze(Polynomial::zero(f3, 1)), Error);
  CHECK_THROWS_AS(theorem8_analyze(parse_polynomial("x1 + x2 + x3", f3, 3), 10),
                  BudgetError);
}

TEST_CASE("multivariate value-range analysis", "[parity][t8]") {
  PrimeField f2(2);
  // Over F_2 with n = 2: f = x1*x2 is 1 only at (1,1); top term present.
  Theorem8Report r = theorem8_analyze(parse_polynomial("x1*x2", f2, 2));
  CHECK(r.nonzero_count == 1);
  CHECK(r.reduced_has_top_term);
  REQUIRE(r.coefficient_law_ok.has_value());
  CHECK(*r.coefficient_law_ok);  // coeff 1 = 1 * (-1)^2

  // f = x1 + x2 attains 1 at (1,0) and (0,1): multiple points, same value.
  Theorem8Report s = theorem8_analyze(parse_polynomial("x1 + x2", f2, 2));
  CHECK(s.nonzero_count == 2);
  CHECK_FALSE(s.reduced_has_top_term);
  REQUIRE(s.multiple_values_ok.has_value());
  CHECK(*s.multiple_values_ok);
}

TEST_CASE("cube enumerations respect the budget", "[parity]") {
  PrimeField f2(2);
  Polynomial f = parse_polynomial("x1 + x2 + x3 + x4 + x5", f2, 5);
  CHECK_THROWS_AS(boolean_support_counts(f, SetKind::NonzeroSet, 16), BudgetError);
  CHECK_NOTHROW(boolean_support_counts(f, SetKind::NonzeroSet, 32));
  CHECK_THROWS_AS(theorem6_check(f, 16), BudgetError);
  CHECK_THROWS_AS(theorem7_predict(f, 16), BudgetError);
}

#include "catch_amalgamated.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "cnss/boolean_parity.hpp"
#include "cnss/graph.hpp"
#include "cnss/parse.hpp"

using namespace cnss;

namespace {

Graph triangle() { return Graph::parse("n=3\n1 2\n1 3\n2 3\n"); }

Graph triangle_plus_isolated() { return Graph::parse("n=4\n1 2\n1 3\n2 3\n"); }

Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

std::vector<std::uint32_t> degrees_of(const Graph& g, std::uint64_t edge_mask) {
  std::vector<std::uint32_t> deg(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (edge_mask >> e & 1) {
      ++deg[g.edges()[e].first];
      ++deg[g.edges()[e].second];
    }
  }
  return deg;
}

}  // namespace

TEST_CASE("graph files parse with 1-based edges and normalization", "[graph]") {
  Graph g = Graph::parse("  n=4 \n\n2 1\n1 3\n\n3 4\n");
  CHECK(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 3);
  // Edges are stored sorted with u < v.
  CHECK(g.edges()[0] == Graph::Edge{0, 1});
  CHECK(g.edges()[1] == Graph::Edge{0, 2});
  CHECK(g.edges()[2] == Graph::Edge{2, 3});

  Graph k4 = Graph::complete(4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  for (std::uint32_t u = 0; u < 4; ++u) {
    for (std::uint32_t v = 0; v < 4; ++v) {
      CHECK(k4.adjacent(u, v) == (u != v));
    }
  }
}

TEST_CASE("malformed graph files are rejected", "[graph]") {
  CHECK_THROWS_AS(Graph::parse("n=3\n1 1\n"), Error);          // self-loop
  CHECK_THROWS_AS(Graph::parse("n=3\n1 2\n2 1\n"), Error);     // duplicate edge
  CHECK_THROWS_AS(Graph::parse("n=4\n1 5\n"), Error);          // endpoint out of range
  CHECK_THROWS_AS(Graph::parse("1 2\nn=3\n"), Error);          // edge before header
  CHECK_THROWS_AS(Graph::parse(""), Error);                    // no header at all
  CHECK_THROWS_AS(Graph::parse("n=4 4\n"), Error);             // malformed header
  CHECK_THROWS_AS(Graph::parse("n=3\n0 1\n"), Error);          // vertices are 1-based
  CHECK_THROWS_AS(Graph::parse("n=3\n1 2 3\n"), Error);        // three endpoints
  CHECK_THROWS_AS(Graph::parse("n=3\na b\n"), ParseError);     // stray characters
  CHECK_THROWS_AS(Graph::parse("n=3\n99999999 1\n"), ParseError);
}

TEST_CASE("adjacency, neighbors, and incident edges on the triangle", "[graph]") {
  Graph g = triangle();
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));  // order-insensitive
  CHECK_FALSE(g.adjacent(0, 0));
  CHECK(g.neighbors(0) == std::vector<std::uint32_t>{1, 2});
  CHECK(g.neighbors(2) == std::vector<std::uint32_t>{0, 1});
  // Edge order is (1,2), (1,3), (2,3); vertex 2 sits on the first and last.
  CHECK(g.incident_edges(1) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("degree polynomial is the 0/1 indicator of the degree condition",
          "[graph][t9]") {
  PrimeField f2(2);
  Graph k4 = Graph::complete(4);
  Polynomial f = degree_subset_poly(k4, f2, Fp(0, f2));
  CHECK(f.arity() == k4.edge_count());

  detail::CubeEvaluator eval(f);
  std::uint64_t ones = 0;
  for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
    std::vector<std::uint32_t> deg = degrees_of(k4, mask);
    bool expect = true;
    for (std::uint32_t d : deg) expect = expect && d % 2 == 0;
    std::uint32_t got = eval.eval_mask(mask);
    CHECK((got == 0 || got == 1));
    CHECK(got == (expect ? 1u : 0u));
    ones += got;
  }
  // The even-degree subsets of K4 form its cycle space: 2^(6-4+1) elements.
  CHECK(ones == 8);
}

TEST_CASE("degree polynomial restricted to a vertex subset", "[graph][t9]") {
  PrimeField f3(3);
  Graph g = triangle();
  // Only vertex 1 is in scope; its incident edges are x1 and x2.
  Polynomial f =
      degree_subset_poly(g, f3, Fp(0, f3), std::vector<std::uint32_t>{0});
  CHECK(f == parse_polynomial("1 - (x1 + x2)^2", f3, 3));

  CHECK_THROWS_AS(degree_subset_poly(Graph(3, {}), f3, Fp(0, f3)), Error);
  PrimeField f2(2);
  CHECK_THROWS_AS(degree_subset_poly(g, f3, Fp(0, f2)), Error);
}

TEST_CASE("edge-subset parity balance on K4", "[graph][t9]") {
  PrimeField f2(2);
  Theorem9Report r = theorem9_check(Graph::complete(4), f2, Fp(0, f2));
  CHECK(r.qualifying == 8);
  CHECK(r.even_count == 4);  // empty set and the three 4-cycles
  CHECK(r.odd_count == 4);   // the four triangles
  CHECK(r.bound_lhs == 4);
  CHECK(r.bound_holds);      // 4 < 6
  REQUIRE(r.balanced.has_value());
  CHECK(*r.balanced);
}

TEST_CASE("edge-subset counts outside the degree bound carry no claim",
          "[graph][t9]") {
  PrimeField f2(2);
  Theorem9Report r = theorem9_check(triangle(), f2, Fp(0, f2));
  CHECK(r.bound_lhs == 3);
  CHECK_FALSE(r.bound_holds);  // 3 < 3 fails
  CHECK_FALSE(r.balanced.has_value());
  // The cycle space of the triangle: empty set and the full triangle.
  CHECK(r.qualifying == 2);
  CHECK(r.even_count == 1);
  CHECK(r.odd_count == 1);
}

TEST_CASE("edge-subset check on a scoped vertex set", "[graph][t9]") {
  PrimeField f2(2);
  Theorem9Report r = theorem9_check(triangle(), f2, Fp(0, f2),
                                    std::vector<std::uint32_t>{0});
  CHECK(r.bound_lhs == 1);
  CHECK(r.bound_holds);
  CHECK(r.qualifying == 4);  // x1, x2 both in or both out, x3 free
  CHECK(r.even_count == 2);
  CHECK(r.odd_count == 2);
  REQUIRE(r.balanced.has_value());
  CHECK(*r.balanced);

  CHECK_THROWS_AS(theorem9_check(triangle(), f2, Fp(0, f2), std::nullopt, 4),
                  BudgetError);
  CHECK_THROWS_AS(theorem9_check(Graph(3, {}), f2, Fp(0, f2)), Error);
}

TEST_CASE("neighborhood polynomial on a single edge", "[graph][neighborhood]") {
  PrimeField f2(2);
  Graph g(2, {{0, 1}});
  Polynomial f = vertex_neighborhood_poly(g, f2, {0}, Fp(1, f2));
  // 1 - (x1*x2 - 1) collapses to x1*x2 over F_2.
  CHECK(f == parse_polynomial("x1*x2", f2, 2));

  NeighborhoodReport r = neighborhood_counts(g, f2, {0}, Fp(1, f2));
  CHECK(r.qualifying == 1);  // only S = {1, 2} works
  CHECK(r.even_count == 1);
  CHECK(r.odd_count == 0);
  CHECK_FALSE(r.boundary_condition);  // 2 > 2 fails

  CHECK_THROWS_AS(vertex_neighborhood_poly(g, f2, {}, Fp(1, f2)), Error);
  CHECK_THROWS_AS(vertex_neighborhood_poly(g, f2, {5}, Fp(1, f2)), Error);
  PrimeField f3(3);
  CHECK_THROWS_AS(vertex_neighborhood_poly(g, f2, {0}, Fp(1, f3)), Error);
}

TEST_CASE("neighborhood counts on the path with the bound satisfied",
          "[graph][neighborhood]") {
  PrimeField f2(2);
  NeighborhoodReport r = neighborhood_counts(path4(), f2, {0}, Fp(0, f2));
  // S avoiding vertex 1 always qualifies (8 subsets); S containing vertex 1
  // qualifies exactly when it avoids its only neighbor, vertex 2 (4 subsets).
  CHECK(r.qualifying == 12);
  CHECK(r.even_count == 6);
  CHECK(r.odd_count == 6);
  CHECK(r.boundary_condition);  // 4 > 2
}

TEST_CASE("clique statistics count cliques through each subset", "[graph][clique]") {
  Graph tri = triangle();
  CliqueStats s = clique_stats(tri, 3);
  CHECK(s.count(0) == 1);      // one triangle in total
  CHECK(s.count(0b001) == 1);  // through vertex 1
  CHECK(s.count(0b111) == 1);  // through all three

  // A path has no triangle at all.
  CliqueStats none = clique_stats(Graph(3, {{0, 1}, {1, 2}}), 3);
  CHECK(none.counts.empty());
  CHECK(none.count(0) == 0);

  Graph k4 = Graph::complete(4);
  CHECK(clique_count_containing(k4, 3, {}) == 4);
  CHECK(clique_count_containing(k4, 3, {0}) == 3);
  CHECK(clique_count_containing(k4, 3, {0, 1}) == 2);
  CHECK(clique_count_containing(k4, 3, {0, 1, 2}) == 1);
  CliqueStats ks = clique_stats(k4, 3);
  for (const auto& [mask, count] : ks.counts) {
    CHECK(count == clique_count_containing(k4, 3, detail::mask_to_vertices(mask)));
  }

  // A non-clique is contained in no clique.
  CHECK(clique_count_containing(triangle_plus_isolated(), 3, {0, 3}) == 0);

  CHECK_THROWS_AS(clique_stats(tri, 1), Error);
  CHECK_THROWS_AS(clique_stats(Graph(17, {}), 3), BudgetError);
}

TEST_CASE("clique intersection polynomial is the 0/1 indicator of the count",
          "[graph][clique]") {
  PrimeField f2(2);
  Graph tri = triangle();
  Polynomial f = clique_intersection_poly(tri, f2, 3, Fp(0, f2));
  detail::CubeEvaluator eval(f);
  for (std::uint32_t mask = 0; mask < (1u << 3); ++mask) {
    // Every nonempty U meets the unique triangle, so only U = {} counts 0.
    CHECK(eval.eval_mask(mask) == (mask == 0 ? 1u : 0u));
  }

  Graph k4 = Graph::complete(4);
  Polynomial g = clique_intersection_poly(k4, f2, 3, Fp(1, f2));
  detail::CubeEvaluator geval(g);
  for (std::uint32_t mask = 0; mask < (1u << 4); ++mask) {
    // Singletons meet 3 of the 4 triangles; larger sets meet all 4.
    bool expect = std::popcount(mask) == 1;
    CHECK(geval.eval_mask(mask) == (expect ? 1u : 0u));
  }

  PrimeField f3(3);
  Graph tp = triangle_plus_isolated();
  Polynomial h = clique_intersection_poly(tp, f3, 3, Fp(0, f3));
  detail::CubeEvaluator heval(h);
  for (std::uint32_t mask = 0; mask < (1u << 4); ++mask) {
    bool expect = (mask & 0b0111) == 0;  // count is 1 unless U avoids the triangle
    CHECK(heval.eval_mask(mask) == (expect ? 1u : 0u));
  }
}

TEST_CASE("subset search finds the first balanced vertex set", "[graph][prop62]") {
  PrimeField f2(2);

  Prop62Result a = prop62_search(triangle_plus_isolated(), f2, 3);
  CHECK(a.subset == std::vector<std::uint32_t>{3});
  CHECK(a.subset_mask == 0b1000);
  CHECK(a.intersecting_count == 0);

  Prop62Result b = prop62_search(Graph::complete(4), f2, 3);
  CHECK(b.subset == std::vector<std::uint32_t>{0, 1});
  CHECK(b.intersecting_count == 4);

  Prop62Result c = prop62_search(Graph(4, {}), f2, 3);
  CHECK(c.subset == std::vector<std::uint32_t>{0});
  CHECK(c.intersecting_count == 0);

  // |V| > d(p-1) is a hard precondition: 3 <= 3 is rejected.
  CHECK_THROWS_AS(prop62_search(triangle(), f2, 3), Error);
  CHECK_THROWS_AS(prop62_search(Graph(17, {}), f2, 3), BudgetError);
}

TEST_CASE("subsets with residue-zero clique count split evenly by parity",
          "[graph][prop62]") {
  PrimeField f2(2);
  Prop62ParityReport r = prop62_parity_counts(triangle_plus_isolated(), f2, 3);
  // Qualifying subsets avoid the triangle: {} and {4}.
  CHECK(r.even_count == 1);
  CHECK(r.odd_count == 1);
  CHECK(r.balanced);

  CHECK_THROWS_AS(prop62_parity_counts(Graph(17, {}), f2, 3), BudgetError);
}

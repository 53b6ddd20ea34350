#ifndef CNSS_GRAPH_HPP
#define CNSS_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnss/common.hpp"
#include "cnss/field.hpp"
#include "cnss/polynomial.hpp"

namespace cnss {

/// Undirected simple graph. Vertices are 0-based internally; edges are stored
/// as sorted (u, v) pairs with u < v, in lexicographic order, which also fixes
/// the edge-variable assignment: edge i corresponds to variable x_{i+1}.
class Graph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  Graph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
      if (e.first > e.second) std::swap(e.first, e.second);
      if (e.first == e.second) throw Error("self-loops are not allowed");
      if (e.second >= vertex_count_) {
        throw Error("edge endpoint " + std::to_string(e.second + 1) +
                    " exceeds vertex count " + std::to_string(vertex_count_));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i] == edges_[i - 1]) throw Error("duplicate edge");
    }
  }

  /// File format: a line `n=<vertex_count>`, then one edge `u v` per line with
  /// 1-based vertex indices. Blank lines are skipped.
  static Graph parse(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      std::size_t line_offset = start;
      start = end + 1;

      std::vector<std::uint64_t> numbers;
      bool header = false;
      std::size_t pos = 0;
      while (pos < line.size()) {
        char c = line[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++pos;
        } else if (!n && line.compare(pos, 2, "n=") == 0) {
          header = true;
          pos += 2;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          std::uint64_t v = 0;
          while (pos < line.size() &&
                 std::isdigit(static_cast<unsigned char>(line[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(line[pos] - '0');
            if (v > 1'000'000) throw ParseError("vertex index too large", line_offset + pos);
            ++pos;
          }
          numbers.push_back(v);
        } else {
          throw ParseError("unexpected character in graph file", line_offset + pos);
        }
      }
      if (header) {
        if (numbers.size() != 1) throw Error("malformed graph header");
        n = static_cast<std::size_t>(numbers[0]);
      } else if (!numbers.empty()) {
        if (!n) throw Error("graph file must start with n=<vertex_count>");
        if (numbers.size() != 2) throw Error("each edge line must contain exactly two vertices");
        if (numbers[0] == 0 || numbers[1] == 0) throw Error("vertex indices are 1-based");
        edges.emplace_back(static_cast<std::uint32_t>(numbers[0] - 1),
                           static_cast<std::uint32_t>(numbers[1] - 1));
      }
      if (end == text.size()) break;
    }
    if (!n) throw Error("graph file must declare n=<vertex_count>");
    return Graph(*n, std::move(edges));
  }

  static Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  /// Indices into edges() of the edges incident to v.
  std::vector<std::size_t> incident_edges(std::uint32_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].first == v || edges_[i].second == v) out.push_back(i);
    }
    return out;
  }

  std::vector<std::uint32_t> neighbors(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    for (const Edge& e : edges_) {
      if (e.first == v) out.push_back(e.second);
      if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

namespace detail {

inline void check_vertex_subset(const Graph& g, const std::vector<std::uint32_t>& vs) {
  for (std::uint32_t v : vs) {
    if (v >= g.vertex_count()) {
      throw Error("vertex index " + std::to_string(v + 1) + " exceeds vertex count " +
                  std::to_string(g.vertex_count()));
    }
  }
}

inline void check_subset_budget(const Graph& g, std::uint64_t budget) {
  if (g.vertex_count() >= 31 ||
      (std::uint64_t{1} << g.vertex_count()) > budget) {
    throw BudgetError("subset enumeration over " + std::to_string(g.vertex_count()) +
                      " vertices exceeds budget " + std::to_string(budget));
  }
}

inline std::vector<std::uint32_t> normalize_vertex_subset(const Graph& g,
                                                          std::vector<std::uint32_t> vs) {
  check_vertex_subset(g, vs);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool is_clique_mask(const Graph& g, std::uint32_t mask) {
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    if (!(mask >> u & 1)) continue;
    for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v) {
      if ((mask >> v & 1) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

/// Masks of all d-cliques, ascending.
inline std::vector<std::uint32_t> clique_masks(const Graph& g, std::size_t d) {
  if (d < 2) throw Error("clique size must be at least 2");
  check_subset_budget(g, kSubsetBudget);
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) == static_cast<int>(d) && is_clique_mask(g, mask)) {
      out.push_back(mask);
    }
  }
  return out;
}

inline std::uint32_t subset_mask(const Graph& g, const std::vector<std::uint32_t>& vs) {
  check_vertex_subset(g, vs);
  std::uint32_t mask = 0;
  for (std::uint32_t v : vs) mask |= std::uint32_t{1} << v;
  return mask;
}

inline std::vector<std::uint32_t> mask_to_vertices(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; mask >> v != 0; ++v) {
    if (mask >> v & 1) out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// f = prod_v [1 - (sum_{e incident to v} x_e - k)^{p-1}] over the edge
/// variables x_1..x_|E|. On the indicator of K ⊆ E, f is 1 iff every vertex in
/// scope (all of V by default, or the given subset) has degree ≡ k mod p.
inline Polynomial degree_subset_poly(
    const Graph& g, const PrimeField& field, const Fp& k,
    const std::optional<std::vector<std::uint32_t>>& vertices = std::nullopt) {
  if (g.edge_count() == 0) throw Error("graph has no edges");
  if (k.modulus() != field.modulus()) throw Error("k is not in the given field");
  std::vector<std::uint32_t> scope;
  if (vertices) {
    scope = detail::normalize_vertex_subset(g, *vertices);
  } else {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) scope.push_back(v);
  }

  const std::size_t arity = g.edge_count();
  Polynomial one = Polynomial::constant(field, arity, Fp(1, field));
  Polynomial f = one;
  for (std::uint32_t v : scope) {
    Polynomial degree = Polynomial::constant(field, arity, -k);
    for (std::size_t e : g.incident_edges(v)) {
      degree = degree + Polynomial::variable(field, arity, e + 1);
    }
    f = f * (one - degree.pow(field.modulus() - 1));
  }
  return f;
}

/// Theorem 9 oracle: counts the edge subsets K with deg_K(v) ≡ k (mod p) for
/// every vertex in scope, split by |K| parity. The parity balance is asserted
/// only under the degree bound scope_size * (p-1) < |E|.
struct Theorem9Report {
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;
  std::uint64_t qualifying = 0;
  std::uint64_t bound_lhs = 0;  // scope_size * (p-1)
  bool bound_holds = false;
  std::optional<bool> balanced;
};

inline Theorem9Report theorem9_check(
    const Graph& g, const PrimeField& field, const Fp& k,
    const std::optional<std::vector<std::uint32_t>>& vertices = std::nullopt,
    std::uint64_t budget = kCubeBudget) {
  if (g.edge_count() == 0) throw Error("graph has no edges");
  if (k.modulus() != field.modulus()) throw Error("k is not in the given field");
  if (g.edge_count() >= 64 || (std::uint64_t{1} << g.edge_count()) > budget) {
    throw BudgetError("edge-subset enumeration exceeds budget");
  }
  std::vector<std::uint32_t> scope;
  if (vertices) {
    scope = detail::normalize_vertex_subset(g, *vertices);
  } else {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) scope.push_back(v);
  }

  const std::uint32_t p = field.modulus();
  Theorem9Report report;
  report.bound_lhs = std::uint64_t{scope.size()} * (p - 1);
  report.bound_holds = report.bound_lhs < g.edge_count();

  std::vector<std::uint32_t> deg(g.vertex_count());
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (mask >> e & 1) {
        ++deg[g.edges()[e].first];
        ++deg[g.edges()[e].second];
      }
    }
    bool ok = true;
    for (std::uint32_t v : scope) {
      if (deg[v] % p != k.value()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++report.qualifying;
    if (std::popcount(mask) % 2 == 0) {
      ++report.even_count;
    } else {
      ++report.odd_count;
    }
  }
  if (report.bound_holds) {
    report.balanced = report.even_count % p == report.odd_count % p;
  }
  return report;
}

/// f = prod_{u in U} [1 - (x_u * sum_{v adjacent to u} x_v - k)^{p-1}] over
/// vertex variables x_1..x_|V|. On the indicator of S ⊆ V, f is 1 iff for
/// every u in U, b_u * |S ∩ N(u)| ≡ k (mod p).
inline Polynomial vertex_neighborhood_poly(const Graph& g, const PrimeField& field,
                                           const std::vector<std::uint32_t>& u_set,
                                           const Fp& k) {
  if (u_set.empty()) throw Error("vertex subset must be nonempty");
  if (k.modulus() != field.modulus()) throw Error("k is not in the given field");
  const std::vector<std::uint32_t> scope = detail::normalize_vertex_subset(g, u_set);

  const std::size_t arity = g.vertex_count();
  Polynomial one = Polynomial::constant(field, arity, Fp(1, field));
  Polynomial f = one;
  for (std::uint32_t u : scope) {
    Polynomial nbr_sum = Polynomial::zero(field, arity);
    for (std::uint32_t v : g.neighbors(u)) {
      nbr_sum = nbr_sum + Polynomial::variable(field, arity, v + 1);
    }
    Polynomial inner = Polynomial::variable(field, arity, u + 1) * nbr_sum -
                       Polynomial::constant(field, arity, k);
    f = f * (one - inner.pow(field.modulus() - 1));
  }
  return f;
}

/// Exploratory enumeration for the neighborhood condition: counts qualifying
/// S ⊆ V by |S| parity and reports the tentative bound |V| > 2(p-1)|U|.
/// No assertion is attached to these counts.
struct NeighborhoodReport {
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;
  std::uint64_t qualifying = 0;
  bool boundary_condition = false;  // |V| > 2(p-1)|U|
};

inline NeighborhoodReport neighborhood_counts(const Graph& g, const PrimeField& field,
                                              const std::vector<std::uint32_t>& u_set,
                                              const Fp& k,
                                              std::uint64_t budget = kSubsetBudget) {
  if (u_set.empty()) throw Error("vertex subset must be nonempty");
  if (k.modulus() != field.modulus()) throw Error("k is not in the given field");
  detail::check_vertex_subset(g, u_set);
  detail::check_subset_budget(g, budget);

  const std::uint32_t p = field.modulus();
  NeighborhoodReport report;
  report.boundary_condition =
      g.vertex_count() > std::uint64_t{2} * (p - 1) * u_set.size();

  std::vector<std::uint32_t> nbr_mask(g.vertex_count(), 0);
  for (std::uint32_t u : u_set) {
    for (std::uint32_t v : g.neighbors(u)) nbr_mask[u] |= std::uint32_t{1} << v;
  }
  const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (std::uint32_t u : u_set) {
      std::uint32_t inter = (mask >> u & 1)
                                ? static_cast<std::uint32_t>(std::popcount(mask & nbr_mask[u]))
                                : 0;
      if (inter % p != k.value()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++report.qualifying;
    if (std::popcount(mask) % 2 == 0) {
      ++report.even_count;
    } else {
      ++report.odd_count;
    }
  }
  return report;
}

/// K(I) for every clique I (as a vertex bitmask, bit v = vertex v) with
/// K(I) > 0, including I = ∅ whose count is the total number of d-cliques.
struct CliqueStats {
  std::size_t d = 0;
  std::map<std::uint32_t, std::uint64_t> counts;

  std::uint64_t count(std::uint32_t mask) const {
    auto it = counts.find(mask);
    return it == counts.end() ? 0 : it->second;
  }
};

inline CliqueStats clique_stats(const Graph& g, std::size_t d) {
  CliqueStats stats;
  stats.d = d;
  for (std::uint32_t clique : detail::clique_masks(g, d)) {
    // Every subset of a clique is itself a clique; credit them all.
    std::uint32_t sub = clique;
    for (;;) {
      ++stats.counts[sub];
      if (sub == 0) break;
      sub = (sub - 1) & clique;
    }
  }
  return stats;
}

/// Number of d-cliques of g containing every vertex of I.
inline std::uint64_t clique_count_containing(const Graph& g, std::size_t d,
                                             const std::vector<std::uint32_t>& i_set) {
  const std::uint32_t want = detail::subset_mask(g, i_set);
  std::uint64_t count = 0;
  for (std::uint32_t clique : detail::clique_masks(g, d)) {
    if ((want & ~clique) == 0) ++count;
  }
  return count;
}

/// f = 1 - (sum_{∅ != I clique} (-1)^{|I|+1} K(I) prod_{i in I} x_i - k)^{p-1}
/// over vertex variables. On the indicator of U ⊆ V, f is 1 iff the number of
/// d-cliques of g intersecting U is ≡ k (mod p), by inclusion–exclusion.
inline Polynomial clique_intersection_poly(const Graph& g, const PrimeField& field,
                                           std::size_t d, const Fp& k) {
  if (k.modulus() != field.modulus()) throw Error("k is not in the given field");
  CliqueStats stats = clique_stats(g, d);

  const std::size_t arity = g.vertex_count();
  Polynomial inner = Polynomial::constant(field, arity, -k);
  for (const auto& [mask, count] : stats.counts) {
    if (mask == 0) continue;
    std::vector<std::uint32_t> exponents(arity, 0);
    for (std::uint32_t v : detail::mask_to_vertices(mask)) exponents[v] = 1;
    Fp coeff(count % field.modulus(), field);
    if (std::popcount(mask) % 2 == 0) coeff = -coeff;  // (-1)^{|I|+1}
    inner.add_term(Monomial(std::move(exponents)), coeff.value());
  }
  Polynomial one = Polynomial::constant(field, arity, Fp(1, field));
  return one - inner.pow(field.modulus() - 1);
}

/// Result of the Prop 6.2 search: the first nonempty U (in ascending bitmask
/// order, vertex 1 = least significant bit) whose intersecting d-clique count
/// is divisible by p.
struct Prop62Result {
  std::uint32_t subset_mask = 0;
  std::vector<std::uint32_t> subset;  // 0-based, ascending
  std::uint64_t intersecting_count = 0;
};

inline Prop62Result prop62_search(const Graph& g, const PrimeField& field, std::size_t d,
                                  std::uint64_t budget = kSubsetBudget) {
  const std::uint32_t p = field.modulus();
  if (g.vertex_count() <= d * std::uint64_t{p - 1}) {
    throw Error("requires |V| > d(p-1): " + std::to_string(g.vertex_count()) +
                " <= " + std::to_string(d * std::uint64_t{p - 1}));
  }
  detail::check_subset_budget(g, budget);
  const std::vector<std::uint32_t> cliques = detail::clique_masks(g, d);

  const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::uint64_t count = 0;
    for (std::uint32_t clique : cliques) {
      if (clique & mask) ++count;
    }
    if (count % p == 0) {
      return Prop62Result{mask, detail::mask_to_vertices(mask), count};
    }
  }
  throw Error("no qualifying subset exists, contradicting the proposition");
}

/// Parity corollary of the exclusion sign in Prop 6.2 (k = 0): among all
/// U ⊆ V (including ∅) whose intersecting d-clique count is ≡ 0 mod p, the
/// even-|U| and odd-|U| tallies agree mod p.
struct Prop62ParityReport {
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;
  bool balanced = false;
};

inline Prop62ParityReport prop62_parity_counts(const Graph& g, const PrimeField& field,
                                               std::size_t d,
                                               std::uint64_t budget = kSubsetBudget) {
  detail::check_subset_budget(g, budget);
  const std::uint32_t p = field.modulus();
  const std::vector<std::uint32_t> cliques = detail::clique_masks(g, d);

  Prop62ParityReport report;
  const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::uint64_t count = 0;
    for (std::uint32_t clique : cliques) {
      if (clique & mask) ++count;
    }
    if (count % p != 0) continue;
    if (std::popcount(mask) % 2 == 0) {
      ++report.even_count;
    } else {
      ++report.odd_count;
    }
  }
  report.balanced = report.even_count % p == report.odd_count % p;
  return report;
}

}  // namespace cnss

#endif  // CNSS_GRAPH_HPP

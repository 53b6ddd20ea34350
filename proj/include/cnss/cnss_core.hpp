#ifndef CNSS_CNSS_CORE_HPP
#define CNSS_CNSS_CORE_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnss/common.hpp"
#include "cnss/field.hpp"
#include "cnss/polynomial.hpp"

namespace cnss {

/// Target exponents (t_1, ..., t_n) for the classic hypothesis.
struct DegreeProfile {
  std::vector<std::uint32_t> targets;

  std::uint64_t sum() const noexcept {
    std::uint64_t s = 0;
    for (std::uint32_t t : targets) s += t;
    return s;
  }
};

/// Per-variable value sets S_1, ..., S_n; each a nonempty set of distinct
/// residues, stored sorted ascending.
class Grid {
 public:
  Grid(const PrimeField& field, std::vector<std::vector<std::uint32_t>> sets)
      : field_(field), sets_(std::move(sets)) {
    for (auto& s : sets_) {
      if (s.empty()) throw Error("grid set must be nonempty");
      std::sort(s.begin(), s.end());
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= field_.modulus()) {
          throw Error("grid value " + std::to_string(s[i]) +
                      " is not a residue mod " + std::to_string(field_.modulus()));
        }
        if (i > 0 && s[i] == s[i - 1]) {
          throw Error("grid set contains duplicate value " + std::to_string(s[i]));
        }
      }
    }
  }

  /// The full grid F_p^n.
  static Grid full(const PrimeField& field, std::size_t arity) {
    std::vector<std::uint32_t> all(field.modulus());
    for (std::uint32_t v = 0; v < field.modulus(); ++v) all[v] = v;
    return Grid(field, std::vector<std::vector<std::uint32_t>>(arity, all));
  }

  /// Text form: one set per line (or per ';'-separated chunk), residues
  /// comma-separated, e.g. "0,1,4". The single token "full" with an explicit
  /// arity gives the full grid.
  static Grid parse(std::string_view text, const PrimeField& field,
                    std::optional<std::size_t> arity = std::nullopt) {
    std::string trimmed;
    trimmed.reserve(text.size());
    for (char c : text) trimmed += (c == ';') ? '\n' : c;

    if (arity) {
      std::string_view t(trimmed);
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
      if (t == "full") return full(field, *arity);
    }

    std::vector<std::vector<std::uint32_t>> sets;
    std::size_t line_start = 0;
    while (line_start <= trimmed.size()) {
      std::size_t line_end = trimmed.find('\n', line_start);
      if (line_end == std::string::npos) line_end = trimmed.size();
      std::string_view line(trimmed.data() + line_start, line_end - line_start);
      line_start = line_end + 1;
      bool blank = true;
      for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      }
      if (blank) continue;
      sets.push_back(parse_residue_list(line, field));
      if (line_end == trimmed.size()) break;
    }
    if (arity && sets.size() != *arity) {
      throw Error("grid has " + std::to_string(sets.size()) +
                  " sets, expected " + std::to_string(*arity));
    }
    return Grid(field, std::move(sets));
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return sets_.size(); }
  const std::vector<std::vector<std::uint32_t>>& sets() const noexcept { return sets_; }

  /// Number of grid points, saturating at UINT64_MAX.
  std::uint64_t point_count() const noexcept {
    std::uint64_t n = 1;
    for (const auto& s : sets_) n = detail::saturating_mul(n, s.size());
    return n;
  }

 private:
  static std::vector<std::uint32_t> parse_residue_list(std::string_view line,
                                                       const PrimeField& field) {
    std::vector<std::uint32_t> values;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    for (;;) {
      skip_ws();
      if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos]))) {
        throw ParseError("expected residue in grid set", pos);
      }
      std::uint64_t v = 0;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(line[pos] - '0');
        if (v >= field.modulus()) {
          throw ParseError("grid value is not a residue mod " +
                           std::to_string(field.modulus()), pos);
        }
        ++pos;
      }
      values.push_back(static_cast<std::uint32_t>(v));
      skip_ws();
      if (pos >= line.size()) break;
      if (line[pos] != ',') throw ParseError("expected ',' in grid set", pos);
      ++pos;
    }
    return values;
  }

  PrimeField field_;
  std::vector<std::vector<std::uint32_t>> sets_;
};

/// A grid point with a nonzero evaluation, certifying f != 0 on the grid.
struct Witness {
  std::vector<Fp> point;
  Fp value;

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.point == b.point && a.value == b.value;
  }
};

/// Supp(f): the exponent vectors carrying nonzero coefficients, in graded-lex
/// descending order.
inline std::vector<Monomial> support(const Polynomial& f) {
  std::vector<Monomial> out;
  out.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) out.push_back(m);
  return out;
}

/// The maximal elements of Supp(f) under the componentwise partial order.
inline std::vector<Monomial> support_maximal(const Polynomial& f) {
  std::vector<Monomial> supp = support(f);
  std::vector<Monomial> out;
  for (const Monomial& a : supp) {
    bool dominated = false;
    for (const Monomial& b : supp) {
      if (&a != &b && b.dominates(a) && !(a == b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

/// Classic hypothesis: deg f equals t_1 + ... + t_n and the coefficient of
/// x1^{t_1} * ... * xn^{t_n} is nonzero.
inline bool classic_hypothesis(const Polynomial& f, const DegreeProfile& profile) {
  if (profile.targets.size() != f.arity()) {
    throw Error("degree profile length does not match arity");
  }
  if (f.total_degree() != Degree{profile.sum()}) return false;
  return !f.coefficient(Monomial(profile.targets)).is_zero();
}

/// Whether some maximal support element a fits the grid: |S_i| >= a_i + 1 for
/// all i. When true, a witness is guaranteed to exist.
inline bool generalized_hypothesis(const Polynomial& f, const Grid& grid) {
  if (grid.arity() != f.arity()) throw Error("grid arity does not match polynomial");
  for (const Monomial& a : support_maximal(f)) {
    bool fits = true;
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (grid.sets()[i].size() < std::uint64_t{a.exponents()[i]} + 1) {
        fits = false;
        break;
      }
    }
    if (fits) return true;
  }
  return false;
}

/// Exhaustively scans the grid in lexicographic order (x1 outermost, each set
/// ascending) and returns the first point where f is nonzero, or nullopt.
inline std::optional<Witness> find_witness(const Polynomial& f, const Grid& grid,
                                           std::uint64_t budget = kFieldPointBudget) {
  if (grid.arity() != f.arity()) throw Error("grid arity does not match polynomial");
  if (grid.field() != f.field()) throw Error("grid field does not match polynomial");
  if (grid.point_count() > budget) {
    throw BudgetError("grid enumeration of " + std::to_string(grid.point_count()) +
                      " points exceeds budget " + std::to_string(budget));
  }
  const std::size_t n = f.arity();
  std::vector<std::size_t> index(n, 0);
  std::vector<std::uint32_t> point(n);
  for (std::size_t i = 0; i < n; ++i) point[i] = grid.sets()[i][0];
  for (;;) {
    std::uint32_t value = f.eval_residues(point);
    if (value != 0) {
      std::vector<Fp> fp_point;
      fp_point.reserve(n);
      for (std::uint32_t r : point) fp_point.emplace_back(r, f.field());
      return Witness{std::move(fp_point), Fp(value, f.field())};
    }
    std::size_t i = n;
    while (i > 0) {
      std::size_t j = i - 1;
      if (++index[j] < grid.sets()[j].size()) {
        point[j] = grid.sets()[j][index[j]];
        break;
      }
      index[j] = 0;
      point[j] = grid.sets()[j][0];
      --i;
    }
    if (i == 0) return std::nullopt;
  }
}

}  // namespace cnss

#endif  // CNSS_CNSS_CORE_HPP

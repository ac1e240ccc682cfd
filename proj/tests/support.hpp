#pragma once

// Fixtures and independent oracles shared by the unit, property and
// acceptance tests. Nothing here calls into the algorithms under test except
// to build inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bmparity/based_matrix.hpp"
#include "bmparity/gauss_code.hpp"
#include "bmparity/integer.hpp"

namespace bmparity::testing {

inline BasedMatrix numbered(Ring ring, const IntMatrix& entries) {
  std::vector<std::string> labels{kBasepoint};
  for (std::size_t i = 1; i < entries.size(); ++i) labels.push_back(std::to_string(i));
  return BasedMatrix::create(std::move(labels), ring, entries);
}

inline IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    IntVector row;
    for (long x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

inline IntVector vec(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Nine elements over Z2; stable tribes {1,2} {3,4} {5,6,7} {8}.
inline BasedMatrix nine_element_example() {
  return numbered(Ring::kZ2, ints({{0, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 1, 1, 0, 0},
                                   {0, 0, 0, 1, 0, 1, 1, 0, 0},
                                   {0, 1, 1, 0, 0, 0, 1, 1, 0},
                                   {0, 0, 0, 0, 0, 0, 1, 1, 0},
                                   {0, 1, 1, 0, 0, 0, 0, 0, 1},
                                   {0, 1, 1, 1, 1, 0, 0, 0, 1},
                                   {0, 0, 0, 1, 1, 0, 0, 0, 1},
                                   {0, 0, 0, 0, 0, 1, 1, 1, 0}}));
}

// Primitive, Z2, three crossings of a flat knot.
inline BasedMatrix flat_three_example() {
  return numbered(Ring::kZ2, ints({{0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}}));
}
inline constexpr const char* kFlatThreeCode = "1+2+3+2+1+3+";

inline BasedMatrix knot_4_1() {
  return numbered(Ring::kZ, ints({{0, 1, -1, 1, -1},
                                  {-1, 0, -1, 0, 0},
                                  {1, 1, 0, 0, 0},
                                  {-1, 0, 0, 0, -1},
                                  {1, 0, 0, 1, 0}}));
}

inline BasedMatrix knot_4_9() {
  return numbered(Ring::kZ, ints({{0, 1, 0, 0, -1},
                                  {-1, 0, -1, -1, 0},
                                  {0, 1, 0, -1, -1},
                                  {0, 1, 1, 0, -1},
                                  {1, 0, 1, 1, 0}}));
}

inline BasedMatrix knot_4_13() {
  return numbered(Ring::kZ, ints({{0, -1, 0, 0, 1},
                                  {1, 0, 1, 1, 1},
                                  {0, -1, 0, 0, 0},
                                  {0, -1, 0, 0, 0},
                                  {-1, -1, 0, 0, 0}}));
}

inline BasedMatrix knot_4_85() {
  return numbered(Ring::kZ, ints({{0, 2, -2, -2, 2},
                                  {-2, 0, -2, -1, 0},
                                  {2, 2, 0, 0, 3},
                                  {2, 1, 0, 0, 2},
                                  {-2, 0, -3, -2, 0}}));
}

inline constexpr const char* kClassicalTrefoil = "O1+U2+O3+U1+O2+U3+";
inline constexpr const char* kVirtualTrefoil = "O1+O2+U1+U2+";

// ---------------------------------------------------------------------------
// Oracles

// Number of crossings d != c with exactly one pass strictly between the two
// passes of c, mod 2.
inline int interleaving_parity(const GaussCode& code, int c) {
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < code.passes.size(); ++i) {
    if (code.passes[i].crossing == c) at.push_back(i);
  }
  std::map<int, int> inside;
  for (std::size_t i = at[0] + 1; i < at[1]; ++i) ++inside[code.passes[i].crossing];
  int count = 0;
  for (const auto& [d, k] : inside) count += k == 1 ? 1 : 0;
  return count % 2;
}

// Determinant by cofactor expansion; fine for the tiny matrices used here.
inline Integer det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal divisors D_i = gcd of all i x i minors, i = 1..; stops at
// the first zero. Invariant factors are D_i / D_{i-1}.
inline IntVector determinantal_invariant_factors(const IntMatrix& rows, std::size_t width) {
  IntVector factors;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(rows.size(), width); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows.size(), k, 0, cur, rs);
    subsets(width, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        IntMatrix minor;
        for (auto i : r) {
          IntVector row;
          for (auto j : c) row.push_back(rows[i][j]);
          minor.push_back(std::move(row));
        }
        Integer d = det(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

// Size of the subgroup of (Z/m)^d generated by `gens`, by closure.
inline std::size_t subgroup_size_mod(const IntMatrix& gens, std::size_t d, long m) {
  auto encode = [&](const std::vector<long>& v) {
    std::size_t code = 0;
    for (long x : v) code = code * static_cast<std::size_t>(m) + static_cast<std::size_t>(x);
    return code;
  };
  std::set<std::size_t> seen;
  std::vector<std::vector<long>> frontier{std::vector<long>(d, 0)};
  seen.insert(0);
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<long> w(d);
      for (std::size_t i = 0; i < d; ++i) {
        w[i] = static_cast<long>(((v[i] + g[i].get_si()) % m + m) % m);
      }
      if (seen.insert(encode(w)).second) frontier.push_back(w);
    }
  }
  return seen.size();
}

// Every vector of the Z2 span of `gens` (length d), as bitmasks.
inline std::set<std::uint32_t> z2_span(const IntMatrix& gens, std::size_t d) {
  std::set<std::uint32_t> span{0};
  for (const auto& g : gens) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (mpz_odd_p(g[i].get_mpz_t())) mask |= 1u << i;
    }
    std::set<std::uint32_t> next = span;
    for (auto s : span) next.insert(s ^ mask);
    span = std::move(next);
  }
  return span;
}

// Annulator membership straight from the definition: b(v, chi_C) = k b(s, chi_C)
// on every block, trying every k with |k| <= k_bound (or k in {0,1} over Z2).
inline bool annulator_by_definition(const BasedMatrix& t, const std::vector<std::vector<std::size_t>>& blocks,
                                    const IntVector& v, long k_bound = 50) {
  std::vector<long> ks;
  if (t.ring() == Ring::kZ2) {
    ks = {0, 1};
  } else {
    for (long k = -k_bound; k <= k_bound; ++k) ks.push_back(k);
  }
  for (long k : ks) {
    bool ok = true;
    for (const auto& block : blocks) {
      Integer lhs = 0, rhs = 0;
      for (auto h : block) {
        for (std::size_t g = 1; g < t.size(); ++g) lhs += v[g - 1] * t.at(g, h);
        rhs += t.at(0, h);
      }
      if (normalize(t.ring(), lhs - k * rhs) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Random Gauss code on n crossings: a random arrangement of the passes,
// random signs, and random O/U roles in virtual mode.
inline GaussCode random_code(std::mt19937_64& rng, std::size_t n, bool virtual_mode) {
  std::vector<int> ids;
  for (std::size_t i = 1; i <= n; ++i) ids.insert(ids.end(), {static_cast<int>(i), static_cast<int>(i)});
  std::shuffle(ids.begin(), ids.end(), rng);
  std::map<int, int> sign;
  std::map<int, bool> over_first;
  for (std::size_t i = 1; i <= n; ++i) {
    sign[static_cast<int>(i)] = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    over_first[static_cast<int>(i)] = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  }
  std::string text;
  std::set<int> seen;
  for (int id : ids) {
    if (virtual_mode) {
      const bool first = seen.insert(id).second;
      text += (first == over_first[id]) ? "O" : "U";
    }
    text += std::to_string(id) + (sign[id] > 0 ? "+" : "-");
  }
  return parse_gauss_code(text);
}

// Gauss code of the closure of a braid word (generator i > 0 is sigma_i,
// i < 0 its inverse) on `strands` strands, or nothing when the closure has
// more than one component. Strands run downwards; sigma_i takes the strand
// at position i over the one at i + 1, which makes its (over, under) frame
// negative. Every such code is realizable in the plane.
inline std::optional<GaussCode> braid_closure(const std::vector<int>& word, std::size_t strands) {
  // where[p]: the position a strand starting at p ends at. The closure is a
  // knot iff this map is a single cycle.
  std::vector<std::size_t> where(strands);
  std::iota(where.begin(), where.end(), 0);
  for (int g : word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
    for (auto& p : where) {
      if (p == i) {
        p = i + 1;
      } else if (p == i + 1) {
        p = i;
      }
    }
  }
  std::size_t steps = 0;
  for (std::size_t p = where[0];; p = where[p]) {
    ++steps;
    if (p == 0) break;
  }
  if (steps != strands) return std::nullopt;

  std::string text;
  std::size_t p = 0;
  for (std::size_t round = 0; round < strands; ++round) {
    for (std::size_t k = 0; k < word.size(); ++k) {
      const int g = word[k];
      const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
      if (p != i && p != i + 1) continue;
      const bool left = p == i;  // strand moves from position i to i + 1
      const bool over = (g > 0) == left;
      const int sign = g > 0 ? -1 : 1;
      text += over ? "O" : "U";
      text += std::to_string(k + 1) + (sign > 0 ? "+" : "-");
      p = left ? i + 1 : i;
    }
  }
  return parse_gauss_code(text);
}

}  // namespace bmparity::testing

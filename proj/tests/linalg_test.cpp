#include <random>

#include <gtest/gtest.h>

#include "bmparity/abelian_group.hpp"
#include "bmparity/linalg.hpp"
#include "support.hpp"

namespace bmparity {
namespace {

using testing::determinantal_invariant_factors;
using testing::ints;
using testing::vec;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(rows, IntVector(cols));
  for (auto& r : m) {
    for (auto& x : r) x = entry(rng);
  }
  return m;
}

TEST(Hermite, CanonicalForSameLattice) {
  const IntMatrix a = ints({{2, 4, 6}, {1, 1, 1}});
  const IntMatrix b = ints({{1, 1, 1}, {0, 2, 4}, {3, 5, 7}});
  EXPECT_EQ(linalg::hermite_normal_form(a, 3), linalg::hermite_normal_form(b, 3));
  EXPECT_EQ(linalg::hermite_normal_form(a, 3), ints({{1, 1, 1}, {0, 2, 4}}));
}

TEST(Hermite, MembershipMatchesSpan) {
  const IntMatrix h = linalg::hermite_normal_form(ints({{2, 0}, {0, 3}}), 2);
  IntVector in = vec({4, -3});
  IntVector out = vec({1, 0});
  EXPECT_TRUE(linalg::reduce_by_hnf(h, in));
  EXPECT_FALSE(linalg::reduce_by_hnf(h, out));
}

TEST(IntegerKernel, AnnihilatesAndSaturates) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 5, w = 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, m, w, 3);
    const IntMatrix k = linalg::integer_left_kernel(a, w);
    for (const auto& x : k) EXPECT_TRUE(is_zero(linalg::multiply_row(x, a, w)));
    // Rank-nullity: kernel rank + rank(a) = m.
    const std::size_t rank = determinantal_invariant_factors(a, w).size();
    EXPECT_EQ(k.size() + rank, m);
  }
}

TEST(Smith, FactorsMatchDeterminantalDivisors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = rng() % 4, w = 1 + rng() % 3;
    const IntMatrix a = random_matrix(rng, m, w, 4);
    const auto snf = linalg::smith_normal_form(a, w);
    EXPECT_EQ(snf.diagonal, determinantal_invariant_factors(a, w));
    // Q * Q^-1 = I.
    for (std::size_t i = 0; i < w; ++i) {
      EXPECT_EQ(linalg::multiply_row(snf.column_transform[i], snf.column_transform_inverse, w),
                unit_vector(w, i));
    }
  }
}

TEST(Gf2, KernelAndReduction) {
  const linalg::BitMatrix a{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  const auto k = linalg::left_kernel_gf2(a, 3);
  ASSERT_EQ(k.rows.size(), 1u);
  EXPECT_EQ(k.rows[0], (linalg::BitVector{1, 1, 1}));
  const auto e = linalg::rref_gf2({{1, 1, 0}, {1, 0, 0}}, 3);
  linalg::BitVector v{0, 1, 0};
  EXPECT_TRUE(linalg::reduce_gf2(e, v));
}

TEST(QuotientGroup, PrintedPresentations) {
  const auto g485 = quotient_group(5, Ring::kZ, {vec({0, 2, -2, -2, 2})});
  EXPECT_EQ(g485.free_rank(), 4u);
  EXPECT_EQ(g485.invariant_factors(), vec({2}));
  EXPECT_EQ(g485.signature(), "Z^4 + Z2");

  const auto g413 = quotient_group(4, Ring::kZ, {vec({0, -1, 0, 1})});
  EXPECT_EQ(g413.free_rank(), 3u);
  EXPECT_TRUE(g413.invariant_factors().empty());

  const auto g41 = quotient_group(3, Ring::kZ, {vec({0, 2, -2})});
  EXPECT_EQ(g41.signature(), "Z^2 + Z2");
}

TEST(QuotientGroup, ZeroRelationLeavesAmbient) {
  const auto g = quotient_group(3, Ring::kZ, {vec({0, 0, 0})});
  EXPECT_EQ(g.free_rank(), 3u);
  EXPECT_EQ(g.reduce(vec({4, -1, 2})), vec({4, -1, 2}));
  const auto h = quotient_group(3, Ring::kZ2, {vec({0, 0, 0})});
  EXPECT_EQ(h.signature(), "Z2^3");
  EXPECT_EQ(h.reduce(vec({1, 0, 1})), vec({1, 0, 1}));
}

TEST(QuotientGroup, Z2CoordinatesFollowNonPivotColumns) {
  // Relation (0,1,1,0): coordinates (v0, v1 + v2, v3).
  const auto g = quotient_group(4, Ring::kZ2, {vec({0, 1, 1, 0})});
  EXPECT_EQ(g.reduce(vec({1, 0, 0, 0})), vec({1, 0, 0}));
  EXPECT_EQ(g.reduce(vec({1, 0, 0, 1})), vec({1, 0, 1}));
  EXPECT_EQ(g.reduce(vec({0, 1, 0, 0})), vec({0, 1, 0}));
  EXPECT_EQ(g.reduce(vec({0, 0, 1, 0})), vec({0, 1, 0}));
}

// Divisibility chain, homomorphism, kernel = relation span, and group order
// against enumeration in (Z/m)^d.
TEST(QuotientGroupProperty, AgainstBruteForce) {
  std::mt19937_64 rng(2024);
  int full_rank_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = 1 + rng() % 3, r = rng() % 4;
    const IntMatrix rel = random_matrix(rng, r, d, 3);
    const auto g = quotient_group(d, Ring::kZ, rel);
    const IntVector expected = determinantal_invariant_factors(rel, d);
    EXPECT_EQ(g.free_rank(), d - expected.size());
    IntVector torsion;
    for (const auto& f : expected) {
      if (f != 1) torsion.push_back(f);
    }
    EXPECT_EQ(g.invariant_factors(), torsion);
    for (std::size_t i = 0; i + 1 < torsion.size(); ++i) {
      EXPECT_TRUE(mpz_divisible_p(torsion[i + 1].get_mpz_t(), torsion[i].get_mpz_t()));
    }

    const IntMatrix hnf = linalg::hermite_normal_form(rel, d);
    for (int k = 0; k < 10; ++k) {
      const IntVector a = random_matrix(rng, 1, d, 9)[0];
      const IntVector b = random_matrix(rng, 1, d, 9)[0];
      IntVector sum(d);
      for (std::size_t i = 0; i < d; ++i) sum[i] = a[i] + b[i];
      EXPECT_EQ(g.reduce(sum), g.add(g.reduce(a), g.reduce(b)));
      IntVector combo = zero_vector(d);
      for (const auto& row : rel) {
        const long c = static_cast<long>(rng() % 7) - 3;
        for (std::size_t i = 0; i < d; ++i) combo[i] += c * row[i];
      }
      EXPECT_TRUE(g.is_zero(g.reduce(combo)));
      IntVector probe = a;
      EXPECT_EQ(g.is_zero(g.reduce(a)), linalg::reduce_by_hnf(hnf, probe));
    }

    if (expected.size() == d) {
      Integer order = 1;
      for (const auto& f : g.invariant_factors()) order *= f;
      if (order <= 40) {
        ++full_rank_cases;
        const long m = order.get_si();
        std::size_t all = 1;
        for (std::size_t i = 0; i < d; ++i) all *= static_cast<std::size_t>(m);
        const std::size_t sub = testing::subgroup_size_mod(rel, d, m);
        EXPECT_EQ(all / sub, static_cast<std::size_t>(m)) << "relations " << rel.size();
      }
    }
  }
  EXPECT_GT(full_rank_cases, 20);
}

TEST(QuotientGroupProperty, Z2OrderAgainstSpan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng() % 4, r = rng() % 4;
    IntMatrix rel(r, IntVector(d));
    for (auto& row : rel) {
      for (auto& x : row) x = static_cast<long>(rng() % 2);
    }
    const auto g = quotient_group(d, Ring::kZ2, rel);
    const std::size_t span = testing::z2_span(rel, d).size();
    EXPECT_EQ((std::size_t{1} << g.coordinate_count()) * span, std::size_t{1} << d);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      IntVector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
      EXPECT_EQ(g.is_zero(g.reduce(v)), testing::z2_span(rel, d).count(mask) == 1);
    }
  }
}

}  // namespace
}  // namespace bmparity

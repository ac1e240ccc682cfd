#include <gtest/gtest.h>

#include "bmparity/axioms.hpp"
#include "bmparity/parity.hpp"
#include "bmparity/random_moves.hpp"
#include "bmparity/serialize.hpp"
#include "support.hpp"

namespace bmparity {
namespace {

using testing::ints;
using testing::numbered;
using testing::vec;

void expect_values(const ParityAssignment& p, const std::vector<std::pair<std::string, IntVector>>& expected) {
  for (const auto& [label, value] : expected) EXPECT_EQ(p.value(label), value) << label;
}

TEST(QuotientGroup, PrintedPresentations) {
  const CanonicalAbelianGroup a(5, Ring::kZ, ints({{0, 2, -2, -2, 2}}));
  EXPECT_EQ(a.free_rank(), 4u);
  EXPECT_EQ(a.invariant_factors(), vec({2}));
  const CanonicalAbelianGroup b(4, Ring::kZ, ints({{0, -1, 0, 1}}));
  EXPECT_EQ(b.signature(), "Z^3");
  EXPECT_TRUE(b.is_zero(b.reduce(vec({0, -3, 0, 3}))));
  const CanonicalAbelianGroup c(3, Ring::kZ, ints({{0, 0, 0}}));
  EXPECT_EQ(c.signature(), "Z^3");
  EXPECT_EQ(c.reduce(vec({4, -1, 2})), vec({4, -1, 2}));
}

TEST(QuotientGroup, ReduceIsAHomomorphismKillingExactlyTheRelations) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng() % 4;
    IntMatrix rel(rng() % 4, IntVector(d));
    for (auto& r : rel) {
      for (auto& x : r) x = entry(rng);
    }
    const CanonicalAbelianGroup g(d, Ring::kZ, rel);
    for (std::size_t i = 1; i < g.invariant_factors().size(); ++i) {
      EXPECT_EQ(g.invariant_factors()[i] % g.invariant_factors()[i - 1], 0);
    }
    IntVector combo = zero_vector(d), x(d), y(d);
    for (const auto& r : rel) {
      const long k = entry(rng);
      for (std::size_t j = 0; j < d; ++j) combo[j] += k * r[j];
    }
    EXPECT_TRUE(g.is_zero(g.reduce(combo)));
    IntVector sum(d);
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = entry(rng);
      y[j] = entry(rng);
      sum[j] = x[j] + y[j];
    }
    EXPECT_EQ(g.reduce(sum), g.add(g.reduce(x), g.reduce(y)));
    EXPECT_TRUE(g.is_zero(g.add(g.reduce(x), g.negate(g.reduce(x)))));
  }
}

TEST(GaussianParity, Knot413) {
  const ParityAssignment p = gaussian_parity(testing::knot_4_13());
  expect_values(p, {{"s", vec({0})}, {"1", vec({1})}, {"2", vec({0})}, {"3", vec({0})}, {"4", vec({-1})}});
  EXPECT_EQ(p.group.signature(), "Z");
}

TEST(StableParity, NineElementExample) {
  const ParityAssignment p = stable_parity_functor(testing::nine_element_example());
  EXPECT_EQ(p.group.signature(), "Z2^3");
  expect_values(p, {{"1", vec({1, 0, 0})}, {"2", vec({1, 0, 0})}, {"3", vec({0, 0, 0})}, {"4", vec({0, 0, 0})},
                    {"5", vec({0, 1, 0})}, {"6", vec({0, 1, 0})}, {"7", vec({0, 1, 0})}, {"8", vec({0, 0, 1})}});
}

TEST(StableParity, ZeroMatrixIsTrivial) {
  const BasedMatrix z = numbered(Ring::kZ, IntMatrix(4, IntVector(4, 0)));
  const ParityAssignment p = stable_parity_functor(z);
  EXPECT_TRUE(p.group.is_trivial());
  for (const auto& v : p.values) EXPECT_TRUE(v.empty());
}

TEST(StableParity, BlockMatesAreEqualOrOpposite) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const BasedMatrix t = random_based_matrix(rng, 1 + rng() % 6, trial % 2 ? Ring::kZ : Ring::kZ2);
    const ParityAssignment p = stable_parity_functor(t);
    const Partition stable = stable_partition(t).partition;
    for (const auto& block : stable.blocks()) {
      for (std::size_t k = 1; k < block.size(); ++k) {
        const IntVector& a = p.values[block[0]];
        const IntVector& b = p.values[block[k]];
        EXPECT_TRUE(a == b || p.group.is_zero(p.group.add(a, b)));
      }
    }
  }
}

TEST(HatParity, FlatThreeRelation) {
  const BasedMatrix t = testing::flat_three_example();
  const ParityAssignment p = hat_parity_functor(t, stable_partition(t).partition);
  EXPECT_EQ(p.ambient[0], vec({0, 1, 1, 0}));
  EXPECT_EQ(p.column_legend, (std::vector<std::string>{"s", "{1}", "{2}", "{3}"}));
  EXPECT_TRUE(p.group.is_zero(p.value("s")));
}

TEST(HatParity, ComplementaryPairsCancel) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    BasedMatrix t = random_based_matrix(rng, rng() % 4, trial % 2 ? Ring::kZ : Ring::kZ2);
    const BasedMatrix grown = apply_random_move(t, rng).result;
    const ParityAssignment p = hat_parity_functor(grown, stable_partition(grown).partition);
    EXPECT_TRUE(p.group.is_zero(p.value("s")));
    for (const auto& [a, b] : complementary_index_pairs(grown)) {
      EXPECT_TRUE(p.group.is_zero(p.group.add(p.values[a], p.values[b])));
    }
  }
}

TEST(HatParity, KernelIsTheAnnulator) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 150; ++trial) {
    const BasedMatrix t = random_based_matrix(rng, 1 + rng() % 6, trial % 2 ? Ring::kZ : Ring::kZ2);
    const Partition stable = stable_partition(t).partition;
    const ParityAssignment hat = hat_parity_functor(t, stable);
    const AnnulatorModule ann = annulator(t, stable);
    for (std::size_t g = 1; g < t.size(); ++g) {
      EXPECT_EQ(hat.group.is_zero(hat.values[g]), ann.contains(unit_vector(t.size() - 1, g - 1)))
          << format_matrix(t) << " g=" << g;
    }
  }
}

TEST(ReducedFunctor, NineElementExample) {
  const ParityAssignment p = reduced_parity_functor(testing::nine_element_example());
  EXPECT_EQ(p.group.signature(), "Z2^3");
  EXPECT_EQ(p.column_legend, (std::vector<std::string>{"s", "{5,6,7}", "{8}"}));
  for (const char* g : {"1", "2", "3", "4"}) EXPECT_EQ(p.value(g), vec({0, 0, 0}));
  for (const char* g : {"5", "6", "7"}) EXPECT_EQ(p.value(g), vec({0, 0, 1}));
  EXPECT_EQ(p.value("8"), vec({0, 1, 0}));
}

TEST(ReducedFunctor, MatchesHatWhenTheBasepointRowVanishes) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; ++trial) {
    const BasedMatrix t = random_based_matrix(rng, 1 + rng() % 5, Ring::kZ);
    if (!is_zero(t.row(0)) || !is_primitive(t)) continue;
    ++checked;
    const ParityAssignment tilde = reduced_parity_functor(t);
    const ParityAssignment hat = hat_parity_functor(t, stable_partition(t).partition);
    EXPECT_EQ(tilde.ambient, hat.ambient);
  }
}

TEST(ReducedParity, NineElementExample) {
  const ReducedParity r = reduced_parity_pipeline(testing::nine_element_example());
  EXPECT_EQ(r.automorphisms.size(), 2u);
  EXPECT_EQ(r.parity.group.signature(), "Z2^2");
  for (const char* g : {"1", "2", "3", "4"}) EXPECT_EQ(r.parity.value(g), vec({0, 0}));
  for (const char* g : {"5", "6", "7", "8"}) EXPECT_EQ(r.parity.value(g), vec({0, 1}));
}

TEST(ReducedParity, FlatThree) {
  const ReducedParity r = reduced_parity_pipeline(testing::flat_three_example());
  EXPECT_EQ(r.automorphisms.size(), 1u);
  EXPECT_FALSE(r.tags.zero_block);
  EXPECT_EQ(r.parity.ambient[0], vec({0, 1, 1, 0}));
  EXPECT_EQ(r.parity.group.signature(), "Z2^3");
  expect_values(r.parity, {{"1", vec({1, 0, 0})}, {"2", vec({1, 0, 1})}, {"3", vec({0, 1, 0})}});
}

TEST(ReducedParity, Knot41) {
  const ParityAssignment p = reduced_parity(testing::knot_4_1());
  EXPECT_EQ(p.group.signature(), "Z^2 + Z2");
  EXPECT_EQ(p.ambient, ints({{0, 2, -2}, {-1, 1, 0}, {1, 0, -1}, {-1, 1, 0}, {1, 0, -1}}));
}

TEST(ParityMatrix, VirtualKnotTables) {
  EXPECT_EQ(parity_matrix_report(testing::knot_4_9()).rows,
            ints({{0, 0, 0, 0}, {-1, 1, -1, -1}, {0, 0, 0, -1}, {0, 0, 1, 0}, {1, -1, 1, 1}}));
  EXPECT_EQ(parity_matrix_report(testing::knot_4_13()).rows,
            ints({{0, -1, 0, 1}, {1, 0, 1, 1}, {0, -1, 0, 0}, {0, -1, 0, 0}, {-1, -1, 1, 0}}));
  EXPECT_EQ(parity_matrix_report(testing::knot_4_85()).rows, testing::knot_4_85().table());
  EXPECT_EQ(parity_matrix_report(testing::knot_4_1()).rows,
            ints({{0, 2, -2}, {-1, 1, 0}, {1, 0, -1}, {-1, 1, 0}, {1, 0, -1}}));
  EXPECT_EQ(reduced_parity(testing::knot_4_9()).group.signature(), "Z^4");
  EXPECT_EQ(reduced_parity(testing::knot_4_85()).group.signature(), "Z^4 + Z2");
  EXPECT_EQ(reduced_parity(testing::knot_4_13()).group.signature(), "Z^3");
}

TEST(ParityMatrix, BasepointColumnIsTheGaussianParity) {
  for (const BasedMatrix& t : {testing::knot_4_1(), testing::knot_4_9(), testing::knot_4_13(), testing::knot_4_85()}) {
    const ParityMatrix m = parity_matrix_report(t);
    const ParityAssignment gauss = gaussian_parity(t);
    for (std::size_t g = 0; g < t.size(); ++g) EXPECT_EQ(m.rows[g][0], gauss.values[g][0]);
  }
}

TEST(ParityMatrix, TextLayout) {
  const std::string text = format_parity_matrix(parity_matrix_report(testing::knot_4_1()));
  EXPECT_NE(text.find("{1,3}"), std::string::npos);
  EXPECT_NE(text.find("{2,4}"), std::string::npos);
  EXPECT_NE(text.find('|'), std::string::npos);
}

TEST(Axioms, FixturesPass) {
  const AxiomCheckOptions options{100, 3};
  for (const BasedMatrix& t : {testing::nine_element_example(), testing::flat_three_example(), testing::knot_4_1(),
                               testing::knot_4_9(), testing::knot_4_13(), testing::knot_4_85()}) {
    for (const ParityAssignment& p : {gaussian_parity(t), stable_parity_functor(t), reduced_parity_functor(t),
                                      reduced_parity(t), hat_parity_functor(t, stable_partition(t).partition)}) {
      const auto violations = verify_parity_axioms(t, p, options);
      EXPECT_TRUE(violations.empty()) << parity_kind_name(p.kind) << ": "
                                      << (violations.empty() ? "" : describe(violations[0]));
    }
  }
}

TEST(Axioms, CorruptedValueIsCaught) {
  const BasedMatrix t = testing::nine_element_example();
  ParityAssignment p = reduced_parity(t);
  p.values[p.row_of("1")] = vec({0, 1});  // 1 and 2 are complementary
  const auto violations = verify_parity_axioms(t, p, {0, 1});
  ASSERT_FALSE(violations.empty());
  bool named = false;
  for (const auto& v : violations) named |= v.axiom == "P2" || v.axiom == "P3";
  EXPECT_TRUE(named);
}

TEST(Axioms, CorruptedAnnihilatingValueIsCaught) {
  const BasedMatrix t = apply_m1(testing::knot_4_13(), "z");
  ParityAssignment p = gaussian_parity(t);
  p.values[p.row_of("z")] = vec({3});
  const auto violations = verify_parity_axioms(t, p, {0, 1});
  ASSERT_FALSE(violations.empty());
  EXPECT_EQ(violations[0].axiom, "P1");
  EXPECT_EQ(violations[0].witnesses, (std::vector<std::string>{"z"}));
}

TEST(AxiomProperty, RandomMatricesBothRings) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    BasedMatrix t = random_based_matrix(rng, rng() % 5, trial % 2 ? Ring::kZ : Ring::kZ2);
    t = random_walk(t, 2, rng);
    if (t.size() > 8) continue;
    const AxiomCheckOptions options{4, static_cast<std::uint64_t>(trial)};
    for (const ParityAssignment& p : {gaussian_parity(t), reduced_parity(t), stable_parity_functor(t)}) {
      const auto violations = verify_parity_axioms(t, p, options);
      EXPECT_TRUE(violations.empty()) << parity_kind_name(p.kind) << ": "
                                      << (violations.empty() ? "" : describe(violations[0]));
    }
  }
}

}  // namespace
}  // namespace bmparity

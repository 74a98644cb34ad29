#include <gtest/gtest.h>

#include <random>

#include "flagcert/algebra_element.hpp"
#include "flagcert/canonical.hpp"
#include "flagcert/densities.hpp"
#include "flagcert/model_table.hpp"
#include "test_support.hpp"

namespace flagcert {
namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

// p(H, G) by direct subset enumeration with brute-force isomorphism.
Rational brute_force_induced(const SmallGraph& h, const SmallGraph& g) {
  const int k = h.vertex_count();
  const int n = g.vertex_count();
  long hits = 0, total = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) vs.push_back(v);
    ++total;
    if (testing::brute_force_isomorphic(g.induced(vs), h)) ++hits;
  }
  return frac(hits, total);
}

TEST(CountInjectiveHoms, Examples) {
  EXPECT_EQ(count_injective_homs(SmallGraph::complete(2), SmallGraph::complete(3)), 6U);
  EXPECT_EQ(count_injective_homs(SmallGraph::complete(3), SmallGraph::cycle(5)), 0U);
  EXPECT_EQ(count_injective_homs(SmallGraph::wheel(5), SmallGraph::wheel(5)), 10U);
}

TEST(CountInjectiveHoms, LargerPatternGivesZero) {
  EXPECT_EQ(count_injective_homs(SmallGraph(4), SmallGraph::complete(3)), 0U);
}

TEST(CountInjectiveHoms, MatchesTupleEnumeration) {
  std::mt19937 rng(2);
  for (int i = 0; i < 80; ++i) {
    const SmallGraph h = testing::random_graph(1 + i % 5, rng);
    const SmallGraph g = testing::random_graph(h.vertex_count() + i % 3, rng, 0.6);
    EXPECT_EQ(count_injective_homs(h, g), testing::brute_force_injective_homs(h, g));
  }
}

TEST(T0, Examples) {
  const SmallGraph w5 = SmallGraph::wheel(5);
  EXPECT_EQ(t0(w5, SmallGraph::complete(6)).value(), Rational(1));
  EXPECT_EQ(t0(w5, SmallGraph::cycle(6)).value(), Rational(0));
  EXPECT_EQ(t0(w5, w5).value(), frac(1, 72));
  EXPECT_THROW(t0(w5, SmallGraph::complete(5)), std::invalid_argument);
}

TEST(InducedDensity, Examples) {
  EXPECT_EQ(induced_density(SmallGraph::complete(2), SmallGraph::path(3)).value(), frac(2, 3));
  EXPECT_EQ(induced_density(SmallGraph::complete(2), SmallGraph::complete(2)).value(), Rational(1));
  SmallGraph k4_minus = SmallGraph::complete(4);
  k4_minus.set_edge(0, 1, false);
  EXPECT_EQ(induced_density(SmallGraph::complete(3), k4_minus).value(), frac(1, 2));
  EXPECT_THROW(induced_density(SmallGraph(3), SmallGraph(2)), std::invalid_argument);
}

TEST(InducedDensity, MatchesSubsetEnumeration) {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    const SmallGraph h = testing::random_graph(1 + i % 4, rng);
    const SmallGraph g = testing::random_graph(h.vertex_count() + i % 4, rng);
    EXPECT_EQ(induced_density(h, g).value(), brute_force_induced(h, g));
  }
}

TEST(DensityValue, RejectsOutOfRange) {
  EXPECT_THROW(DensityValue(Rational(2)), std::domain_error);
  EXPECT_THROW(DensityValue(Rational(-1)), std::domain_error);
  EXPECT_NO_THROW(DensityValue(Rational(0)));
}

TEST(Hat, Examples) {
  const AlgebraElement w = hat(SmallGraph::wheel(5), 6);
  EXPECT_EQ(w.coefficient(canonical_key(SmallGraph::complete(6))), Rational(1));
  EXPECT_EQ(w.coefficient(canonical_key(SmallGraph::cycle(6))), Rational(0));

  const AlgebraElement e = hat(SmallGraph::complete(2), 2);
  EXPECT_EQ(e.coefficient(canonical_key(SmallGraph(2))), Rational(0));
  EXPECT_EQ(e.coefficient(canonical_key(SmallGraph::complete(2))), Rational(1));
  EXPECT_THROW(hat(SmallGraph::wheel(5), 5), std::invalid_argument);
}

TEST(Hat, CoefficientsAreHomDensities) {
  const ModelTable& table = model_table(4);
  const AlgebraElement c4 = hat(SmallGraph::cycle(4), 4);
  for (const SmallGraph& f : table.models()) {
    const Rational expected(BigInt(testing::brute_force_injective_homs(SmallGraph::cycle(4), f)), BigInt(24));
    EXPECT_EQ(c4.coefficient(canonical_key(f)), expected);
  }
}

TEST(DensityProperty, PartitionOfUnity) {
  std::mt19937 rng(6);
  for (int i = 0; i < 30; ++i) {
    const int l = 1 + i % 6;
    const SmallGraph g = testing::random_graph(l + i % 4, rng);
    Rational sum;
    for (const SmallGraph& f : model_table(l).models()) sum += induced_density(f, g).value();
    EXPECT_EQ(sum, Rational(1));

    const auto counts = induced_model_counts(g, model_table(l));
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    EXPECT_EQ(BigInt(static_cast<unsigned long>(total)), binomial(g.vertex_count(), l));
  }
}

TEST(DensityProperty, ChainRule) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const int h_size = 1 + i % 5;
    const int l = h_size + i % 3;
    const int g_size = l + i % 3;
    const SmallGraph h = testing::random_graph(h_size, rng);
    const SmallGraph g = testing::random_graph(g_size, rng);
    Rational sum;
    for (const SmallGraph& f : model_table(l).models()) sum += t0(h, f).value() * induced_density(f, g).value();
    const Rational oracle(BigInt(testing::brute_force_injective_homs(h, g)), falling_factorial(g_size, h_size));
    EXPECT_EQ(sum, oracle);
  }
}

TEST(DensityProperty, ComplementDuality) {
  std::mt19937 rng(8);
  for (int i = 0; i < 40; ++i) {
    const SmallGraph h = testing::random_graph(1 + i % 5, rng);
    const SmallGraph g = testing::random_graph(h.vertex_count() + i % 4, rng);
    EXPECT_EQ(induced_density(h, g), induced_density(h.complement(), g.complement()));
  }
}

TEST(DensityProperty, IsomorphismInvariant) {
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    const SmallGraph h = testing::random_graph(1 + i % 5, rng);
    const SmallGraph g = testing::random_graph(h.vertex_count() + i % 4, rng);
    const SmallGraph h2 = h.permuted(testing::random_permutation(h.vertex_count(), rng));
    const SmallGraph g2 = g.permuted(testing::random_permutation(g.vertex_count(), rng));
    EXPECT_EQ(t0(h, g), t0(h2, g2));
    EXPECT_EQ(induced_density(h, g), induced_density(h2, g2));
  }
}

}  // namespace
}  // namespace flagcert

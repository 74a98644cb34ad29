#include <gtest/gtest.h>

#include <map>
#include <random>

#include "flagcert/algebra.hpp"
#include "flagcert/densities.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/model_table.hpp"
#include "test_support.hpp"

namespace flagcert {
namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

AlgebraElement model_element(const SmallGraph& g, const Rational& c = 1) {
  AlgebraElement a(FlagType(), g.vertex_count());
  a.add(canonical_key(g), c);
  return a;
}

AlgebraElement rho() { return model_element(SmallGraph::complete(2)); }

AlgebraElement random_element(const FlagType& t, int level, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  AlgebraElement a(t, level);
  for (const Flag& f : enumerate_flags(t, level))
    if (d(rng) > 1) a.add(f.key(), frac(d(rng), 1 + (d(rng) + 5)));
  return a;
}

SmallGraph one_edge_of_three() {
  SmallGraph g(3);
  g.set_edge(0, 1);
  return g;
}

TEST(AlgebraElement, PrunesZerosAndChecksKeys) {
  AlgebraElement a = rho();
  a.add(canonical_key(SmallGraph::complete(2)), -1);
  EXPECT_TRUE(a.is_zero());
  EXPECT_THROW(a.add(canonical_key(SmallGraph(3)), 1), std::invalid_argument);
  AlgebraElement b(FlagType(), 3);
  EXPECT_THROW(a += b, std::invalid_argument);
}

TEST(Lift, SameLevelIsIdentity) {
  std::mt19937 rng(1);
  const AlgebraElement a = random_element(FlagType(), 4, rng);
  EXPECT_EQ(lift(a, 4), a);
}

TEST(Lift, EdgeToThreeVertices) {
  const AlgebraElement l = lift(rho(), 3);
  EXPECT_EQ(l.coefficient(canonical_key(SmallGraph(3))), Rational(0));
  EXPECT_EQ(l.coefficient(canonical_key(one_edge_of_three())), frac(1, 3));
  EXPECT_EQ(l.coefficient(canonical_key(SmallGraph::path(3))), frac(2, 3));
  EXPECT_EQ(l.coefficient(canonical_key(SmallGraph::complete(3))), Rational(1));
}

TEST(Lift, ConstantStaysConstant) {
  for (int from = 1; from <= 4; ++from)
    for (int to = from; to <= 6; ++to) EXPECT_EQ(lift(constant(1, from), to), constant(1, to));
}

TEST(Lift, RangeChecked) {
  EXPECT_THROW(lift(rho(), 1), std::invalid_argument);
  EXPECT_THROW(lift(rho(), kMaxLevel + 1), std::invalid_argument);
}

TEST(Lift, CommutesWithAveraging) {
  std::mt19937 rng(2);
  for (int k = 1; k <= 2; ++k) {
    const FlagType t(testing::random_graph(k, rng));
    const AlgebraElement a = random_element(t, k + 1, rng);
    EXPECT_EQ(average(lift(a, k + 3)), lift(average(a), k + 3));
  }
}

// Fraction of ordered 2+2 splits of a 4-vertex graph into two edges.
Rational rho_squared_oracle(const SmallGraph& g) {
  int hits = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<int> rest;
      for (int v = 0; v < 4; ++v)
        if (v != a && v != b) rest.push_back(v);
      if (g.adjacent(a, b) && g.adjacent(rest[0], rest[1])) ++hits;
    }
  return frac(hits, 6);
}

TEST(Multiply, EdgeSquared) {
  const AlgebraElement sq = multiply(rho(), rho());
  EXPECT_EQ(sq.level(), 4);
  EXPECT_EQ(sq.coefficient(canonical_key(SmallGraph::complete(4))), Rational(1));
  EXPECT_EQ(sq.coefficient(canonical_key(SmallGraph::cycle(4))), frac(2, 3));
  EXPECT_EQ(sq.coefficient(canonical_key(SmallGraph(4))), Rational(0));
  for (const SmallGraph& m : model_table(4).models())
    EXPECT_EQ(sq.coefficient(canonical_key(m)), rho_squared_oracle(m));
}

TEST(Multiply, Commutative) {
  std::mt19937 rng(3);
  for (int i = 0; i < 6; ++i) {
    const FlagType t(testing::random_graph(i % 3, rng));
    const AlgebraElement a = random_element(t, t.size() + 1, rng);
    const AlgebraElement b = random_element(t, t.size() + 1 + i % 2, rng);
    EXPECT_EQ(multiply(a, b), multiply(b, a));
  }
}

TEST(Multiply, RejectsMismatchAndOverflow) {
  const FlagType single(SmallGraph(1));
  AlgebraElement a(single, 2);
  a.add(enumerate_flags(single, 2).front().key(), 1);
  EXPECT_THROW(multiply(a, rho()), std::invalid_argument);
  EXPECT_THROW(multiply(constant(1, 4), constant(1, 4)), std::invalid_argument);
}

TEST(FlagProduct, SplitProbabilitiesSumToOne) {
  const std::vector<FlagType> types{FlagType(SmallGraph(4)), FlagType(SmallGraph::path(4)),
                                    FlagType(SmallGraph::complete(4))};
  for (const FlagType& t : types) {
    const auto small = enumerate_flags(t, 5);
    std::map<CanonicalKey, Rational> total;
    for (const Flag& a : small)
      for (const Flag& b : small) {
        const AlgebraElement product = flag_product(t, a.key(), b.key());
        for (const auto& [key, c] : product.coefficients()) total[key] += c;
      }
    const auto big = enumerate_flags(t, 6);
    ASSERT_EQ(total.size(), big.size());
    for (const auto& [key, sum] : total) EXPECT_EQ(sum, Rational(1));
  }
}

TEST(Average, SingleLabelExamples) {
  const FlagType single(SmallGraph(1));
  auto labeled = [&](const SmallGraph& g, int v) {
    AlgebraElement a(single, g.vertex_count());
    a.add(Flag(single, g, {v}).key(), 1);
    return average(a);
  };
  EXPECT_EQ(labeled(SmallGraph::complete(2), 0), rho());
  EXPECT_EQ(labeled(SmallGraph::path(3), 1), model_element(SmallGraph::path(3), frac(1, 3)));
  EXPECT_EQ(labeled(SmallGraph::path(3), 0), model_element(SmallGraph::path(3), frac(2, 3)));
}

TEST(Average, LinearAndNonnegative) {
  std::mt19937 rng(4);
  const FlagType t(SmallGraph::path(2));
  const AlgebraElement a = random_element(t, 4, rng);
  const AlgebraElement b = random_element(t, 4, rng);
  EXPECT_EQ(average(a + frac(3, 7) * b), average(a) + frac(3, 7) * average(b));
  AlgebraElement positive(t, 4);
  for (const Flag& f : enumerate_flags(t, 4)) positive.add(f.key(), 1);
  const AlgebraElement averaged = average(positive);
  EXPECT_FALSE(averaged.is_zero());
  for (const auto& [key, c] : averaged.coefficients()) EXPECT_GT(c, Rational(0));
}

TEST(LabelingProbability, CountsReproducingLabelings) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 3;
    const int n = k + 1 + trial % 3;
    const FlagType t(testing::random_graph(k, rng, 0.5));
    const SmallGraph g = testing::random_graph(n, rng, 0.5);
    std::map<CanonicalKey, long> counts;
    long consistent = 0;
    std::vector<int> labels(k, 0);
    for (;;) {
      std::vector<bool> used(n, false);
      bool ok = true;
      for (int v : labels) {
        ok = ok && !used[v];
        used[v] = true;
      }
      if (ok) {
        Permutation order(labels);
        for (int v = 0; v < n; ++v)
          if (!used[v]) order.push_back(v);
        const SmallGraph arranged = g.permuted(order);
        bool typed = true;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) typed = typed && arranged.adjacent(i, j) == t.graph().adjacent(i, j);
        if (typed) {
          ++consistent;
          ++counts[testing::brute_force_canonical_key(arranged, k)];
        }
      }
      int pos = 0;
      while (pos < k && ++labels[pos] == n) labels[pos++] = 0;
      if (pos == k) break;
    }
    long summed = 0;
    for (const auto& [key, count] : counts) {
      EXPECT_EQ(labeling_probability(t, key), Rational(BigInt(count), falling_factorial(n, k)));
      summed += count;
    }
    EXPECT_EQ(summed, consistent);
  }
}

TEST(Star, Examples) {
  std::mt19937 rng(6);
  const AlgebraElement a = random_element(FlagType(), 5, rng);
  EXPECT_EQ(star(star(a)), a);
  EXPECT_EQ(star(hat(SmallGraph::wheel(5), 6)).coefficient(canonical_key(SmallGraph(6))), Rational(1));
  EXPECT_EQ(star(constant(frac(2, 9), 5)), constant(frac(2, 9), 5));
  const AlgebraElement b = random_element(FlagType(), 5, rng);
  EXPECT_EQ(star(a - 3 * b), star(a) - 3 * star(b));
  EXPECT_THROW(star(AlgebraElement(FlagType(SmallGraph(1)), 2)), std::invalid_argument);
}

TEST(Constant, Examples) {
  const AlgebraElement c = constant(frac(1, 512), 6);
  EXPECT_EQ(c.term_count(), 156U);
  for (const auto& [key, value] : c.coefficients()) EXPECT_EQ(value, frac(1, 512));
  EXPECT_TRUE(constant(0, 4).is_zero());
  std::mt19937 rng(7);
  for (int i = 0; i < 10; ++i) {
    const SmallGraph g = testing::random_graph(6 + i % 3, rng);
    EXPECT_EQ(evaluate(constant(frac(5, 11), 6), g), frac(5, 11));
  }
}

TEST(QuadraticForm, Examples) {
  const FlagType single(SmallGraph(1));
  const AlgebraElement f = f_element(single, 1);
  AlgebraElement g(single, 2);
  g.add(enumerate_flags(single, 2).back().key(), 1);

  EXPECT_EQ(quadratic_form_value({single, RationalMatrix{{1}}, {f}}), multiply(f, f));
  EXPECT_EQ(quadratic_form_value({single, RationalMatrix::identity(2), {f, g}}), multiply(f, f) + multiply(g, g));
  EXPECT_EQ(quadratic_form_value({single, RationalMatrix{{0, 1}, {1, 0}}, {f, g}}), 2 * multiply(f, g));
  EXPECT_THROW(quadratic_form_value({single, RationalMatrix::identity(2), {f}}), std::invalid_argument);
  EXPECT_THROW(quadratic_form_value({single, RationalMatrix{{0, 1}, {2, 0}}, {f, g}}), std::invalid_argument);
}

TEST(Evaluate, HatOfWheelIsHomDensity) {
  const AlgebraElement w = hat(SmallGraph::wheel(5), 6);
  EXPECT_EQ(evaluate(w, SmallGraph::cycle(6)), Rational(0));
  std::mt19937 rng(8);
  for (int i = 0; i < 20; ++i) {
    const int n = 6 + i % 3;
    const SmallGraph g = testing::random_graph(n, rng, 0.7);
    const Rational oracle(BigInt(testing::brute_force_injective_homs(SmallGraph::wheel(5), g)), falling_factorial(n, 6));
    EXPECT_EQ(evaluate(w, g), oracle);
  }
  EXPECT_THROW(evaluate(w, SmallGraph(5)), std::invalid_argument);
}

TEST(Evaluate, LiftPreservesValue) {
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    const int level = 2 + i % 3;
    const AlgebraElement a = random_element(FlagType(), level, rng);
    const SmallGraph g = testing::random_graph(7, rng);
    for (int m = level; m <= 6; ++m) EXPECT_EQ(evaluate(lift(a, m), g), evaluate(a, g));
  }
}

}  // namespace
}  // namespace flagcert

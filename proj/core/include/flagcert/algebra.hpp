#pragma once

#include <vector>

#include "flagcert/algebra_element.hpp"
#include "flagcert/rational_matrix.hpp"
#include "flagcert/small_graph.hpp"

namespace flagcert {

/// Largest level any algebra operation will produce.
inline constexpr int kMaxLevel = 7;

/// Re-expresses `a` at a higher level via the chain rule: each flag F' is
/// replaced by the sum over level-m flags F of the probability that a random
/// choice of unlabeled vertices of F, with the labels, induces F'.
AlgebraElement lift(const AlgebraElement& a, int target_level);

/// Product of two flag classes of the same type. The coefficient of a flag F
/// is the probability that a uniformly random split of F's unlabeled
/// vertices into parts of the two factor sizes induces the first factor on
/// the first part and the second on the rest.
AlgebraElement flag_product(const FlagType& type, const CanonicalKey& a, const CanonicalKey& b);

/// Bilinear extension of flag_product. Throws std::invalid_argument on a type
/// mismatch or when the product level would exceed kMaxLevel.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// q_type(F): fraction of injective maps [k] -> V(F) which, used as the
/// labeling, give a flag isomorphic to F.
Rational labeling_probability(const FlagType& type, const CanonicalKey& flag);

/// Averaging operator: forgets the labels, weighting each flag by
/// labeling_probability. The result lives over the empty type.
AlgebraElement average(const AlgebraElement& a);

/// Complement involution on the empty-type algebra. Throws
/// std::invalid_argument for a non-empty type.
AlgebraElement star(const AlgebraElement& a);

/// c * (sum of all models on `level` vertices), 1 <= level <= kMaxLevel.
AlgebraElement constant(const Rational& c, int level);

struct QuadraticFormSpec {
  FlagType type;
  RationalMatrix matrix;
  std::vector<AlgebraElement> entries;
};

/// sum_{a,b} matrix(a,b) * entries[a] * entries[b]; each unordered pair is
/// multiplied once and doubled off the diagonal. Throws
/// std::invalid_argument on dimension, symmetry, type or level mismatch.
AlgebraElement quadratic_form_value(const QuadraticFormSpec& q);

/// sum over models F of coeff(F) * p(F, G) for an empty-type element.
/// Throws std::invalid_argument when G has fewer vertices than the level.
Rational evaluate(const AlgebraElement& a, const SmallGraph& g);

}  // namespace flagcert

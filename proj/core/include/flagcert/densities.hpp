#pragma once

#include <cstdint>
#include <vector>

#include "flagcert/algebra_element.hpp"
#include "flagcert/model_table.hpp"
#include "flagcert/rational.hpp"
#include "flagcert/small_graph.hpp"

namespace flagcert {

/// A probability: an exact rational in [0, 1].
class DensityValue {
 public:
  /// Throws std::domain_error outside [0, 1].
  explicit DensityValue(Rational value);
  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT(google-explicit-constructor)
  friend bool operator==(const DensityValue&, const DensityValue&) = default;

 private:
  Rational value_;
};

/// Injective maps V(H) -> V(G) sending every edge of H to an edge of G.
/// Zero when H has more vertices than G.
std::uint64_t count_injective_homs(const SmallGraph& h, const SmallGraph& g);

/// t0(H; G) = count_injective_homs / (|G|)_{|H|}. Throws std::invalid_argument
/// when |V(H)| > |V(G)|.
DensityValue t0(const SmallGraph& h, const SmallGraph& g);

/// p(H, G): fraction of |V(H)|-subsets of V(G) inducing a copy of H.
/// Throws std::invalid_argument when |V(H)| > |V(G)|.
DensityValue induced_density(const SmallGraph& h, const SmallGraph& g);

/// For each model of `models`, the number of vertex subsets of G inducing it.
std::vector<std::uint64_t> induced_model_counts(const SmallGraph& g, const ModelTable& models);

/// sum over F in M_n of t0(H; F) F, over the empty type. Throws
/// std::invalid_argument when |V(H)| > n.
AlgebraElement hat(const SmallGraph& h, int n);

}  // namespace flagcert

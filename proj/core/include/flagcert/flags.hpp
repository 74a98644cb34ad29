#pragma once

#include <vector>

#include "flagcert/algebra_element.hpp"
#include "flagcert/flag_type.hpp"

namespace flagcert {

/// Permutations of [k] preserving the type's adjacency (lexicographic order).
std::vector<Permutation> type_automorphisms(const FlagType& type);

/// Aut(type)-orbits on the 2^k subsets of [k].
struct OrbitPartition {
  FlagType type;
  /// Orbits sorted by (cardinality, representative); members sorted with
  /// label_set_less, the first member being the representative.
  std::vector<std::vector<LabelSet>> orbits;
  /// orbit_of[s] = position of the orbit containing s.
  std::vector<int> orbit_of;

  LabelSet representative(std::size_t orbit) const { return orbits[orbit].front(); }
  std::size_t nonempty_orbit_count() const { return orbits.size() - 1; }
};

OrbitPartition subset_orbits(const FlagType& type);

/// F^type_V: the type plus one unlabeled vertex adjacent to the labels in V.
Flag one_vertex_flag(const FlagType& type, LabelSet v);

/// All flag classes of the type on n vertices, sorted by key.
/// Requires type.size() <= n <= 7; throws std::invalid_argument otherwise.
std::vector<Flag> enumerate_flags(const FlagType& type, int n);

/// f_V = F_{} - (1/|Aut|) * sum over automorphisms eta of F_{eta(V)}, an
/// element at level k+1. Throws std::invalid_argument for V empty.
AlgebraElement f_element(const FlagType& type, LabelSet v);

/// F_V - F_W as a level k+1 element.
AlgebraElement difference_element(const FlagType& type, LabelSet v, LabelSet w);

}  // namespace flagcert

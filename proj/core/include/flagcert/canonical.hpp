#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "flagcert/small_graph.hpp"

namespace flagcert {

/// Upper-triangular adjacency bitstring of a labeled graph. Pairs (i, j),
/// i < j, are ordered lexicographically and pair 0 is the most significant
/// bit, so comparing keys compares bitstrings lexicographically.
struct CanonicalKey {
  int vertex_count = 0;
  std::array<std::uint64_t, 2> words{};

  bool bit(int pair_index) const;
  void set_bit(int pair_index);

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  /// The bitstring as '0'/'1' characters, pair order.
  std::string bitstring() const;
};

int pair_index(int n, int i, int j);

/// The key of the graph exactly as labeled (no minimisation).
CanonicalKey labeled_key(const SmallGraph& g);
/// Inverse of labeled_key.
SmallGraph graph_from_key(const CanonicalKey& key);

struct CanonicalForm {
  CanonicalKey key;
  /// position -> original vertex; graph.permuted(order) has bitstring `key`.
  Permutation order;
};

/// Minimum of labeled_key over every vertex permutation that keeps vertices
/// 0..fixed_prefix-1 in place. fixed_prefix = 0 gives the graph's canonical
/// key; fixed_prefix = k gives the canonical form of a flag whose labels are
/// the first k vertices.
///
/// The search builds the permutation one position at a time. Lexicographic
/// order on the pair bitstring is row-major, and the minimum row r places
/// non-neighbours of the chosen vertex before its neighbours inside every
/// cell of the current ordered partition, so only vertices that attain the
/// minimal row need to be expanded. Twins are expanded once.
CanonicalForm canonical_form(const SmallGraph& g, int fixed_prefix = 0);

inline CanonicalKey canonical_key(const SmallGraph& g) { return canonical_form(g).key; }

inline bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  return a.vertex_count() == b.vertex_count() && canonical_key(a) == canonical_key(b);
}

}  // namespace flagcert

#pragma once

#include <string>
#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/small_graph.hpp"

namespace flagcert {

/// A type: a fully labeled graph on [k]; label i+1 is vertex i. Types are
/// concrete labeled graphs, so isomorphic types with different edge sets
/// are different types.
class FlagType {
 public:
  static constexpr int kMaxSize = 6;

  /// The empty type (k = 0).
  FlagType() = default;
  /// Throws std::invalid_argument when the graph has more than 6 vertices.
  explicit FlagType(SmallGraph graph);

  int size() const { return graph_.vertex_count(); }
  const SmallGraph& graph() const { return graph_; }
  bool is_empty() const { return size() == 0; }

  friend bool operator==(const FlagType&, const FlagType&) = default;

 private:
  SmallGraph graph_;
};

/// A graph with an injective labeling of its vertices by [k] whose labeled
/// subgraph equals the type.
class Flag {
 public:
  /// labels[i] is the vertex carrying label i+1. Throws std::invalid_argument
  /// if the labeling is not injective or disagrees with the type.
  Flag(FlagType type, SmallGraph graph, std::vector<int> labels);

  const FlagType& type() const { return type_; }
  const SmallGraph& graph() const { return graph_; }
  const std::vector<int>& labels() const { return labels_; }
  int size() const { return graph_.vertex_count(); }

  /// The graph renumbered so that label i sits at vertex i-1 and the
  /// unlabeled vertices follow in their original order.
  SmallGraph labels_first() const;

  /// Canonical key of the flag class: minimum bitstring over renumberings
  /// that keep each label in its position.
  CanonicalKey key() const;

 private:
  FlagType type_;
  SmallGraph graph_;
  std::vector<int> labels_;
};

/// Canonical key of a labels-first graph with k labels.
inline CanonicalKey flag_key(const SmallGraph& labels_first, int k) { return canonical_form(labels_first, k).key; }

/// Rebuilds the canonical flag of a key.
Flag flag_from_key(const FlagType& type, const CanonicalKey& key);

inline bool flags_isomorphic(const Flag& a, const Flag& b) {
  return a.type() == b.type() && a.size() == b.size() && a.key() == b.key();
}

/// Subsets of [k] as bitmasks: bit i stands for label i+1.
using LabelSet = VertexSet;

/// Lexicographic order on the sorted label lists: {1} < {1,2} < {1,3} < {2}.
bool label_set_less(LabelSet a, LabelSet b);
/// "{1,3}"; "{}" for the empty set.
std::string format_label_set(LabelSet s);
/// Image of a label set under a permutation given as position -> image.
LabelSet apply_permutation(const Permutation& p, LabelSet s);

}  // namespace flagcert

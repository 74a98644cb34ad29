#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "flagcert/canonical.hpp"

namespace flagcert {

/// M_n: one representative per isomorphism class of graphs on n vertices,
/// sorted by canonical key. Representatives are the canonical graphs
/// themselves (graph_from_key of their key).
class ModelTable {
 public:
  int n() const { return n_; }
  std::size_t size() const { return models_.size(); }
  const SmallGraph& model(std::size_t i) const { return models_[i]; }
  const CanonicalKey& key(std::size_t i) const { return keys_[i]; }
  const std::vector<SmallGraph>& models() const { return models_; }
  const std::vector<CanonicalKey>& keys() const { return keys_; }

  /// Position of the class of `g`; throws std::out_of_range for a graph of a
  /// different order.
  std::size_t index_of(const SmallGraph& g) const;
  std::size_t index_of_key(const CanonicalKey& key) const;

  /// perm[i] = index of the complement of model i.
  const std::vector<std::size_t>& complement_permutation() const { return complement_; }

  friend ModelTable enumerate_models(int n);

 private:
  ModelTable(int n, std::vector<CanonicalKey> keys);

  int n_ = 0;
  std::vector<SmallGraph> models_;
  std::vector<CanonicalKey> keys_;
  std::map<CanonicalKey, std::size_t> index_;
  std::vector<std::size_t> complement_;
};

/// All models on n vertices, 1 <= n <= 8. For n <= 6 every one of the
/// 2^C(n,2) labeled graphs is canonicalised; for n = 7, 8 each model of
/// M_{n-1} is extended by a new vertex in all 2^{n-1} ways, which reaches
/// every class. Throws std::invalid_argument outside the range.
ModelTable enumerate_models(int n);

/// Process-wide cache of enumerate_models; thread-safe, tables immutable.
const ModelTable& model_table(int n);

}  // namespace flagcert

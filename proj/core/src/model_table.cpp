#include "flagcert/model_table.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace flagcert {

ModelTable::ModelTable(int n, std::vector<CanonicalKey> keys) : n_(n), keys_(std::move(keys)) {
  models_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    models_.push_back(graph_from_key(keys_[i]));
    index_.emplace(keys_[i], i);
  }
  complement_.reserve(models_.size());
  for (const auto& g : models_) complement_.push_back(index_of(g.complement()));
}

std::size_t ModelTable::index_of(const SmallGraph& g) const {
  if (g.vertex_count() != n_)
    throw std::out_of_range("model table: graph has " + std::to_string(g.vertex_count()) + " vertices, table is M_" +
                            std::to_string(n_));
  return index_of_key(canonical_key(g));
}

std::size_t ModelTable::index_of_key(const CanonicalKey& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) throw std::out_of_range("model table: key not present");
  return it->second;
}

ModelTable enumerate_models(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_models: n must be in [1, 8], got " + std::to_string(n));
  std::set<CanonicalKey> keys;
  if (n <= 6) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t bits = 0; bits < (1U << pairs); ++bits) {
      CanonicalKey labeled;
      labeled.vertex_count = n;
      for (int p = 0; p < pairs; ++p)
        if ((bits >> p) & 1U) labeled.set_bit(p);
      keys.insert(canonical_key(graph_from_key(labeled)));
    }
  } else {
    const ModelTable smaller = enumerate_models(n - 1);
    for (const auto& g : smaller.models())
      for (std::uint32_t nb = 0; nb < (1U << (n - 1)); ++nb)
        keys.insert(canonical_key(g.with_vertex(static_cast<VertexSet>(nb))));
  }
  return ModelTable(n, {keys.begin(), keys.end()});
}

const ModelTable& model_table(int n) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<ModelTable>, 9> cache;
  if (n < 1 || n > 8) throw std::invalid_argument("model_table: n must be in [1, 8], got " + std::to_string(n));
  std::lock_guard lock(mutex);
  if (!cache[n]) cache[n] = std::make_unique<ModelTable>(enumerate_models(n));
  return *cache[n];
}

}  // namespace flagcert

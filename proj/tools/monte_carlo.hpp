#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "flagcert/small_graph.hpp"

namespace flagcert::cli {

/// Dense adjacency for host graphs larger than SmallGraph allows.
class DenseGraph {
 public:
  explicit DenseGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}
  explicit DenseGraph(const SmallGraph& g);

  /// G(n, 1/2): pairs (i, j), i < j, in lexicographic order, each decided by
  /// the top bit of one 64-bit draw.
  static DenseGraph random_half(int n, std::mt19937_64& rng);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  void set_edge(int u, int v) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  }

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
};

/// Uniform integer in [0, bound) from raw 64-bit draws by rejection, so the
/// stream of results is identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct CommonEstimate {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
};

/// Samples uniformly random injections V(H) -> V(G) and averages the
/// indicator that the image spans a copy of H in G or in its complement.
/// The expectation is t0(H; G) + t0(H; G*).
CommonEstimate estimate_common(const SmallGraph& pattern, const DenseGraph& host, std::uint64_t samples,
                               std::mt19937_64& rng);

}  // namespace flagcert::cli

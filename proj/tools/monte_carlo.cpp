#include "monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flagcert::cli {

DenseGraph::DenseGraph(const SmallGraph& g) : DenseGraph(g.vertex_count()) {
  for (auto [u, v] : g.edges()) set_edge(u, v);
}

DenseGraph DenseGraph::random_half(int n, std::mt19937_64& rng) {
  DenseGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() >> 63) g.set_edge(i, j);
  return g;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

CommonEstimate estimate_common(const SmallGraph& pattern, const DenseGraph& host, std::uint64_t samples,
                               std::mt19937_64& rng) {
  const int h = pattern.vertex_count();
  const int n = host.vertex_count();
  if (h > n) throw std::invalid_argument("estimate_common: pattern larger than host");
  if (samples == 0) throw std::invalid_argument("estimate_common: need at least one sample");
  const auto edges = pattern.edges();

  std::vector<int> pool(n);
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) pool[i] = i;
    // partial Fisher-Yates: pool[0..h) is a uniform injection
    for (int i = 0; i < h; ++i) {
      const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    bool in_g = true;
    bool in_complement = true;
    for (auto [u, v] : edges) {
      if (host.adjacent(pool[u], pool[v]))
        in_complement = false;
      else
        in_g = false;
    }
    // both indicators hold at once only for an edgeless pattern
    const std::uint64_t x = static_cast<std::uint64_t>(in_g) + static_cast<std::uint64_t>(in_complement);
    sum += x;
    sum_sq += x * x;
  }

  CommonEstimate out;
  out.samples = samples;
  const auto count = static_cast<double>(samples);
  out.mean = static_cast<double>(sum) / count;
  if (samples > 1) {
    const double variance = (static_cast<double>(sum_sq) - count * out.mean * out.mean) / (count - 1);
    out.standard_error = std::sqrt(std::max(0.0, variance) / count);
  }
  return out;
}

}  // namespace flagcert::cli

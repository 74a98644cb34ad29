#include "flagcert/densities.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace flagcert {

DensityValue::DensityValue(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0 || value_ > Rational(1))
    throw std::domain_error("density " + value_.to_string() + " outside [0, 1]");
}

namespace {

std::uint64_t extend_hom(const SmallGraph& h, const SmallGraph& g, std::vector<int>& image, VertexSet used, int v) {
  if (v == h.vertex_count()) return 1;
  std::uint64_t total = 0;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if ((used >> w) & 1U) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (h.adjacent(u, v)) ok = g.adjacent(image[u], w);
    if (!ok) continue;
    image[v] = w;
    total += extend_hom(h, g, image, static_cast<VertexSet>(used | (1U << w)), v + 1);
  }
  return total;
}

void require_fits(const SmallGraph& h, const SmallGraph& g, const char* what) {
  if (h.vertex_count() > g.vertex_count())
    throw std::invalid_argument(std::string(what) + ": pattern has " + std::to_string(h.vertex_count()) +
                                " vertices, host only " + std::to_string(g.vertex_count()));
}

// Calls f(subset) for every k-subset of [n] as a sorted vertex list.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) vertices.push_back(v);
    f(vertices);
  }
}

}  // namespace

std::uint64_t count_injective_homs(const SmallGraph& h, const SmallGraph& g) {
  if (h.vertex_count() > g.vertex_count()) return 0;
  std::vector<int> image(h.vertex_count());
  return extend_hom(h, g, image, 0, 0);
}

DensityValue t0(const SmallGraph& h, const SmallGraph& g) {
  require_fits(h, g, "t0");
  return DensityValue(Rational(BigInt(static_cast<unsigned long>(count_injective_homs(h, g))),
                               falling_factorial(g.vertex_count(), h.vertex_count())));
}

DensityValue induced_density(const SmallGraph& h, const SmallGraph& g) {
  require_fits(h, g, "induced_density");
  const auto target = canonical_key(h);
  unsigned long hits = 0;
  for_each_subset(g.vertex_count(), h.vertex_count(), [&](const std::vector<int>& s) {
    if (canonical_key(g.induced(s)) == target) ++hits;
  });
  return DensityValue(Rational(BigInt(hits), binomial(g.vertex_count(), h.vertex_count())));
}

std::vector<std::uint64_t> induced_model_counts(const SmallGraph& g, const ModelTable& models) {
  std::vector<std::uint64_t> counts(models.size(), 0);
  for_each_subset(g.vertex_count(), models.n(),
                  [&](const std::vector<int>& s) { ++counts[models.index_of(g.induced(s))]; });
  return counts;
}

AlgebraElement hat(const SmallGraph& h, int n) {
  if (h.vertex_count() > n)
    throw std::invalid_argument("hat: pattern has " + std::to_string(h.vertex_count()) + " vertices, level " +
                                std::to_string(n));
  const ModelTable& models = model_table(n);
  AlgebraElement out(FlagType(), n);
  for (std::size_t i = 0; i < models.size(); ++i) out.add(models.key(i), t0(h, models.model(i)).value());
  return out;
}

}  // namespace flagcert

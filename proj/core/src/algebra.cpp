#include "flagcert/algebra.hpp"

#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "flagcert/densities.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/model_table.hpp"

namespace flagcert {

namespace {

// Vertex lists of the k labels followed by the chosen unlabeled vertices.
std::vector<int> labels_plus(int k, std::uint32_t chosen, int n) {
  std::vector<int> out;
  for (int v = 0; v < k; ++v) out.push_back(v);
  for (int v = k; v < n; ++v)
    if ((chosen >> v) & 1U) out.push_back(v);
  return out;
}

class ProductCache {
 public:
  explicit ProductCache(const FlagType& type) : type_(type) {}

  const AlgebraElement& get(const CanonicalKey& a, const CanonicalKey& b) {
    auto it = cache_.find({a, b});
    if (it == cache_.end()) it = cache_.emplace(std::make_pair(a, b), flag_product(type_, a, b)).first;
    return it->second;
  }

 private:
  const FlagType& type_;
  std::map<std::pair<CanonicalKey, CanonicalKey>, AlgebraElement> cache_;
};

void accumulate_product(AlgebraElement& out, const AlgebraElement& a, const AlgebraElement& b,
                        const Rational& weight, ProductCache& cache) {
  for (const auto& [ka, ca] : a.coefficients()) {
    for (const auto& [kb, cb] : b.coefficients()) {
      const Rational c = weight * ca * cb;
      for (const auto& [key, value] : cache.get(ka, kb).coefficients()) out.add(key, c * value);
    }
  }
}

int product_level(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.type() == b.type())) throw std::invalid_argument("multiply: type mismatch");
  const int level = a.level() + b.level() - a.type().size();
  if (level > kMaxLevel)
    throw std::invalid_argument("multiply: product level " + std::to_string(level) + " exceeds " +
                                std::to_string(kMaxLevel));
  return level;
}

}  // namespace

AlgebraElement lift(const AlgebraElement& a, int target_level) {
  const int k = a.type().size();
  if (target_level < a.level() || target_level > kMaxLevel)
    throw std::invalid_argument("lift: target level " + std::to_string(target_level) + " outside [" +
                                std::to_string(a.level()) + ", " + std::to_string(kMaxLevel) + "]");
  if (target_level == a.level()) return a;

  std::vector<CanonicalKey> big_keys;
  if (k == 0) {
    big_keys = model_table(target_level).keys();
  } else {
    for (const auto& f : enumerate_flags(a.type(), target_level)) big_keys.push_back(f.key());
  }

  const int pick = a.level() - k;
  const Rational share = Rational(1) / Rational(binomial(target_level - k, pick));
  AlgebraElement out(a.type(), target_level);
  for (const auto& key : big_keys) {
    const SmallGraph g = graph_from_key(key);
    Rational coefficient;
    for (std::uint32_t chosen = 0; chosen < (1U << target_level); ++chosen) {
      if ((chosen & ((1U << k) - 1U)) != 0 || std::popcount(chosen) != pick) continue;
      const auto small = flag_key(g.induced(labels_plus(k, chosen, target_level)), k);
      coefficient += a.coefficient(small);
    }
    out.add(key, coefficient * share);
  }
  return out;
}

AlgebraElement flag_product(const FlagType& type, const CanonicalKey& a, const CanonicalKey& b) {
  const int k = type.size();
  const SmallGraph ga = graph_from_key(a);
  const SmallGraph gb = graph_from_key(b);
  const int ua = ga.vertex_count() - k;
  const int ub = gb.vertex_count() - k;
  const int n = k + ua + ub;
  if (ua < 0 || ub < 0) throw std::invalid_argument("flag_product: flag smaller than its type");
  if (n > kMaxLevel) throw std::invalid_argument("flag_product: product level exceeds the supported maximum");

  // labels 0..k-1, first part k..k+ua-1, second part k+ua..n-1
  SmallGraph base(n);
  for (auto [u, v] : ga.edges()) base.set_edge(u, v);
  const auto shift = [&](int v) { return v < k ? v : v + ua; };
  for (auto [u, v] : gb.edges()) {
    if (u < k && v < k) continue;
    base.set_edge(shift(u), shift(v));
  }

  std::set<CanonicalKey> glued;
  const int cross = ua * ub;
  for (std::uint32_t bits = 0; bits < (1U << cross); ++bits) {
    SmallGraph g = base;
    for (int i = 0; i < ua; ++i)
      for (int j = 0; j < ub; ++j)
        if ((bits >> (i * ub + j)) & 1U) g.set_edge(k + i, k + ua + j);
    glued.insert(flag_key(g, k));
  }

  const std::uint32_t unlabeled = ((1U << n) - 1U) & ~((1U << k) - 1U);
  const Rational share = Rational(1) / Rational(binomial(ua + ub, ua));
  AlgebraElement out(type, n);
  for (const auto& key : glued) {
    const SmallGraph g = graph_from_key(key);
    long hits = 0;
    for (std::uint32_t chosen = 0; chosen < (1U << n); ++chosen) {
      if ((chosen & ~unlabeled) != 0 || std::popcount(chosen) != ua) continue;
      if (flag_key(g.induced(labels_plus(k, chosen, n)), k) != a) continue;
      if (flag_key(g.induced(labels_plus(k, unlabeled & ~chosen, n)), k) != b) continue;
      ++hits;
    }
    out.add(key, share * Rational(hits));
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(a.type(), product_level(a, b));
  ProductCache cache(a.type());
  accumulate_product(out, a, b, 1, cache);
  return out;
}

Rational labeling_probability(const FlagType& type, const CanonicalKey& flag) {
  const int k = type.size();
  const SmallGraph g = graph_from_key(flag);
  const int n = g.vertex_count();
  long hits = 0;
  std::vector<int> theta(k);
  // Enumerate injective k-tuples in lexicographic order.
  const auto visit = [&](auto&& self, int i, VertexSet used) -> void {
    if (i == k) {
      if (!(g.induced(theta) == type.graph())) return;
      std::vector<int> order = theta;
      for (int v = 0; v < n; ++v)
        if (!((used >> v) & 1U)) order.push_back(v);
      if (flag_key(g.permuted(order), k) == flag) ++hits;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      theta[i] = v;
      self(self, i + 1, static_cast<VertexSet>(used | (1U << v)));
    }
  };
  visit(visit, 0, 0);
  return Rational(hits) / Rational(falling_factorial(n, k));
}

AlgebraElement average(const AlgebraElement& a) {
  AlgebraElement out(FlagType(), a.level());
  for (const auto& [key, value] : a.coefficients())
    out.add(canonical_key(graph_from_key(key)), value * labeling_probability(a.type(), key));
  return out;
}

AlgebraElement star(const AlgebraElement& a) {
  if (!a.type().is_empty()) throw std::invalid_argument("star: defined only over the empty type");
  AlgebraElement out(FlagType(), a.level());
  for (const auto& [key, value] : a.coefficients()) out.add(canonical_key(graph_from_key(key).complement()), value);
  return out;
}

AlgebraElement constant(const Rational& c, int level) {
  if (level < 1 || level > kMaxLevel)
    throw std::invalid_argument("constant: level " + std::to_string(level) + " outside [1, " +
                                std::to_string(kMaxLevel) + "]");
  AlgebraElement out(FlagType(), level);
  for (const auto& key : model_table(level).keys()) out.add(key, c);
  return out;
}

AlgebraElement quadratic_form_value(const QuadraticFormSpec& q) {
  const std::size_t d = q.entries.size();
  if (q.matrix.order() != d)
    throw std::invalid_argument("quadratic form: matrix order " + std::to_string(q.matrix.order()) + " but " +
                                std::to_string(d) + " entries");
  if (!q.matrix.is_symmetric()) throw std::invalid_argument("quadratic form: matrix is not symmetric");
  if (d == 0) throw std::invalid_argument("quadratic form: no entries");
  const int level = q.entries.front().level();
  for (const auto& e : q.entries) {
    if (!(e.type() == q.type)) throw std::invalid_argument("quadratic form: entry over a different type");
    if (e.level() != level) throw std::invalid_argument("quadratic form: entries at different levels");
  }
  AlgebraElement out(q.type, product_level(q.entries.front(), q.entries.front()));
  ProductCache cache(q.type);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Rational& m = q.matrix(i, j);
      if (m.is_zero()) continue;
      accumulate_product(out, q.entries[i], q.entries[j], i == j ? m : m * Rational(2), cache);
    }
  }
  return out;
}

Rational evaluate(const AlgebraElement& a, const SmallGraph& g) {
  if (!a.type().is_empty()) throw std::invalid_argument("evaluate: element must be over the empty type");
  if (g.vertex_count() < a.level())
    throw std::invalid_argument("evaluate: graph has " + std::to_string(g.vertex_count()) + " vertices, level " +
                                std::to_string(a.level()));
  const ModelTable& models = model_table(a.level());
  const auto counts = induced_model_counts(g, models);
  Rational total;
  for (const auto& [key, value] : a.coefficients()) {
    const auto c = counts[models.index_of_key(key)];
    if (c != 0) total += value * Rational(BigInt(static_cast<unsigned long>(c)));
  }
  return total / Rational(binomial(g.vertex_count(), a.level()));
}

}  // namespace flagcert

#include "flagcert/flags.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagcert {

FlagType::FlagType(SmallGraph graph) : graph_(graph) {
  if (graph_.vertex_count() > kMaxSize) throw std::invalid_argument("type: at most 6 labeled vertices supported");
}

Flag::Flag(FlagType type, SmallGraph graph, std::vector<int> labels)
    : type_(std::move(type)), graph_(graph), labels_(std::move(labels)) {
  const int k = type_.size();
  if (static_cast<int>(labels_.size()) != k) throw std::invalid_argument("flag: label count differs from type size");
  VertexSet used = 0;
  for (int v : labels_) {
    if (v < 0 || v >= graph_.vertex_count()) throw std::invalid_argument("flag: label vertex out of range");
    if ((used >> v) & 1U) throw std::invalid_argument("flag: labeling is not injective");
    used |= static_cast<VertexSet>(1U << v);
  }
  if (!(graph_.induced(labels_) == type_.graph()))
    throw std::invalid_argument("flag: labeled vertices do not induce the type");
}

SmallGraph Flag::labels_first() const {
  std::vector<int> order = labels_;
  VertexSet used = 0;
  for (int v : labels_) used |= static_cast<VertexSet>(1U << v);
  for (int v = 0; v < graph_.vertex_count(); ++v)
    if (!((used >> v) & 1U)) order.push_back(v);
  return graph_.permuted(order);
}

CanonicalKey Flag::key() const { return flag_key(labels_first(), type_.size()); }

Flag flag_from_key(const FlagType& type, const CanonicalKey& key) {
  std::vector<int> labels(type.size());
  std::iota(labels.begin(), labels.end(), 0);
  return Flag(type, graph_from_key(key), std::move(labels));
}

bool label_set_less(LabelSet a, LabelSet b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= static_cast<LabelSet>(a - 1);
    b &= static_cast<LabelSet>(b - 1);
  }
  return a == 0 && b != 0;
}

std::string format_label_set(LabelSet s) {
  std::string out = "{";
  for (int i = 0; i < 16; ++i) {
    if (!((s >> i) & 1U)) continue;
    if (out.size() > 1) out += ',';
    out += std::to_string(i + 1);
  }
  return out + "}";
}

LabelSet apply_permutation(const Permutation& p, LabelSet s) {
  LabelSet out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((s >> i) & 1U) out |= static_cast<LabelSet>(1U << p[i]);
  return out;
}

std::vector<Permutation> type_automorphisms(const FlagType& type) { return automorphisms(type.graph()); }

OrbitPartition subset_orbits(const FlagType& type) {
  const int k = type.size();
  const auto group = type_automorphisms(type);
  const int subsets = 1 << k;
  std::vector<bool> seen(subsets, false);
  OrbitPartition out{type, {}, std::vector<int>(subsets, -1)};
  for (int s = 0; s < subsets; ++s) {
    if (seen[s]) continue;
    std::set<LabelSet> members;
    for (const auto& eta : group) members.insert(apply_permutation(eta, static_cast<LabelSet>(s)));
    std::vector<LabelSet> orbit(members.begin(), members.end());
    std::sort(orbit.begin(), orbit.end(), label_set_less);
    for (auto m : orbit) seen[m] = true;
    out.orbits.push_back(std::move(orbit));
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const auto& a, const auto& b) {
    const int ca = std::popcount(a.front());
    const int cb = std::popcount(b.front());
    if (ca != cb) return ca < cb;
    return label_set_less(a.front(), b.front());
  });
  for (std::size_t i = 0; i < out.orbits.size(); ++i)
    for (auto m : out.orbits[i]) out.orbit_of[m] = static_cast<int>(i);
  return out;
}

Flag one_vertex_flag(const FlagType& type, LabelSet v) {
  const int k = type.size();
  if (v >> k) throw std::invalid_argument("one_vertex_flag: subset " + format_label_set(v) + " not within the type");
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 0);
  return Flag(type, type.graph().with_vertex(v), std::move(labels));
}

std::vector<Flag> enumerate_flags(const FlagType& type, int n) {
  const int k = type.size();
  if (n < k || n > 7)
    throw std::invalid_argument("enumerate_flags: need type size <= n <= 7, got n = " + std::to_string(n));
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i + 1, k); j < n; ++j) free_pairs.emplace_back(i, j);

  SmallGraph base(n);
  for (auto [u, v] : type.graph().edges()) base.set_edge(u, v);

  std::set<CanonicalKey> keys;
  const std::uint32_t combos = 1U << free_pairs.size();
  for (std::uint32_t bits = 0; bits < combos; ++bits) {
    SmallGraph g = base;
    for (std::size_t p = 0; p < free_pairs.size(); ++p)
      if ((bits >> p) & 1U) g.set_edge(free_pairs[p].first, free_pairs[p].second);
    keys.insert(flag_key(g, k));
  }
  std::vector<Flag> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(flag_from_key(type, key));
  return out;
}

AlgebraElement f_element(const FlagType& type, LabelSet v) {
  if (v == 0) throw std::invalid_argument("f_element: the subset must be nonempty");
  const int k = type.size();
  AlgebraElement out(type, k + 1);
  out.add(one_vertex_flag(type, 0).key(), 1);
  const auto group = type_automorphisms(type);
  const Rational weight = Rational(-1) / Rational(static_cast<long>(group.size()));
  for (const auto& eta : group) out.add(one_vertex_flag(type, apply_permutation(eta, v)).key(), weight);
  return out;
}

AlgebraElement difference_element(const FlagType& type, LabelSet v, LabelSet w) {
  AlgebraElement out(type, type.size() + 1);
  out.add(one_vertex_flag(type, v).key(), 1);
  out.add(one_vertex_flag(type, w).key(), -1);
  return out;
}

}  // namespace flagcert

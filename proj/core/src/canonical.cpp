#include "flagcert/canonical.hpp"

#include <algorithm>
#include <vector>

namespace flagcert {

bool CanonicalKey::bit(int p) const { return (words[p / 64] >> (63 - p % 64)) & 1U; }

void CanonicalKey::set_bit(int p) { words[p / 64] |= std::uint64_t{1} << (63 - p % 64); }

std::string CanonicalKey::bitstring() const {
  std::string out;
  const int pairs = vertex_count * (vertex_count - 1) / 2;
  out.reserve(pairs);
  for (int p = 0; p < pairs; ++p) out.push_back(bit(p) ? '1' : '0');
  return out;
}

int pair_index(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

CanonicalKey labeled_key(const SmallGraph& g) {
  CanonicalKey key;
  const int n = g.vertex_count();
  key.vertex_count = n;
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p)
      if (g.adjacent(i, j)) key.set_bit(p);
  return key;
}

SmallGraph graph_from_key(const CanonicalKey& key) {
  const int n = key.vertex_count;
  SmallGraph g(n);
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p)
      if (key.bit(p)) g.set_edge(i, j);
  return g;
}

namespace {

using Cell = std::vector<int>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SmallGraph& g) : g_(g), n_(g.vertex_count()) {
    order_.resize(n_);
  }

  CanonicalForm run(int fixed_prefix) {
    std::vector<Cell> cells;
    for (int v = 0; v < fixed_prefix; ++v) cells.push_back({v});
    Cell rest;
    for (int v = fixed_prefix; v < n_; ++v) rest.push_back(v);
    if (!rest.empty()) cells.push_back(std::move(rest));
    recurse(0, cells);

    CanonicalForm out;
    out.order = best_order_;
    out.key.vertex_count = n_;
    int p = 0;
    for (int r = 0; r < n_; ++r) {
      const int len = n_ - 1 - r;
      for (int b = len - 1; b >= 0; --b, ++p)
        if ((best_rows_[r] >> b) & 1U) out.key.set_bit(p);
    }
    return out;
  }

 private:
  // Refines `cells` (positions r+1.. onwards) after placing v at position r and
  // returns the row-r bitstring, most significant bit first.
  std::uint32_t refine(int v, const std::vector<Cell>& cells, std::vector<Cell>& out) const {
    out.clear();
    std::uint32_t row = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      Cell off, on;
      for (int w : cells[c]) {
        if (w == v) continue;
        (g_.adjacent(v, w) ? on : off).push_back(w);
      }
      for (std::size_t i = 0; i < off.size(); ++i) row <<= 1;
      for (std::size_t i = 0; i < on.size(); ++i) row = (row << 1) | 1U;
      if (!off.empty()) out.push_back(std::move(off));
      if (!on.empty()) out.push_back(std::move(on));
    }
    return row;
  }

  // <0, 0, >0 comparing rows [0, r) of the current prefix to the best.
  int compare_prefix(int r) const {
    for (int i = 0; i < r; ++i) {
      if (rows_[i] != best_rows_[i]) return rows_[i] < best_rows_[i] ? -1 : 1;
    }
    return 0;
  }

  bool twins(int a, int b) const {
    const auto ma = static_cast<VertexSet>(g_.neighbors(a) & ~(1U << b));
    const auto mb = static_cast<VertexSet>(g_.neighbors(b) & ~(1U << a));
    return ma == mb;
  }

  void recurse(int r, const std::vector<Cell>& cells) {
    if (r == n_) {
      if (!have_best_ || compare_prefix(n_) < 0) {
        have_best_ = true;
        best_rows_ = rows_;
        best_order_ = order_;
      }
      return;
    }
    const int prefix_cmp = have_best_ ? compare_prefix(r) : -1;
    if (prefix_cmp > 0) return;

    const Cell& first = cells.front();
    std::vector<std::vector<Cell>> refined(first.size());
    std::vector<std::uint32_t> row(first.size());
    std::uint32_t best_row = UINT32_MAX;
    for (std::size_t i = 0; i < first.size(); ++i) {
      row[i] = refine(first[i], cells, refined[i]);
      best_row = std::min(best_row, row[i]);
    }
    if (prefix_cmp == 0 && best_row > best_rows_[r]) return;

    std::vector<int> expanded;
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (row[i] != best_row) continue;
      const int v = first[i];
      if (std::any_of(expanded.begin(), expanded.end(), [&](int u) { return twins(u, v); })) continue;
      expanded.push_back(v);
      order_[r] = v;
      rows_[r] = best_row;
      recurse(r + 1, refined[i]);
    }
  }

  const SmallGraph& g_;
  int n_;
  Permutation order_;
  std::array<std::uint32_t, SmallGraph::kMaxVertices> rows_{};
  std::array<std::uint32_t, SmallGraph::kMaxVertices> best_rows_{};
  Permutation best_order_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g, int fixed_prefix) {
  if (g.vertex_count() == 0) return {};
  return CanonicalSearch(g).run(fixed_prefix);
}

}  // namespace flagcert

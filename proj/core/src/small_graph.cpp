#include "flagcert/small_graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagcert {

SmallGraph::SmallGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw std::invalid_argument("graph: vertex count " + std::to_string(vertex_count) + " outside [0, 16]");
}

SmallGraph::SmallGraph(int vertex_count, std::span<const std::pair<int, int>> edges) : SmallGraph(vertex_count) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop");
    if (adjacent(u, v)) throw std::invalid_argument("graph: duplicate edge");
    set_edge(u, v);
  }
}

SmallGraph SmallGraph::complete(int n) { return SmallGraph(n).complement(); }

SmallGraph SmallGraph::cycle(int n) {
  SmallGraph g(n);
  for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n);
  return g;
}

SmallGraph SmallGraph::path(int n) {
  SmallGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
  return g;
}

SmallGraph SmallGraph::wheel(int rim) {
  SmallGraph g = cycle(rim);
  return g.with_vertex(static_cast<VertexSet>((1U << rim) - 1U));
}

int SmallGraph::degree(int v) const { return std::popcount(rows_[v]); }

int SmallGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

void SmallGraph::set_edge(int u, int v, bool present) {
  if (u == v) throw std::invalid_argument("graph: loop");
  if (present) {
    rows_[u] |= static_cast<VertexSet>(1U << v);
    rows_[v] |= static_cast<VertexSet>(1U << u);
  } else {
    rows_[u] &= static_cast<VertexSet>(~(1U << v));
    rows_[v] &= static_cast<VertexSet>(~(1U << u));
  }
}

SmallGraph SmallGraph::complement() const {
  SmallGraph out(n_);
  const auto all = static_cast<VertexSet>((1U << n_) - 1U);
  for (int v = 0; v < n_; ++v) out.rows_[v] = static_cast<VertexSet>(all & ~rows_[v] & ~(1U << v));
  return out;
}

SmallGraph SmallGraph::permuted(std::span<const int> order) const { return induced(order); }

SmallGraph SmallGraph::induced(std::span<const int> vertices) const {
  SmallGraph out(static_cast<int>(vertices.size()));
  for (int i = 0; i < out.n_; ++i) {
    VertexSet row = 0;
    for (int j = 0; j < out.n_; ++j)
      if (i != j && adjacent(vertices[i], vertices[j])) row |= static_cast<VertexSet>(1U << j);
    out.rows_[i] = row;
  }
  return out;
}

SmallGraph SmallGraph::with_vertex(VertexSet neighbors) const {
  if (n_ >= kMaxVertices) throw std::invalid_argument("graph: vertex limit reached");
  SmallGraph out = *this;
  ++out.n_;
  for (int v = 0; v < n_; ++v)
    if ((neighbors >> v) & 1U) out.set_edge(v, n_);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_ints(std::string_view s, int line) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || (ptr != s.data() + s.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw ParseError(line, "expected integers, got '" + std::string(s) + "'");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

SmallGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  int n = -1;
  SmallGraph g;
  while (std::getline(in, raw)) {
    ++line;
    auto body = trim(raw);
    if (body.empty() || body.front() == '#') continue;
    const auto values = parse_ints(body, line);
    if (n < 0) {
      if (values.size() != 1) throw ParseError(line, "expected the vertex count");
      n = values[0];
      if (n < 0 || n > SmallGraph::kMaxVertices) throw ParseError(line, "vertex count must be in [0, 16]");
      g = SmallGraph(n);
      continue;
    }
    if (values.size() != 2) throw ParseError(line, "expected an edge 'u v'");
    const int u = values[0];
    const int v = values[1];
    if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line, "vertex index out of range");
    if (g.adjacent(u - 1, v - 1)) throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.set_edge(u - 1, v - 1);
  }
  if (n < 0) throw ParseError(line, "missing vertex count");
  return g;
}

std::string format_graph(const SmallGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::vector<std::pair<int, int>> parse_edge_list(std::string_view text, int line) {
  std::vector<std::pair<int, int>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = trim(text.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) {
      if (comma == text.size()) break;
      throw ParseError(line, "empty edge in list");
    }
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError(line, "edge '" + std::string(item) + "' must look like u-v");
    const auto a = parse_ints(trim(item.substr(0, dash)), line);
    const auto b = parse_ints(trim(item.substr(dash + 1)), line);
    if (a.size() != 1 || b.size() != 1) throw ParseError(line, "edge '" + std::string(item) + "' must look like u-v");
    out.emplace_back(a[0], b[0]);
  }
  return out;
}

std::string format_edge_list(const SmallGraph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ", ";
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out;
}

namespace {

void extend_automorphism(const SmallGraph& g, Permutation& image, VertexSet used, int v,
                         std::vector<Permutation>& out) {
  const int n = g.vertex_count();
  if (v == n) {
    out.push_back(image);
    return;
  }
  for (int w = 0; w < n; ++w) {
    if ((used >> w) & 1U) continue;
    if (g.degree(w) != g.degree(v)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
    if (!ok) continue;
    image[v] = w;
    extend_automorphism(g, image, static_cast<VertexSet>(used | (1U << w)), v + 1, out);
  }
}

}  // namespace

std::vector<Permutation> automorphisms(const SmallGraph& g) {
  std::vector<Permutation> out;
  Permutation image(g.vertex_count());
  extend_automorphism(g, image, 0, 0, out);
  return out;
}

}  // namespace flagcert

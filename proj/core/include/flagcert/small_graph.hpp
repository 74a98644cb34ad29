#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagcert {

/// Bitmask over vertices 0..15.
using VertexSet = std::uint16_t;

/// A permutation stored as position -> vertex.
using Permutation = std::vector<int>;

/// Simple undirected graph on at most 16 vertices, one adjacency bitset per
/// vertex. Vertices are 0-based internally; all text I/O is 1-based.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 16;

  SmallGraph() = default;
  /// Edgeless graph. Throws std::invalid_argument outside [0, 16].
  explicit SmallGraph(int vertex_count);
  /// Throws std::invalid_argument on loops, repeated edges or bad indices.
  SmallGraph(int vertex_count, std::span<const std::pair<int, int>> edges);

  static SmallGraph complete(int n);
  static SmallGraph cycle(int n);
  static SmallGraph path(int n);
  /// Rim cycle on 0..n-1 plus a hub n joined to every rim vertex.
  static SmallGraph wheel(int rim);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;
  int edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order, 0-based.
  std::vector<std::pair<int, int>> edges() const;

  void set_edge(int u, int v, bool present = true);

  SmallGraph complement() const;
  /// Result has result.adjacent(i, j) == adjacent(order[i], order[j]).
  SmallGraph permuted(std::span<const int> order) const;
  /// Subgraph induced on the listed vertices, renumbered in list order.
  SmallGraph induced(std::span<const int> vertices) const;
  /// Appends a vertex adjacent to the given set.
  SmallGraph with_vertex(VertexSet neighbors) const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

/// Error raised by the text parsers; carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Graph file format: first non-comment line is n; each following
/// non-comment line is "u v" with 1 <= u < v <= n. Lines whose first
/// non-blank character is '#' are comments.
SmallGraph parse_graph(std::string_view text);
std::string format_graph(const SmallGraph& g);

/// Inline edge list "1-2, 2-3" (1-based, may be empty).
std::vector<std::pair<int, int>> parse_edge_list(std::string_view text, int line = 0);
std::string format_edge_list(const SmallGraph& g);

/// Every permutation preserving adjacency, in lexicographic order.
/// Intended for graphs with at most 8 vertices.
std::vector<Permutation> automorphisms(const SmallGraph& g);

}  // namespace flagcert

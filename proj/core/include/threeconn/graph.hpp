#ifndef THREECONN_GRAPH_HPP
#define THREECONN_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace threeconn {

/// Stable error categories, attached to every exception the library throws.
enum class Errc {
  invalid_argument,
  loop_edge,
  duplicate_edge,
  missing_edge,
  vertex_out_of_range,
  order_too_small,
  order_too_large,
  malformed_graph6,
  invalid_sequence,
  fractional_edge_count,
  phi_out_of_range,
  not_three_connected,
  equal_edges,
  bound_exceeded,
  catalog_coverage,
  invalid_trace,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Undirected edge with endpoints normalised to u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex degrees in non-increasing order. The classification routines only
/// accept sequences whose terms are all positive; valid() reports that.
/// degree_sequence() may hand back sequences containing zeros (flagged
/// invalid) so callers can still inspect the raw degrees.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> terms);

  const std::vector<int>& terms() const noexcept { return terms_; }
  int length() const noexcept { return static_cast<int>(terms_.size()); }
  long long degree_sum() const noexcept;
  bool valid() const noexcept;  // non-empty and every term >= 1
  int max_term() const;         // s_1 (pre: non-empty)
  int min_term() const;         // s_n (pre: non-empty)

  std::string to_string() const;  // "5,5,3,3,3,3"
  static DegreeSequence parse(std::string_view text);

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> terms_;
};

/// Finite simple undirected graph on vertex labels 0..order-1. Graphs are
/// immutable values: every edit returns a new graph. The sorted edge list is
/// the defining datum; adjacency is mirrored in per-vertex bit rows for O(1)
/// membership tests.
class Graph {
 public:
  static constexpr int max_order = 62;  // single-byte graph6 header

  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  uint64_t neighbors(int v) const;
  int degree(int v) const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Replaces e by a two-edge path through a fresh vertex labelled order().
  /// Returns the edited graph together with the new vertex's label.
  std::pair<Graph, int> subdivide(Edge e) const;
  Graph complement() const;
  Graph relabeled(std::span<const int> permutation) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<uint64_t> adj_;
};

Graph complete_graph(int n);
DegreeSequence degree_sequence(const Graph& g);

}  // namespace threeconn

#endif  // THREECONN_GRAPH_HPP

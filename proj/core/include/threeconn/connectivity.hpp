#ifndef THREECONN_CONNECTIVITY_HPP
#define THREECONN_CONNECTIVITY_HPP

#include <optional>
#include <vector>

#include "threeconn/graph.hpp"

namespace threeconn {

/// oracle_connectivity refuses graphs above this order.
inline constexpr int max_oracle_order = 10;

/// A family of internally disjoint u-v paths, each listed from u to v.
struct PathsWitness {
  int u = 0;
  int v = 0;
  std::vector<std::vector<int>> paths;

  int count() const noexcept { return static_cast<int>(paths.size()); }
  /// Every path runs u..v through edges of g, no path repeats a vertex, and
  /// distinct paths share nothing but the two endpoints.
  bool structurally_valid(const Graph& g) const;
};

/// A separating vertex set (empty for a disconnected graph), sorted ascending.
struct CutWitness {
  std::vector<int> vertices;
};

bool is_connected(const Graph& g);  // pre: order >= 1

/// Maximum family of internally disjoint u-v paths, via unit-capacity
/// vertex-split max-flow. For adjacent u,v the direct edge counts as one path
/// on top of the flow in the graph without that edge.
PathsWitness max_disjoint_paths(const Graph& g, int u, int v);

/// Minimum over non-adjacent pairs of the disjoint-path count; complete
/// graphs have no such pair and use the order-minus-one convention.
int vertex_connectivity(const Graph& g);  // pre: order >= 2

/// Order at least 4 and connectivity at least 3.
bool is_3_connected(const Graph& g);

/// Smallest separating set of size <= limit, ties broken by the
/// lexicographically smallest vertex set; absent when none exists.
std::optional<CutWitness> find_small_cut(const Graph& g, int limit);

/// Independent connectivity oracle: tries every vertex subset as a separator
/// in increasing size order. Intentionally shares nothing with the flow
/// engine beyond the Graph accessors.
int oracle_connectivity(const Graph& g);  // pre: 1 <= order <= max_oracle_order

}  // namespace threeconn

#endif  // THREECONN_CONNECTIVITY_HPP

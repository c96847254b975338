#include "threeconn/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <set>

namespace threeconn {

namespace {

// Component count of the subgraph induced by the `alive` label mask.
int component_count(const Graph& g, uint64_t alive) {
  int components = 0;
  uint64_t unseen = alive;
  while (unseen != 0) {
    ++components;
    uint64_t frontier = unseen & -unseen;  // lowest unseen vertex
    unseen &= ~frontier;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= ~(uint64_t{1} << v);
      const uint64_t next = g.neighbors(v) & unseen;
      frontier |= next;
      unseen &= ~next;
    }
  }
  return components;
}

uint64_t full_mask(int n) { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

// Unit-capacity flow network with every vertex split into in/out halves.
// Node 2v is the in half, 2v+1 the out half. Arcs come in forward/backward
// pairs, so arc k^1 is the reverse of arc k.
struct SplitNetwork {
  std::vector<int> head;   // node -> first arc
  std::vector<int> next;   // arc  -> next arc at same node
  std::vector<int> to;     // arc  -> target node
  std::vector<int8_t> cap;

  explicit SplitNetwork(int nodes) : head(static_cast<size_t>(nodes), -1) {}

  void add_arc(int a, int b) {
    to.push_back(b);
    cap.push_back(1);
    next.push_back(head[static_cast<size_t>(a)]);
    head[static_cast<size_t>(a)] = static_cast<int>(to.size()) - 1;
    to.push_back(a);
    cap.push_back(0);
    next.push_back(head[static_cast<size_t>(b)]);
    head[static_cast<size_t>(b)] = static_cast<int>(to.size()) - 1;
  }

  // One round of breadth-first augmentation; true when a unit was pushed.
  bool augment(int source, int sink) {
    std::vector<int> parent_arc(head.size(), -1);
    std::vector<int> queue{source};
    parent_arc[static_cast<size_t>(source)] = -2;
    for (size_t at = 0; at < queue.size(); ++at) {
      const int node = queue[at];
      if (node == sink) break;
      for (int arc = head[static_cast<size_t>(node)]; arc != -1; arc = next[static_cast<size_t>(arc)]) {
        const int target = to[static_cast<size_t>(arc)];
        if (cap[static_cast<size_t>(arc)] > 0 && parent_arc[static_cast<size_t>(target)] == -1) {
          parent_arc[static_cast<size_t>(target)] = arc;
          queue.push_back(target);
        }
      }
    }
    if (parent_arc[static_cast<size_t>(sink)] == -1) return false;
    for (int node = sink; node != source;) {
      const int arc = parent_arc[static_cast<size_t>(node)];
      --cap[static_cast<size_t>(arc)];
      ++cap[static_cast<size_t>(arc ^ 1)];
      node = to[static_cast<size_t>(arc ^ 1)];
    }
    return true;
  }
};

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

// Max flow from out(u) to in(v), capped at max_value augmentations (callers
// that only need "is it below k" pass k). Optionally decomposes the flow into
// vertex families; a direct u-v edge must be removed by the caller first.
int split_flow(const Graph& g, int u, int v, std::vector<std::vector<int>>* paths_out,
               int max_value = INT_MAX) {
  SplitNetwork net(2 * g.order());
  for (int w = 0; w < g.order(); ++w) net.add_arc(in_node(w), out_node(w));
  for (const Edge& e : g.edges()) {
    net.add_arc(out_node(e.u), in_node(e.v));
    net.add_arc(out_node(e.v), in_node(e.u));
  }
  int value = 0;
  while (value < max_value && net.augment(out_node(u), in_node(v))) ++value;
  if (paths_out == nullptr) return value;

  // Each unit of flow leaves out(u) along a distinct saturated arc; walking
  // saturated forward arcs until in(v) recovers one path per unit. Unit vertex
  // capacities keep the walks vertex-disjoint and cycle-free.
  std::vector<bool> consumed(net.to.size(), false);
  paths_out->clear();
  for (int k = 0; k < value; ++k) {
    std::vector<int> path{u};
    int node = out_node(u);
    while (true) {
      int taken = -1;
      for (int arc = net.head[static_cast<size_t>(node)]; arc != -1;
           arc = net.next[static_cast<size_t>(arc)]) {
        if (arc % 2 == 0 && !consumed[static_cast<size_t>(arc)] &&
            net.cap[static_cast<size_t>(arc)] == 0) {
          taken = arc;
          break;
        }
      }
      if (taken == -1) {
        throw Error(Errc::invalid_argument, "flow decomposition invariant violated");
      }
      consumed[static_cast<size_t>(taken)] = true;
      node = net.to[static_cast<size_t>(taken)];  // always an in half
      if (node == in_node(v)) break;
      path.push_back(node / 2);
      node = out_node(node / 2);
    }
    path.push_back(v);
    paths_out->push_back(std::move(path));
  }
  return value;
}

}  // namespace

bool PathsWitness::structurally_valid(const Graph& g) const {
  uint64_t internal_seen = 0;
  int direct_edges = 0;
  for (const std::vector<int>& path : paths) {
    if (path.size() < 2 || path.front() != u || path.back() != v) return false;
    if (path.size() == 2) ++direct_edges;
    uint64_t here = 0;
    for (size_t k = 0; k < path.size(); ++k) {
      const int w = path[k];
      if (w < 0 || w >= g.order()) return false;
      if (k > 0 && !g.adjacent(path[k - 1], w)) return false;
      if (here >> w & 1) return false;  // repeated vertex within the path
      here |= uint64_t{1} << w;
    }
    const uint64_t internal = here & ~(uint64_t{1} << u) & ~(uint64_t{1} << v);
    if ((internal & internal_seen) != 0) return false;
    internal_seen |= internal;
  }
  return direct_edges <= 1;
}

bool is_connected(const Graph& g) {
  if (g.order() < 1) throw Error(Errc::order_too_small, "connectivity needs at least one vertex");
  return component_count(g, full_mask(g.order())) == 1;
}

PathsWitness max_disjoint_paths(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw Error(Errc::vertex_out_of_range, "path endpoints outside the vertex range");
  }
  if (u == v) throw Error(Errc::invalid_argument, "path endpoints must differ");
  PathsWitness witness;
  witness.u = u;
  witness.v = v;
  if (g.adjacent(u, v)) {
    split_flow(g.without_edge(u, v), u, v, &witness.paths);
    witness.paths.insert(witness.paths.begin(), {u, v});
  } else {
    split_flow(g, u, v, &witness.paths);
  }
  return witness;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(Errc::order_too_small, "vertex connectivity needs order >= 2");
  int best = INT_MAX;
  bool any_nonadjacent = false;
  for (int u = 0; u < n && best > 0; ++u) {
    for (int v = u + 1; v < n && best > 0; ++v) {
      if (g.adjacent(u, v)) continue;
      any_nonadjacent = true;
      // Flow larger than the running minimum cannot change it, so cap there.
      best = std::min(best, split_flow(g, u, v, nullptr, best));
    }
  }
  return any_nonadjacent ? best : n - 1;
}

bool is_3_connected(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 3) return false;  // connectivity never exceeds minimum degree
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      if (split_flow(g, u, v, nullptr, 3) < 3) return false;
    }
  }
  return true;  // no non-adjacent pair means complete, and order >= 4 suffices
}

std::optional<CutWitness> find_small_cut(const Graph& g, int limit) {
  const int n = g.order();
  if (n < 1) throw Error(Errc::order_too_small, "cut search needs at least one vertex");
  const uint64_t everyone = full_mask(n);
  // Sizes in increasing order; within a size, subsets in lexicographic order,
  // so the first hit is the smallest witness with the smallest labels.
  for (int k = 0; k <= std::min(limit, n - 2); ++k) {
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      uint64_t removed = 0;
      for (int w : pick) removed |= uint64_t{1} << w;
      if (component_count(g, everyone & ~removed) >= 2) {
        return CutWitness{pick};
      }
      // next k-combination of 0..n-1 in lexicographic order
      int slot = k - 1;
      while (slot >= 0 && pick[static_cast<size_t>(slot)] == n - k + slot) --slot;
      if (slot < 0) break;
      ++pick[static_cast<size_t>(slot)];
      for (int s = slot + 1; s < k; ++s) {
        pick[static_cast<size_t>(s)] = pick[static_cast<size_t>(s - 1)] + 1;
      }
    }
  }
  return std::nullopt;
}

int oracle_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw Error(Errc::order_too_small, "oracle needs at least one vertex");
  if (n > max_oracle_order) {
    throw Error(Errc::order_too_large, "oracle bound is order " + std::to_string(max_oracle_order));
  }
  const auto cut = find_small_cut(g, n - 2);
  return cut ? static_cast<int>(cut->vertices.size()) : n - 1;
}

}  // namespace threeconn

#include "threeconn/bg_ops.hpp"

#include <algorithm>

#include "threeconn/connectivity.hpp"

namespace threeconn {

namespace {

void require_3connected(const Graph& g) {
  if (!is_3_connected(g)) {
    throw Error(Errc::not_three_connected, "operation input must be 3-connected");
  }
}

// The edits behind the operations, without the 3-connectivity precondition
// check; enumeration validates each expansion source once instead of once per
// generated step.
Graph edit_op01(const Graph& g, int a, int b) { return g.with_edge(a, b); }

Graph edit_op12(const Graph& g, Edge xy, int attach) {
  auto [subdivided, fresh] = g.subdivide(xy);
  return subdivided.with_edge(fresh, attach);
}

Graph edit_op23(const Graph& g, Edge e1, Edge e2) {
  auto [once, fresh1] = g.subdivide(e1);
  auto [twice, fresh2] = once.subdivide(e2);
  return twice.with_edge(fresh1, fresh2);
}

void check_op12_args(const Graph& g, Edge xy, int attach) {
  if (!g.has_edge(xy)) {
    throw Error(Errc::missing_edge, "edge to subdivide is not present");
  }
  if (attach < 0 || attach >= g.order()) {
    throw Error(Errc::vertex_out_of_range, "attachment vertex outside the graph");
  }
  if (attach == xy.u || attach == xy.v) {
    throw Error(Errc::invalid_argument,
                "attachment vertex must avoid the subdivided edge's endpoints");
  }
}

void check_op23_args(const Graph& g, Edge e1, Edge e2) {
  if (e1 == e2) throw Error(Errc::equal_edges, "the two subdivided edges must differ");
  if (!g.has_edge(e1) || !g.has_edge(e2)) {
    throw Error(Errc::missing_edge, "edge to subdivide is not present");
  }
}

}  // namespace

Graph apply_op01(const Graph& g, int a, int b) {
  // with_edge reports range, loop and already-present violations itself
  require_3connected(g);
  return edit_op01(g, a, b);
}

Graph apply_op12(const Graph& g, Edge xy, int attach) {
  check_op12_args(g, xy, attach);
  require_3connected(g);
  return edit_op12(g, xy, attach);
}

Graph apply_op23(const Graph& g, Edge e1, Edge e2) {
  check_op23_args(g, e1, e2);
  require_3connected(g);
  return edit_op23(g, e1, e2);
}

Graph apply_step(const Graph& g, const BgStep& step) {
  return std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, Op01>) {
          return apply_op01(g, op.a, op.b);
        } else if constexpr (std::is_same_v<T, Op12>) {
          return apply_op12(g, op.target, op.attach);
        } else {
          return apply_op23(g, op.first, op.second);
        }
      },
      step.op);
}

Graph replay_trace(const BgTrace& trace) {
  Graph g = complete_graph(4);
  for (size_t at = 0; at < trace.steps.size(); ++at) {
    try {
      g = apply_step(g, trace.steps[at]);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(at) + ": " + e.what());
    }
  }
  return g;
}

std::vector<Successor> successors(const Graph& g, int max_result_order) {
  if (g.order() > max_enumeration_order) {
    throw Error(Errc::bound_exceeded,
                "successor generation is bounded at order " +
                    std::to_string(max_enumeration_order));
  }
  require_3connected(g);

  const int n = g.order();
  std::map<CanonicalCode, BgStep> found;
  auto record = [&](const BgStep& step, const Graph& result) {
    found.try_emplace(canonical_code(result), step);
  };

  if (n <= max_result_order) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (g.adjacent(a, b)) continue;
        record({Op01{a, b}}, edit_op01(g, a, b));
      }
    }
  }
  if (n + 1 <= max_result_order) {
    for (const Edge& xy : g.edges()) {
      for (int attach = 0; attach < n; ++attach) {
        if (attach == xy.u || attach == xy.v) continue;
        record({Op12{xy, attach}}, edit_op12(g, xy, attach));
      }
    }
  }
  if (n + 2 <= max_result_order) {
    const std::vector<Edge>& edges = g.edges();
    for (size_t x = 0; x < edges.size(); ++x) {
      for (size_t y = x + 1; y < edges.size(); ++y) {
        record({Op23{edges[x], edges[y]}}, edit_op23(g, edges[x], edges[y]));
      }
    }
  }

  std::vector<Successor> out;
  out.reserve(found.size());
  for (const auto& [code, step] : found) out.push_back({step, code});
  return out;
}

bool Catalog::insert(const CanonicalCode& code) {
  return cells_[cell_of(code)].insert(code).second;
}

bool Catalog::contains(const CanonicalCode& code) const {
  const auto at = cells_.find(cell_of(code));
  return at != cells_.end() && at->second.contains(code);
}

std::vector<CanonicalCode> Catalog::codes_in_cell(const MatrixIndex& idx) const {
  const auto at = cells_.find(idx);
  if (at == cells_.end()) return {};
  return {at->second.begin(), at->second.end()};
}

std::vector<CanonicalCode> Catalog::codes_of_order(int order) const {
  std::vector<CanonicalCode> out;
  for (const auto& [idx, codes] : cells_) {
    if (idx.j + 4 == order) out.insert(out.end(), codes.begin(), codes.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long Catalog::class_count() const {
  long long total = 0;
  for (const auto& [idx, codes] : cells_) total += static_cast<long long>(codes.size());
  return total;
}

std::map<int, long long> Catalog::counts_by_order() const {
  std::map<int, long long> out;
  for (const auto& [idx, codes] : cells_) {
    out[static_cast<int>(idx.j) + 4] += static_cast<long long>(codes.size());
  }
  return out;
}

MatrixIndex cell_of(const CanonicalCode& code) {
  const long long j = code.order - 4;
  return {code_size(code) - 3 * j - 6, j};
}

Catalog enumerate_3connected(int max_order) {
  if (max_order < 4 || max_order > max_enumeration_order) {
    throw Error(Errc::bound_exceeded, "enumeration bound must lie in 4.." +
                                          std::to_string(max_enumeration_order));
  }
  Catalog catalog(max_order);
  catalog.insert(canonical_code(complete_graph(4)));
  // Every operation moves a graph strictly later in the column-major cell
  // order, so a single in-order sweep of the growing cell map expands each
  // class exactly once. Map iterators survive the insertions, and no
  // operation ever inserts into the cell currently being walked.
  const Catalog::CellMap& cells = catalog.cells();
  for (auto at = cells.begin(); at != cells.end(); ++at) {
    for (const CanonicalCode& code : at->second) {
      const Graph parent = decode(code);
      for (const Successor& next : successors(parent, max_order)) {
        catalog.insert(next.code);
      }
    }
  }
  return catalog;
}

namespace {

// Can a graph in `from` still reach `to` using the three index deltas? The
// column gap dj must be bridged by b subdivision ops and c double-subdivision
// ops with b + 2c = dj, and the row gap then needs a = di + dj + c additions,
// all counts non-negative.
bool cell_can_reach(const MatrixIndex& from, const MatrixIndex& to) {
  const long long dj = to.j - from.j;
  const long long di = to.i - from.i;
  if (dj < 0) return false;
  const long long c_min = std::max<long long>(0, -(di + dj));
  return c_min <= dj / 2;
}

}  // namespace

BgTrace find_trace(const Graph& g) {
  if (g.order() > max_enumeration_order) {
    throw Error(Errc::bound_exceeded, "trace search is bounded at order " +
                                          std::to_string(max_enumeration_order));
  }
  if (!is_3_connected(g)) {
    throw Error(Errc::not_three_connected, "only 3-connected graphs have a trace");
  }

  const CanonicalCode target = canonical_code(g);
  const MatrixIndex target_cell = cell_of(target);
  const Graph root = complete_graph(4);
  const CanonicalCode root_code = canonical_code(root);

  struct Node {
    CanonicalCode parent;
    BgStep step;
    Graph reached;  // exactly the graph a replay of the steps so far builds
  };
  std::map<CanonicalCode, Node> visited;
  visited.try_emplace(root_code, Node{root_code, BgStep{}, root});

  const int target_order = static_cast<int>(cell_parameters(target_cell).order);
  auto build_trace = [&](const CanonicalCode& at) {
    BgTrace trace;
    for (CanonicalCode code = at; code != root_code;) {
      const Node& node = visited.at(code);
      trace.steps.push_back(node.step);
      code = node.parent;
    }
    std::reverse(trace.steps.begin(), trace.steps.end());
    return trace;
  };

  if (target == root_code) return {};

  // Same in-order sweep as the full enumeration, pruned to cells that can
  // still reach the target with the available deltas.
  std::map<MatrixIndex, std::set<CanonicalCode>> frontier;
  frontier[cell_of(root_code)].insert(root_code);
  for (auto cell = frontier.begin(); cell != frontier.end(); ++cell) {
    for (const CanonicalCode& code : cell->second) {
      const Graph& parent = visited.at(code).reached;
      for (const Successor& next : successors(parent, target_order)) {
        if (!cell_can_reach(cell_of(next.code), target_cell)) continue;
        if (!visited.try_emplace(next.code,
                                 Node{code, next.step, apply_step(parent, next.step)})
                 .second) {
          continue;
        }
        if (next.code == target) return build_trace(target);
        frontier[cell_of(next.code)].insert(next.code);
      }
    }
  }
  throw Error(Errc::invalid_argument, "no construction sequence found");
}

}  // namespace threeconn

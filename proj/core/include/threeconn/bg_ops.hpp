#ifndef THREECONN_BG_OPS_HPP
#define THREECONN_BG_OPS_HPP

#include <map>
#include <set>
#include <variant>
#include <vector>

#include "threeconn/canonical.hpp"
#include "threeconn/graph.hpp"
#include "threeconn/partition_matrix.hpp"

namespace threeconn {

/// Enumeration, trace search and the operation preconditions all cap graph
/// orders here: results may gain two vertices and still need canonicalizing.
inline constexpr int max_enumeration_order = 8;

/// One Barnette-Grünbaum construction step. Arguments always refer to the
/// labels of the graph the step is applied to; subdivision vertices are
/// labelled in application order starting at that graph's order.
struct Op01 {
  int a = 0;  // add the missing edge (a, b)
  int b = 0;
};
struct Op12 {
  Edge target;     // subdivide this edge ...
  int attach = 0;  // ... and join the fresh vertex to this one
};
struct Op23 {
  Edge first;   // subdivide both edges (first gets the lower fresh label)
  Edge second;  // and join the two fresh vertices
};

struct BgStep {
  std::variant<Op01, Op12, Op23> op;

  BgKind kind() const noexcept {
    return static_cast<BgKind>(op.index());
  }
};

/// Adds the absent edge (a, b). Pre: g 3-connected.
Graph apply_op01(const Graph& g, int a, int b);

/// Subdivides xy and joins the fresh vertex to attach (distinct from x, y).
/// Pre: g 3-connected.
Graph apply_op12(const Graph& g, Edge xy, int attach);

/// Subdivides two distinct edges and joins the two fresh vertices.
/// Pre: g 3-connected.
Graph apply_op23(const Graph& g, Edge e1, Edge e2);

Graph apply_step(const Graph& g, const BgStep& step);

/// A construction sequence meant to be replayed from the complete graph K4.
struct BgTrace {
  std::vector<BgStep> steps;
};

/// Applies the steps in order starting from K4. The first step whose
/// preconditions fail is reported by position.
Graph replay_trace(const BgTrace& trace);

struct Successor {
  BgStep step;
  CanonicalCode code;
};

/// Every legal operation on g, deduplicated by the canonical code of the
/// result; the step kept for a code is the first one producing it when ops
/// are tried as (0,1), (1,2), (2,3) with arguments in lexicographic order.
/// Results whose order would exceed max_result_order are skipped.
/// Pre: g 3-connected, order <= max_enumeration_order.
std::vector<Successor> successors(const Graph& g,
                                  int max_result_order = max_canonical_order);

/// Isomorphism classes of 3-connected graphs grouped into grid cells. Every
/// member is reachable from K4, each cell's codes are unique and sorted, and
/// the cell address always matches the member's order and size.
class Catalog {
 public:
  using CellMap = std::map<MatrixIndex, std::set<CanonicalCode>>;

  Catalog() = default;
  explicit Catalog(int max_order) : max_order_(max_order) {}

  int max_order() const noexcept { return max_order_; }
  const CellMap& cells() const noexcept { return cells_; }

  /// Files the code under the cell determined by its order and size.
  /// Returns false when the code was already present.
  bool insert(const CanonicalCode& code);
  bool contains(const CanonicalCode& code) const;
  std::vector<CanonicalCode> codes_in_cell(const MatrixIndex& idx) const;
  /// All codes in one column, sorted by code.
  std::vector<CanonicalCode> codes_of_order(int order) const;
  long long class_count() const;
  std::map<int, long long> counts_by_order() const;

 private:
  int max_order_ = 0;
  CellMap cells_;
};

MatrixIndex cell_of(const CanonicalCode& code);

/// Breadth-first closure of {K4} under the three operations, cells processed
/// column-major and codes in ascending order. Pre: 4 <= max_order <= 8.
Catalog enumerate_3connected(int max_order);

/// A construction sequence for g: breadth-first search from K4 over the cells
/// that lie on a monotone delta-path to g's cell, matching by canonical code.
/// The returned trace is the first one breadth-first order finds; replaying
/// it yields a graph isomorphic to g. Pre: g 3-connected, order <= 8.
BgTrace find_trace(const Graph& g);

}  // namespace threeconn

#endif  // THREECONN_BG_OPS_HPP

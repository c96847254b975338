#ifndef THREECONN_ORACLE_HPP
#define THREECONN_ORACLE_HPP

#include <array>
#include <cstdint>
#include <set>
#include <utility>

#include "threeconn/canonical.hpp"
#include "threeconn/graph.hpp"

namespace threeconn::oracle {

/// Exhaustive small-order machinery. Labelled graphs on n <= 8 vertices are
/// edge-subset masks: bit t stands for the t-th vertex pair in column-major
/// order — (0,1), (0,2), (1,2), (0,3), ... — the same slot order the
/// canonical codes and graph6 use. Everything here is deliberately
/// independent of the flow engine and of the construction operations it is
/// used to cross-check; only the canonicalizer is shared.

inline constexpr int max_mask_order = 8;

/// Pair of slot t (valid for every order, since the slot sequence of a
/// smaller order is a prefix of a larger one's).
std::pair<int, int> slot_pair(int t);

/// Mask with one bit per vertex pair of an order-n graph.
uint32_t pair_mask(int n);

/// Per-vertex adjacency bit rows of a mask graph.
std::array<uint16_t, 8> rows_from_mask(int n, uint32_t mask);

/// Adds each edge of the mask to the two endpoint degrees.
void accumulate_degrees(int n, uint32_t mask, std::array<int, 8>& degree);

Graph graph_from_mask(int n, uint32_t mask);
uint32_t mask_from_graph(const Graph& g);

/// Induced subgraph on `alive` connected (and non-empty)?
bool mask_connected(int n, const std::array<uint16_t, 8>& rows, uint16_t alive);

/// Order >= 4, minimum degree >= 3, connected, and no removal of one or two
/// vertices disconnects the rest.
bool mask_is_3connected(int n, uint32_t mask);

/// Canonical codes of every 3-connected isomorphism class of the given
/// order, by scanning all labelled graphs. Pre: 4 <= order <= 7 (the scan is
/// 2^C(order,2) masks).
std::set<CanonicalCode> all_3connected_codes(int order);

/// All k-subsets of m slots, as masks in increasing numeric order.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(uint32_t{0});
    return;
  }
  const uint32_t limit = uint32_t{1} << m;
  uint32_t mask = (uint32_t{1} << k) - 1;
  while (mask < limit) {
    fn(mask);
    const uint32_t low = mask & -mask;         // Gosper's hack
    const uint32_t carry = mask + low;
    mask = carry | ((mask ^ carry) >> 2) / low;
  }
}

}  // namespace threeconn::oracle

#endif  // THREECONN_ORACLE_HPP

#ifndef THREECONN_CANONICAL_HPP
#define THREECONN_CANONICAL_HPP

#include <compare>
#include <cstdint>

#include "threeconn/graph.hpp"

namespace threeconn {

/// Isomorphism-sensitive routines refuse graphs above this order.
inline constexpr int max_canonical_order = 10;

/// Relabelling-invariant identifier of an isomorphism class: the
/// lexicographically smallest upper-triangle adjacency bit string over all
/// vertex orderings. Pairs run column-major — (0,1), (0,2), (1,2), (0,3), ...
/// — with the first pair in the most significant bit. That is the same bit
/// order graph6 uses, so a code doubles as a ready-made graph6 payload.
struct CanonicalCode {
  int order = 0;
  uint64_t bits = 0;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Graph& g, int order_bound = max_canonical_order);

/// The canonical representative: a labelled graph whose adjacency bits equal
/// the code exactly.
Graph decode(const CanonicalCode& code);

bool isomorphic(const Graph& a, const Graph& b, int order_bound = max_canonical_order);

/// Edge count encoded in the code (its popcount).
int code_size(const CanonicalCode& code);

}  // namespace threeconn

#endif  // THREECONN_CANONICAL_HPP

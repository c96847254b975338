#include "threeconn/canonical.hpp"

#include <array>
#include <bit>
#include <vector>

namespace threeconn {

namespace {

/// Branch-and-bound search for the lexicographically smallest adjacency bit
/// string. Vertices are assigned to canonical positions one at a time; placing
/// position k fixes exactly the bits of column k (the pairs (0,k)..(k-1,k)),
/// so a partial assignment determines a prefix of the final string and any
/// branch whose prefix already exceeds the incumbent can be cut.
struct MinCodeSearch {
  int n = 0;
  int total_bits = 0;
  std::array<uint16_t, max_canonical_order> rows{};
  std::array<int, max_canonical_order> perm{};
  uint64_t best = 0;

  // Transposing a and b is an automorphism exactly when their neighbourhoods
  // agree once each other is masked out; such twins generate identical
  // subtrees, so only the first of each twin group is branched on.
  bool twins(int a, int b) const {
    return (rows[static_cast<size_t>(a)] & ~(uint16_t{1} << b)) ==
           (rows[static_cast<size_t>(b)] & ~(uint16_t{1} << a));
  }

  void dfs(int depth, uint64_t prefix, uint16_t used) {
    if (depth == n) {
      if (prefix < best) best = prefix;
      return;
    }
    const int width = depth * (depth + 1) / 2;  // bits known after this column
    for (int cand = 0; cand < n; ++cand) {
      if (used >> cand & 1) continue;
      bool duplicate = false;
      for (int prev = 0; prev < cand && !duplicate; ++prev) {
        if (!(used >> prev & 1) && twins(prev, cand)) duplicate = true;
      }
      if (duplicate) continue;
      uint64_t column = 0;
      for (int p = 0; p < depth; ++p) {
        column = column << 1 | (rows[static_cast<size_t>(cand)] >> perm[static_cast<size_t>(p)] & 1);
      }
      const uint64_t next = prefix << depth | column;
      if (next > best >> (total_bits - width)) continue;
      perm[static_cast<size_t>(depth)] = cand;
      dfs(depth + 1, next, static_cast<uint16_t>(used | uint16_t{1} << cand));
    }
  }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g, int order_bound) {
  if (order_bound > max_canonical_order) {
    throw Error(Errc::invalid_argument, "canonical order bound above supported maximum");
  }
  const int n = g.order();
  if (n > order_bound) {
    throw Error(Errc::order_too_large,
                "order " + std::to_string(n) + " above canonicalization bound " +
                    std::to_string(order_bound));
  }
  if (n <= 1) return {n, 0};

  MinCodeSearch search;
  search.n = n;
  search.total_bits = n * (n - 1) / 2;
  for (int v = 0; v < n; ++v) {
    search.rows[static_cast<size_t>(v)] = static_cast<uint16_t>(g.neighbors(v));
  }
  // Seed the incumbent with the identity labelling so every comparison during
  // the search is against an achievable value.
  uint64_t identity = 0;
  for (int q = 1; q < n; ++q) {
    for (int p = 0; p < q; ++p) {
      identity = identity << 1 | (search.rows[static_cast<size_t>(p)] >> q & 1);
    }
  }
  search.best = identity;
  search.dfs(0, 0, 0);
  return {n, search.best};
}

Graph decode(const CanonicalCode& code) {
  const int n = code.order;
  if (n < 0 || n > max_canonical_order) {
    throw Error(Errc::order_too_large, "code order outside supported range");
  }
  const int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int t = 0;
  for (int q = 1; q < n; ++q) {
    for (int p = 0; p < q; ++p, ++t) {
      if (code.bits >> (total - 1 - t) & 1) edges.emplace_back(p, q);
    }
  }
  return Graph(n, edges);
}

bool isomorphic(const Graph& a, const Graph& b, int order_bound) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a, order_bound) == canonical_code(b, order_bound);
}

int code_size(const CanonicalCode& code) { return std::popcount(code.bits); }

}  // namespace threeconn

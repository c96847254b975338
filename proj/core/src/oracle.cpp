#include "threeconn/oracle.hpp"

#include <bit>
#include <vector>

namespace threeconn::oracle {

namespace {

constexpr int max_slots = 45;  // C(10,2), enough for every canonicalizable order

constexpr std::array<std::pair<int, int>, max_slots> make_slot_pairs() {
  std::array<std::pair<int, int>, max_slots> pairs{};
  int t = 0;
  for (int q = 1; t < max_slots; ++q) {
    for (int p = 0; p < q && t < max_slots; ++p) pairs[static_cast<size_t>(t++)] = {p, q};
  }
  return pairs;
}

constexpr auto slot_pairs = make_slot_pairs();

}  // namespace

std::pair<int, int> slot_pair(int t) {
  if (t < 0 || t >= max_slots) {
    throw Error(Errc::invalid_argument, "pair slot outside supported range");
  }
  return slot_pairs[static_cast<size_t>(t)];
}

uint32_t pair_mask(int n) {
  if (n < 0 || n > max_mask_order) {
    throw Error(Errc::order_too_large, "mask graphs support orders up to " +
                                           std::to_string(max_mask_order));
  }
  return (uint32_t{1} << (n * (n - 1) / 2)) - 1;
}

std::array<uint16_t, 8> rows_from_mask(int /*n*/, uint32_t mask) {
  std::array<uint16_t, 8> rows{};
  while (mask != 0) {
    const int t = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [p, q] = slot_pairs[static_cast<size_t>(t)];
    rows[static_cast<size_t>(p)] |= uint16_t{1} << q;
    rows[static_cast<size_t>(q)] |= uint16_t{1} << p;
  }
  return rows;
}

void accumulate_degrees(int /*n*/, uint32_t mask, std::array<int, 8>& degree) {
  while (mask != 0) {
    const int t = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [p, q] = slot_pairs[static_cast<size_t>(t)];
    ++degree[static_cast<size_t>(p)];
    ++degree[static_cast<size_t>(q)];
  }
}

Graph graph_from_mask(int n, uint32_t mask) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(std::popcount(mask)));
  while (mask != 0) {
    const int t = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [p, q] = slot_pairs[static_cast<size_t>(t)];
    edges.emplace_back(p, q);
  }
  return Graph(n, edges);
}

uint32_t mask_from_graph(const Graph& g) {
  if (g.order() > max_mask_order) {
    throw Error(Errc::order_too_large, "mask graphs support orders up to " +
                                           std::to_string(max_mask_order));
  }
  uint32_t mask = 0;
  int t = 0;
  for (int q = 1; q < g.order(); ++q) {
    for (int p = 0; p < q; ++p, ++t) {
      if (g.adjacent(p, q)) mask |= uint32_t{1} << t;
    }
  }
  return mask;
}

bool mask_connected(int /*n*/, const std::array<uint16_t, 8>& rows, uint16_t alive) {
  if (alive == 0) return false;
  uint16_t seen = static_cast<uint16_t>(alive & -alive);
  uint16_t frontier = seen;
  while (frontier != 0) {
    const int v = std::countr_zero(frontier);
    frontier = static_cast<uint16_t>(frontier & ~(uint16_t{1} << v));
    const uint16_t next = static_cast<uint16_t>(rows[static_cast<size_t>(v)] & alive & ~seen);
    seen |= next;
    frontier |= next;
  }
  return seen == alive;
}

bool mask_is_3connected(int n, uint32_t mask) {
  if (n < 4) return false;
  const auto rows = rows_from_mask(n, mask);
  for (int v = 0; v < n; ++v) {
    if (std::popcount(rows[static_cast<size_t>(v)]) < 3) return false;
  }
  const uint16_t everyone = static_cast<uint16_t>((1 << n) - 1);
  if (!mask_connected(n, rows, everyone)) return false;
  for (int a = 0; a < n; ++a) {
    const uint16_t without_a = static_cast<uint16_t>(everyone & ~(1 << a));
    if (!mask_connected(n, rows, without_a)) return false;
    for (int b = a + 1; b < n; ++b) {
      if (!mask_connected(n, rows, static_cast<uint16_t>(without_a & ~(1 << b)))) {
        return false;
      }
    }
  }
  return true;
}

std::set<CanonicalCode> all_3connected_codes(int order) {
  if (order < 4 || order > 7) {
    throw Error(Errc::bound_exceeded, "exhaustive scan supports orders 4..7");
  }
  const int min_size = (3 * order + 1) / 2;
  std::set<CanonicalCode> codes;
  for (uint32_t mask = 0; mask <= pair_mask(order); ++mask) {
    if (std::popcount(mask) < min_size) continue;
    if (!mask_is_3connected(order, mask)) continue;
    codes.insert(canonical_code(graph_from_mask(order, mask)));
  }
  return codes;
}

}  // namespace threeconn::oracle

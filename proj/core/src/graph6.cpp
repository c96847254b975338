#include "threeconn/graph6.hpp"

#include <vector>

namespace threeconn {

namespace {

[[noreturn]] void fail(const std::string& what, size_t offset) {
  throw Error(Errc::malformed_graph6, what + " (offset " + std::to_string(offset) + ")");
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int q = 1; q < n; ++q) {
    for (int p = 0; p < q; ++p) {
      acc = acc << 1 | (g.adjacent(p, q) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) fail("empty graph6 text", 0);
  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw Error(Errc::order_too_large, "multi-byte graph6 order not supported (offset 0)");
  }
  if (header < 63 || header > 126) fail("order byte outside graph6 range", 0);
  const int n = header - 63;
  const int total = n * (n - 1) / 2;
  const size_t expected = 1 + static_cast<size_t>((total + 5) / 6);
  if (text.size() < expected) fail("truncated graph6 text", text.size());
  if (text.size() > expected) fail("trailing bytes after graph6 payload", expected);

  std::vector<Edge> edges;
  int t = 0;
  for (int q = 1; q < n; ++q) {
    for (int p = 0; p < q; ++p, ++t) {
      const size_t at = 1 + static_cast<size_t>(t / 6);
      const unsigned char byte = static_cast<unsigned char>(text[at]);
      if (byte < 63 || byte > 126) fail("payload byte outside graph6 range", at);
      if ((byte - 63) >> (5 - t % 6) & 1) edges.emplace_back(p, q);
    }
  }
  // Unused low bits of the final byte must be zero for the form to be
  // canonical, which keeps decode a strict inverse of encode.
  if (total % 6 != 0) {
    const size_t at = expected - 1;
    const int pad = 6 - total % 6;
    const int mask = (1 << pad) - 1;
    if (((static_cast<unsigned char>(text[at]) - 63) & mask) != 0) {
      fail("non-zero graph6 padding bits", at);
    }
  }
  return Graph(n, edges);
}

}  // namespace threeconn

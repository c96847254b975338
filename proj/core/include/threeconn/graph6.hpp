#ifndef THREECONN_GRAPH6_HPP
#define THREECONN_GRAPH6_HPP

#include <string>
#include <string_view>

#include "threeconn/graph.hpp"

namespace threeconn {

/// Canonical single-byte-header graph6: byte order+63, then the column-major
/// upper-triangle adjacency bits packed most-significant-first into 6-bit
/// chunks, each offset by 63. Supports orders 0..62.
std::string graph6_encode(const Graph& g);

/// Strict decoder: rejects empty input, out-of-range bytes, wrong length and
/// non-zero padding, reporting the byte offset of the problem. Inverse of
/// graph6_encode on its entire range.
Graph graph6_decode(std::string_view text);

}  // namespace threeconn

#endif  // THREECONN_GRAPH6_HPP

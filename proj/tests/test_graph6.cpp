#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "generate_all.hpp"

#include <threeconn/graph.hpp>
#include <threeconn/graph6.hpp>

using namespace threeconn;

namespace {

bool decode_fails(const std::string& text) {
  try {
    graph6_decode(text);
  } catch (const Error& e) {
    return e.code() == Errc::malformed_graph6;
  }
  return false;
}

}  // namespace

TEST_CASE("known encodings") {
  // Values cross-checked against the format definition: 63+order header byte,
  // then the upper triangle column by column, six bits per byte, zero padded.
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_encode(Graph(5)) == "D??");
  CHECK(graph6_encode(complete_graph(2)) == "A_");

  CHECK(graph6_decode("C~") == complete_graph(4));
  CHECK(graph6_decode("A_") == complete_graph(2));
  CHECK(graph6_decode("@") == Graph(1));
}

TEST_CASE("encode then decode is the identity on every small class") {
  const auto classes = testutil::all_graphs_up_to(6);
  for (const auto& [order, graphs] : classes)
    for (const Graph& g : graphs) {
      const std::string text = graph6_encode(g);
      CHECK(graph6_decode(text) == g);
    }
}

TEST_CASE("encode then decode is the identity on random larger graphs") {
  std::mt19937 rng(424242);
  for (int order = 7; order <= Graph::max_order; order += 5) {
    std::bernoulli_distribution coin(0.3);
    std::vector<Edge> edges;
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g(order, edges);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("malformed inputs are rejected with the dedicated error code") {
  CHECK(decode_fails(""));
  CHECK(decode_fails("C"));      // truncated: order 4 needs one payload byte
  CHECK(decode_fails("C~~"));    // trailing garbage
  CHECK(decode_fails("C\x01"));  // byte below the printable graph6 range
  CHECK(decode_fails("\x7f~"));  // header above the printable graph6 range
  CHECK(decode_fails("C~ "));
}

TEST_CASE("padding bits must be zero") {
  // Order 2 uses one payload byte carrying a single meaningful bit; a byte
  // with stray low bits set is not produced by any encoder.
  CHECK_FALSE(decode_fails("A_"));
  CHECK(decode_fails("A`"));
}

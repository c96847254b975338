#include <algorithm>
#include <functional>
#include <vector>

#include "doctest.h"

#include <threeconn/graph.hpp>

using namespace threeconn;

namespace {

bool throws_code(Errc expected, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == expected;
  }
  return false;
}

}  // namespace

TEST_CASE("edges normalise their endpoints") {
  const Edge e(3, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 3);
  CHECK(Edge(1, 3) == Edge(3, 1));
  CHECK(Edge(0, 1) < Edge(0, 2));
  CHECK(Edge(0, 2) < Edge(1, 2));
  CHECK(throws_code(Errc::loop_edge, [] { Edge(2, 2); }));
}

TEST_CASE("graph construction validates its input") {
  CHECK(throws_code(Errc::invalid_argument, [] { Graph(-1); }));
  CHECK(throws_code(Errc::order_too_large, [] { Graph(Graph::max_order + 1); }));
  CHECK(Graph(0).order() == 0);
  CHECK(Graph(Graph::max_order).order() == Graph::max_order);

  const std::vector<Edge> edges{Edge(0, 1), Edge(1, 2)};
  const Graph g(3, edges);
  CHECK(g.size() == 2);
  CHECK(throws_code(Errc::vertex_out_of_range, [] {
    const std::vector<Edge> bad{Edge(0, 3)};
    Graph(3, bad);
  }));
  CHECK(throws_code(Errc::duplicate_edge, [] {
    const std::vector<Edge> bad{Edge(0, 1), Edge(1, 0)};
    Graph(2, bad);
  }));
}

TEST_CASE("adjacency is symmetric and mirrors the edge list") {
  const Graph g = complete_graph(5).without_edge(1, 3);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK_FALSE(g.adjacent(3, 1));
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(0) == 4);
  for (const Edge& e : g.edges()) {
    CHECK(g.adjacent(e.u, e.v));
    CHECK(g.adjacent(e.v, e.u));
    CHECK(g.has_edge(e));
  }
  // neighbors() is the bit-row mirror of the edge list.
  for (int v = 0; v < g.order(); ++v) {
    int bits = 0;
    for (int u = 0; u < g.order(); ++u)
      if (g.neighbors(v) >> u & 1) {
        ++bits;
        CHECK(g.adjacent(u, v));
      }
    CHECK(bits == g.degree(v));
  }
}

TEST_CASE("edits return new graphs and validate") {
  const Graph g = Graph(3, std::vector<Edge>{Edge(0, 1)});
  const Graph g2 = g.with_edge(1, 2);
  CHECK(g.size() == 1);  // original untouched
  CHECK(g2.size() == 2);
  CHECK(throws_code(Errc::duplicate_edge, [&] { g.with_edge(0, 1); }));
  CHECK(throws_code(Errc::missing_edge, [&] { g.without_edge(0, 2); }));
  CHECK(g2.without_edge(0, 1).size() == 1);
}

TEST_CASE("subdivision replaces an edge by a two-edge path") {
  const Graph k4 = complete_graph(4);
  const auto [g, fresh] = k4.subdivide(Edge(1, 2));
  CHECK(fresh == 4);
  CHECK(g.order() == 5);
  CHECK(g.size() == 7);
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.adjacent(1, fresh));
  CHECK(g.adjacent(2, fresh));
  CHECK(g.degree(fresh) == 2);
  CHECK(throws_code(Errc::missing_edge, [&] { g.subdivide(Edge(1, 2)); }));
}

TEST_CASE("complement and relabeling") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.complement().size() == 0);
  const Graph c4(4, std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)});
  CHECK(c4.complement().size() == 2);
  CHECK(c4.complement().complement() == c4);

  const std::vector<int> perm{2, 0, 3, 1};
  const Graph r = c4.relabeled(perm);
  CHECK(r.order() == 4);
  CHECK(r.size() == 4);
  for (const Edge& e : c4.edges()) CHECK(r.adjacent(perm[e.u], perm[e.v]));
  CHECK(throws_code(Errc::invalid_argument, [&] {
    c4.relabeled(std::vector<int>{0, 0, 1, 2});  // not a permutation
  }));
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(1).size() == 0);
  CHECK(complete_graph(4).size() == 6);
  CHECK(complete_graph(8).size() == 28);
  for (int v = 0; v < 8; ++v) CHECK(complete_graph(8).degree(v) == 7);
}

TEST_CASE("degree sequences sort non-increasing and validate") {
  const Graph star(4, std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  const DegreeSequence s = degree_sequence(star);
  CHECK(s.terms() == std::vector<int>{3, 1, 1, 1});
  CHECK(s.length() == 4);
  CHECK(s.degree_sum() == 6);
  CHECK(s.max_term() == 3);
  CHECK(s.min_term() == 1);
  CHECK(s.valid());

  // Isolated vertices surface as zeros, flagged invalid but inspectable.
  const DegreeSequence with_zero = degree_sequence(Graph(2));
  CHECK(with_zero.terms() == std::vector<int>{0, 0});
  CHECK_FALSE(with_zero.valid());

  const DegreeSequence sorted(std::vector<int>{3, 5, 3});
  CHECK(sorted.terms() == std::vector<int>{5, 3, 3});
}

TEST_CASE("degree sequence text round trip") {
  const DegreeSequence s = DegreeSequence::parse("5,5,3,3,3,3");
  CHECK(s.terms() == std::vector<int>{5, 5, 3, 3, 3, 3});
  CHECK(s.to_string() == "5,5,3,3,3,3");
  CHECK(DegreeSequence::parse(" 4, 3,3 ,3,3 ").to_string() == "4,3,3,3,3");
  CHECK(throws_code(Errc::invalid_sequence, [] { DegreeSequence::parse(""); }));
  CHECK(throws_code(Errc::invalid_sequence, [] { DegreeSequence::parse("3,x,3"); }));
  CHECK(throws_code(Errc::invalid_sequence, [] { DegreeSequence::parse("3,,3"); }));
}

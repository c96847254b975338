#include "threeconn/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace threeconn {

Edge::Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
  if (a == b) {
    throw Error(Errc::loop_edge, "loop edge at vertex " + std::to_string(a));
  }
  if (u < 0) {
    throw Error(Errc::vertex_out_of_range, "negative vertex label " + std::to_string(u));
  }
}

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), std::greater<int>());
}

long long DegreeSequence::degree_sum() const noexcept {
  return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

bool DegreeSequence::valid() const noexcept {
  return !terms_.empty() && terms_.back() >= 1;
}

int DegreeSequence::max_term() const {
  if (terms_.empty()) throw Error(Errc::invalid_sequence, "empty degree sequence");
  return terms_.front();
}

int DegreeSequence::min_term() const {
  if (terms_.empty()) throw Error(Errc::invalid_sequence, "empty degree sequence");
  return terms_.back();
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(terms_[k]);
  }
  return out;
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::vector<int> terms;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    // trim surrounding spaces
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(Errc::invalid_sequence,
                  "cannot parse degree sequence term '" + std::string(item) + "'");
    }
    terms.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (terms.empty()) throw Error(Errc::invalid_sequence, "empty degree sequence");
  return DegreeSequence(std::move(terms));
}

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw Error(Errc::invalid_argument, "negative order");
  if (order > max_order) {
    throw Error(Errc::order_too_large,
                "order " + std::to_string(order) + " exceeds supported maximum " +
                    std::to_string(max_order));
  }
  adj_.assign(static_cast<size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  edges_.assign(edges.begin(), edges.end());
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (adj_[static_cast<size_t>(e.u)] >> e.v & 1) {
      throw Error(Errc::duplicate_edge, "duplicate edge (" + std::to_string(e.u) +
                                            "," + std::to_string(e.v) + ")");
    }
    adj_[static_cast<size_t>(e.u)] |= uint64_t{1} << e.v;
    adj_[static_cast<size_t>(e.v)] |= uint64_t{1} << e.u;
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<size_t>(u)] >> v & 1;
}

uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Edge e(u, v);
  if (has_edge(e)) {
    throw Error(Errc::duplicate_edge, "edge (" + std::to_string(e.u) + "," +
                                          std::to_string(e.v) + ") already present");
  }
  Graph out = *this;
  out.edges_.insert(std::lower_bound(out.edges_.begin(), out.edges_.end(), e), e);
  out.adj_[static_cast<size_t>(e.u)] |= uint64_t{1} << e.v;
  out.adj_[static_cast<size_t>(e.v)] |= uint64_t{1} << e.u;
  return out;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Edge e(u, v);
  if (!has_edge(e)) {
    throw Error(Errc::missing_edge, "edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") not present");
  }
  Graph out = *this;
  out.edges_.erase(std::lower_bound(out.edges_.begin(), out.edges_.end(), e));
  out.adj_[static_cast<size_t>(e.u)] &= ~(uint64_t{1} << e.v);
  out.adj_[static_cast<size_t>(e.v)] &= ~(uint64_t{1} << e.u);
  return out;
}

std::pair<Graph, int> Graph::subdivide(Edge e) const {
  if (!has_edge(e)) {
    throw Error(Errc::missing_edge, "cannot subdivide missing edge (" +
                                        std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
  }
  const int fresh = order_;
  std::vector<Edge> edges;
  edges.reserve(edges_.size() + 1);
  for (const Edge& f : edges_) {
    if (f != e) edges.push_back(f);
  }
  edges.emplace_back(e.u, fresh);
  edges.emplace_back(e.v, fresh);
  return {Graph(order_ + 1, edges), fresh};
}

Graph Graph::complement() const {
  std::vector<Edge> edges;
  for (int v = 1; v < order_; ++v) {
    for (int u = 0; u < v; ++u) {
      if (!(adj_[static_cast<size_t>(u)] >> v & 1)) edges.emplace_back(u, v);
    }
  }
  return Graph(order_, edges);
}

Graph Graph::relabeled(std::span<const int> permutation) const {
  if (static_cast<int>(permutation.size()) != order_) {
    throw Error(Errc::invalid_argument, "permutation length does not match order");
  }
  std::vector<bool> seen(static_cast<size_t>(order_), false);
  for (int image : permutation) {
    if (image < 0 || image >= order_ || seen[static_cast<size_t>(image)]) {
      throw Error(Errc::invalid_argument, "not a permutation of the vertex labels");
    }
    seen[static_cast<size_t>(image)] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) {
    edges.emplace_back(permutation[static_cast<size_t>(e.u)],
                       permutation[static_cast<size_t>(e.v)]);
  }
  return Graph(order_, edges);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(order_ - 1));
  }
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(Errc::order_too_small, "complete graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  return DegreeSequence(std::move(degrees));
}

}  // namespace threeconn

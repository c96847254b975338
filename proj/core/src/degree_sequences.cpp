#include "threeconn/degree_sequences.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "threeconn/canonical.hpp"
#include "threeconn/connectivity.hpp"
#include "threeconn/oracle.hpp"
#include "threeconn/partition_matrix.hpp"

namespace threeconn {

bool is_graphic(const DegreeSequence& s) {
  if (!s.valid()) throw Error(Errc::invalid_sequence, "graphicality needs positive terms");
  const std::vector<int>& d = s.terms();
  const int n = s.length();
  if (s.degree_sum() % 2 != 0) return false;
  if (d.front() >= n) return false;
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += d[static_cast<size_t>(k - 1)];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int at = k; at < n; ++at) rhs += std::min(d[static_cast<size_t>(at)], k);
    if (lhs > rhs) return false;
  }
  return true;
}

bool satisfies_3connected_criterion(const DegreeSequence& s) {
  if (!s.valid()) throw Error(Errc::invalid_sequence, "classification needs positive terms");
  const long long phi = s.length();
  const long long twice_epsilon = s.degree_sum();
  return twice_epsilon % 2 == 0 && 3 * phi <= twice_epsilon &&
         twice_epsilon <= phi * (phi - 1) && s.max_term() <= phi - 1 && s.min_term() >= 3;
}

bool satisfies_necessary_criterion(const DegreeSequence& s) {
  return satisfies_3connected_criterion(s) &&
         s.degree_sum() > (static_cast<long long>(s.length()) - 2) * (s.length() - 3) + 10;
}

std::vector<Graph> oracle_realizations(const DegreeSequence& s, int bound) {
  if (!s.valid()) throw Error(Errc::invalid_sequence, "realization search needs positive terms");
  if (bound > max_realization_phi) {
    throw Error(Errc::invalid_argument, "realization bound above supported maximum");
  }
  const int phi = s.length();
  if (phi > bound) {
    throw Error(Errc::bound_exceeded, "sequence length " + std::to_string(phi) +
                                          " above realization bound " + std::to_string(bound));
  }

  std::vector<Graph> out;
  const long long sum = s.degree_sum();
  const int pair_count = phi * (phi - 1) / 2;
  if (sum % 2 != 0 || sum / 2 > pair_count || s.max_term() >= phi) return out;
  const int epsilon = static_cast<int>(sum / 2);

  std::array<int, 9> want{};
  for (int term : s.terms()) ++want[static_cast<size_t>(term)];

  // Enumerate the sparser side: edge sets directly below the density
  // midpoint, complements above it.
  const bool direct = epsilon <= pair_count - epsilon;
  const int subset_size = direct ? epsilon : pair_count - epsilon;

  std::set<CanonicalCode> codes;
  oracle::for_each_subset(pair_count, subset_size, [&](uint32_t mask) {
    std::array<int, 8> degree{};
    oracle::accumulate_degrees(phi, mask, degree);
    std::array<int, 9> have{};
    for (int v = 0; v < phi; ++v) {
      const int d = direct ? degree[static_cast<size_t>(v)]
                           : phi - 1 - degree[static_cast<size_t>(v)];
      ++have[static_cast<size_t>(d)];
    }
    if (have != want) return;
    const uint32_t edges = direct ? mask : oracle::pair_mask(phi) & ~mask;
    codes.insert(canonical_code(oracle::graph_from_mask(phi, edges)));
  });

  out.reserve(codes.size());
  for (const CanonicalCode& code : codes) out.push_back(decode(code));
  return out;
}

std::optional<Graph> realize_3connected(const DegreeSequence& s, const Catalog& catalog) {
  if (!s.valid()) throw Error(Errc::invalid_sequence, "realization needs positive terms");
  if (s.length() > catalog.max_order()) {
    throw Error(Errc::catalog_coverage, "catalog does not cover length " +
                                            std::to_string(s.length()));
  }
  if (s.length() < 4 || s.degree_sum() % 2 != 0) return std::nullopt;
  const MatrixIndex idx = entry_index(associated_pair(s));
  for (const CanonicalCode& code : catalog.codes_in_cell(idx)) {
    Graph candidate = decode(code);
    if (degree_sequence(candidate) == s) return candidate;
  }
  return std::nullopt;
}

std::optional<Graph> realize_3connected(const DegreeSequence& s) {
  if (!s.valid()) throw Error(Errc::invalid_sequence, "realization needs positive terms");
  if (s.length() > max_enumeration_order) {
    throw Error(Errc::bound_exceeded, "realization is bounded at length " +
                                          std::to_string(max_enumeration_order));
  }
  if (s.length() < 4) return std::nullopt;
  return realize_3connected(s, enumerate_3connected(s.length()));
}

BoundaryWitnesses boundary_witnesses(int n) {
  if (n < 6) {
    throw Error(Errc::order_too_small, "boundary witnesses need order >= 6");
  }
  // g1: a complete graph on {0, 1, n-2, n-1} and one on {0..n-3}, sharing the
  // edge (0,1). Removing {0,1} separates {n-2,n-1} from the rest, and the
  // degree sequence is {n-1, n-1, n-3, ..., n-3, 3, 3}.
  std::vector<Edge> edges;
  for (int v = 1; v <= n - 3; ++v) {
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  for (int w : {n - 2, n - 1}) {
    edges.emplace_back(0, w);
    edges.emplace_back(1, w);
  }
  edges.emplace_back(n - 2, n - 1);
  Graph g1(n, edges);

  // g2: drop the interior edge (2,3) and the edge between the two degree-3
  // vertices, then strap each degree-3 vertex to one interior endpoint. The
  // degree sequence is unchanged and the 2-cut disappears.
  Graph g2 = g1.without_edge(2, 3)
                 .without_edge(n - 2, n - 1)
                 .with_edge(n - 1, 2)
                 .with_edge(n - 2, 3);
  return {std::move(g1), std::move(g2)};
}

ExtremalSequences extremal_sequences(int phi) {
  if (phi < 4) throw Error(Errc::phi_out_of_range, "lengths below 4 have no 3-connected sequence");
  std::vector<int> lightest(static_cast<size_t>(phi), 3);
  if (phi % 2 != 0) lightest.front() = 4;  // keep the degree sum even
  std::vector<int> heaviest(static_cast<size_t>(phi), phi - 1);
  return {DegreeSequence(std::move(lightest)), DegreeSequence(std::move(heaviest))};
}

Classification classify(const DegreeSequence& s, bool with_oracle, int oracle_bound) {
  if (!s.valid()) throw Error(Errc::invalid_sequence, "classification needs positive terms");
  Classification result;
  result.graphic = is_graphic(s);
  result.criterion_3connected = satisfies_3connected_criterion(s);
  result.criterion_necessary = satisfies_necessary_criterion(s);
  if (with_oracle && s.length() <= std::min(oracle_bound, max_realization_phi)) {
    bool any = false;
    bool any_3connected = false;
    bool all_3connected = true;
    for (const Graph& realization : oracle_realizations(s, oracle_bound)) {
      any = true;
      if (is_3_connected(realization)) {
        any_3connected = true;
      } else {
        all_3connected = false;
      }
    }
    result.oracle_3connected = any_3connected;
    result.oracle_necessary = any && all_3connected;
  }
  return result;
}

}  // namespace threeconn

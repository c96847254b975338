#ifndef THREECONN_DEGREE_SEQUENCES_HPP
#define THREECONN_DEGREE_SEQUENCES_HPP

#include <optional>
#include <vector>

#include "threeconn/bg_ops.hpp"
#include "threeconn/graph.hpp"

namespace threeconn {

/// Exhaustive realization search switches representation at the density
/// midpoint and packs edge subsets into machine words, which caps it here.
inline constexpr int max_realization_phi = 8;

/// Erdos-Gallai test: even degree sum and, for every k,
/// sum of the k largest terms <= k(k-1) + sum over the rest of min(term, k).
/// Pre: s valid.
bool is_graphic(const DegreeSequence& s);

/// The closed-form test for "some 3-connected graph has this degree
/// sequence": integral half-sum, 3*phi/2 <= epsilon <= phi(phi-1)/2, largest
/// term <= phi-1, smallest term >= 3. Deliberately does not test
/// graphicality; the verification suites surface the consequences.
bool satisfies_3connected_criterion(const DegreeSequence& s);

/// The closed-form test for "every realisation is 3-connected": the test
/// above plus epsilon > (phi-2)(phi-3)/2 + 5.
bool satisfies_necessary_criterion(const DegreeSequence& s);

/// Every isomorphism class with degree sequence s, by exhaustive edge-subset
/// enumeration (direct below the density midpoint, complements above it).
/// Returns canonical representatives in code order. Pre: s valid,
/// length <= bound <= max_realization_phi.
std::vector<Graph> oracle_realizations(const DegreeSequence& s,
                                       int bound = max_realization_phi);

/// A 3-connected graph with degree sequence s, found by scanning the catalog
/// cell the sequence's associated pair addresses; absent when no such graph
/// exists. Pre: catalog covers s's length.
std::optional<Graph> realize_3connected(const DegreeSequence& s, const Catalog& catalog);
/// Convenience overload that enumerates its own catalog (length <= 8).
std::optional<Graph> realize_3connected(const DegreeSequence& s);

/// Two graphs sharing the extremal degree sequence
/// {n-1, n-1, n-3, ..., n-3, 3, 3}: g1 glues a complete graph on the last
/// four vertices and one on the first n-2 along the edge (0,1) and is exactly
/// 2-connected; g2 reroutes two edges of g1 and is 3-connected for n >= 7.
/// At n = 6 the sequence {5,5,3,3,3,3} has a single realization up to
/// isomorphism (the two degree-5 vertices dominate, forcing a perfect
/// matching on the rest), so g2 coincides with g1's class and is only
/// 2-connected. Pre: n >= 6.
struct BoundaryWitnesses {
  Graph g1;
  Graph g2;
};
BoundaryWitnesses boundary_witnesses(int n);

/// Lightest and heaviest 3-connected degree sequences of a given length:
/// all threes (one four when the length is odd) up to all phi-1. Pre: phi >= 4.
struct ExtremalSequences {
  DegreeSequence min_sequence;
  DegreeSequence max_sequence;
};
ExtremalSequences extremal_sequences(int phi);

/// Closed-form answers side by side with (optional) exhaustive ones. The
/// oracle fields stay empty when the oracle was not run; they are findings to
/// report, never inputs the closed-form fields depend on.
struct Classification {
  bool graphic = false;
  bool criterion_3connected = false;
  bool criterion_necessary = false;
  std::optional<bool> oracle_3connected;
  std::optional<bool> oracle_necessary;
};

Classification classify(const DegreeSequence& s, bool with_oracle,
                        int oracle_bound = max_realization_phi);

}  // namespace threeconn

#endif  // THREECONN_DEGREE_SEQUENCES_HPP

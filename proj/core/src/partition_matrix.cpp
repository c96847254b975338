#include "threeconn/partition_matrix.hpp"

#include "threeconn/bg_ops.hpp"
#include "threeconn/canonical.hpp"

namespace threeconn {

long long AssociatedPair::epsilon() const {
  if (!integral()) {
    throw Error(Errc::fractional_edge_count,
                "degree sum " + std::to_string(degree_sum) + " is odd");
  }
  return degree_sum / 2;
}

AssociatedPair associated_pair(const DegreeSequence& s) {
  if (!s.valid()) {
    throw Error(Errc::invalid_sequence, "associated pair needs positive terms");
  }
  return {s.length(), s.degree_sum()};
}

MatrixIndex entry_index(const AssociatedPair& p) {
  if (p.phi < 4) {
    throw Error(Errc::phi_out_of_range,
                "no 3-connected graph has fewer than 4 vertices (phi = " +
                    std::to_string(p.phi) + ")");
  }
  return {p.epsilon() - 3 * p.phi + 6, p.phi - 4};
}

CellParameters cell_parameters(const MatrixIndex& idx) {
  return {idx.j + 4, idx.i + 3 * idx.j + 6};
}

RowRange nonempty_row_range(long long j) {
  if (j < 0) throw Error(Errc::invalid_argument, "column index must be non-negative");
  const long long top = j * (j + 1) / 2;
  return j % 2 == 0 ? RowRange{-3 * j / 2, top} : RowRange{(-3 * j + 1) / 2, top};
}

long long column_nonempty_count(long long j) {
  const RowRange range = nonempty_row_range(j);
  return range.i_max - range.i_min + 1;
}

IndexDelta op_index_delta(BgKind kind) {
  switch (kind) {
    case BgKind::op01: return {+1, 0};
    case BgKind::op12: return {-1, +1};
    case BgKind::op23: return {-3, +2};
  }
  throw Error(Errc::invalid_argument, "unknown operation kind");
}

std::vector<Graph> enumerate_cell(const MatrixIndex& idx, const Catalog& catalog) {
  if (idx.j < 0) throw Error(Errc::invalid_argument, "column index must be non-negative");
  if (idx.j + 4 > catalog.max_order()) {
    throw Error(Errc::catalog_coverage,
                "catalog covers orders up to " + std::to_string(catalog.max_order()) +
                    ", cell needs " + std::to_string(idx.j + 4));
  }
  std::vector<Graph> graphs;
  for (const CanonicalCode& code : catalog.codes_in_cell(idx)) {
    graphs.push_back(decode(code));
  }
  return graphs;
}

}  // namespace threeconn

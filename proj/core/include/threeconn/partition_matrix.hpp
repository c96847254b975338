#ifndef THREECONN_PARTITION_MATRIX_HPP
#define THREECONN_PARTITION_MATRIX_HPP

#include <compare>
#include <vector>

#include "threeconn/graph.hpp"

namespace threeconn {

class Catalog;  // defined in bg_ops.hpp

/// Cell address in the grid that partitions 3-connected graphs by order and
/// size: column j holds order j+4, row i within it holds size i+3j+6. Rows
/// may be negative; columns never are. Ordering is column-major (j, then i),
/// matching every deterministic traversal in the library.
struct MatrixIndex {
  long long i = 0;
  long long j = 0;

  friend bool operator==(const MatrixIndex&, const MatrixIndex&) = default;
  friend std::strong_ordering operator<=>(const MatrixIndex& a, const MatrixIndex& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

/// Length and degree sum of a sequence. The half-sum (the edge count of any
/// realisation) is kept exact by storing the full sum: epsilon() refuses odd
/// sums instead of rounding.
struct AssociatedPair {
  long long phi = 0;
  long long degree_sum = 0;

  bool integral() const noexcept { return degree_sum % 2 == 0; }
  long long epsilon() const;  // pre: integral()
};

AssociatedPair associated_pair(const DegreeSequence& s);  // pre: s valid

/// (i, j) = (epsilon - 3 phi + 6, phi - 4). Errors on odd degree sums and on
/// phi < 4.
MatrixIndex entry_index(const AssociatedPair& p);

struct CellParameters {
  long long order = 0;
  long long size = 0;
};

/// Inverse of entry_index: order j+4, size i+3j+6.
CellParameters cell_parameters(const MatrixIndex& idx);

struct RowRange {
  long long i_min = 0;
  long long i_max = 0;
};

/// Closed form for the rows of column j that contain at least one graph:
/// -3j/2 .. (j^2+j)/2 for even j, (-3j+1)/2 .. (j^2+j)/2 for odd j.
RowRange nonempty_row_range(long long j);  // pre: j >= 0

/// Width of nonempty_row_range(j): (j^2+4j+2)/2 for even j, (j^2+4j+1)/2 for
/// odd j.
long long column_nonempty_count(long long j);  // pre: j >= 0

enum class BgKind { op01, op12, op23 };

struct IndexDelta {
  long long di = 0;
  long long dj = 0;
};

/// How each operation moves a graph through the grid: (+1,0) for (0,1),
/// (-1,+1) for (1,2), (-3,+2) for (2,3).
IndexDelta op_index_delta(BgKind kind);

/// Members of one cell, decoded from the catalog in code order. Cells outside
/// the non-empty row range yield an empty list; a catalog that does not cover
/// column idx.j is an error.
std::vector<Graph> enumerate_cell(const MatrixIndex& idx, const Catalog& catalog);

}  // namespace threeconn

#endif  // THREECONN_PARTITION_MATRIX_HPP

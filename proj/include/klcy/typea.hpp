#pragma once
#include <string>
#include <utility>
#include <vector>

#include "klcy/cells.hpp"

namespace klcy {

// An integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // validates

  int n() const;                 // sum of parts
  Partition transpose() const;
  // dominance: partial sums of *this are >= those of o (same total)
  bool dominates(const Partition& o) const;
  std::string str() const;       // "(4,2,1)"

  bool operator==(const Partition& o) const = default;
  auto operator<=>(const Partition& o) const = default;
};

struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  bool is_standard(int n) const;  // entries 1..n once, rows/cols increase
  std::string str() const;        // one row per line

  bool operator==(const StandardTableau& o) const = default;
  auto operator<=>(const StandardTableau& o) const = default;
};

// Robinson-Schensted by row insertion: w (one-line, values 1..n) ->
// (insertion tableau P, recording tableau Q) of equal shape.
std::pair<StandardTableau, StandardTableau> rs(const std::vector<int>& w);

// The unique permutation with rs(w) = (P, Q); throws ShapeMismatch unless
// the tableaux are standard of equal shape.
std::vector<int> rs_inverse(const StandardTableau& p, const StandardTableau& q);

// RS shape of a type-A group element.
Partition rs_shape(const CoxeterGroup& g, Element w);

// The partition a-function: shape_a(lambda) = sum_i (i-1) * lambda_i.
int shape_a(const Partition& lambda);

// Shape of w0*w given the shape of w (transposition).
Partition w0_shape(const Partition& lambda);

// All partitions of n, in descending lexicographic order, e.g.
// (n), (n-1,1), ..., (1^n).
std::vector<Partition> all_partitions(int n);

// Cell partitions of a type-A group read off from RS tableaux: left cells
// share the recording tableau, right cells the insertion tableau, two-sided
// cells the shape.  The two-sided order is shape dominance (dominating
// shapes sit lower).  The left/right orders are strictly finer than shape
// dominance and are not determined by the tableaux, so those two partitions
// carry only the trivial order; use the generic cell machinery for them.
struct RSCells {
  CellPartition left, right, two_sided;
};
RSCells cells_via_rs(const CoxeterGroup& g);

} // namespace klcy

#pragma once
#include <vector>

#include "klcy/hecke.hpp"

namespace klcy {

enum class CellKind { Left, Right, TwoSided };

// A cell partition of the group, together with the induced partial order
// on classes.  Class ids are canonical: classes are numbered by their
// minimal element (in the group's element order), so the identity's class
// is always class 0.
struct CellPartition {
  CellKind kind = CellKind::Left;
  std::vector<std::vector<Element>> classes;  // each sorted; classes sorted by min
  std::vector<int> class_of;                  // element index -> class id
  // leq[a][b]: class a is below class b (reachability; reflexive).
  // The identity's class is the unique minimum, the top cell the maximum,
  // and the a-function strictly increases along strict increases.
  std::vector<std::vector<bool>> leq;

  int id_of(Element w) const { return class_of.at(w.idx); }
};

struct DufloData {
  std::vector<Element> duflo;          // all Duflo involutions, sorted
  std::vector<Element> per_left_cell;  // left-cell id -> its Duflo element
};

// Cells from the mu-coefficient graph: an edge x -> y exists when
// mu_sym(x,y) != 0 and the descent set of y (left descents for the left
// preorder, right for the right) is not contained in that of x; two-sided
// edges are the union of both kinds.  Cells are the strongly connected
// components, the class order is graph reachability.
CellPartition compute_cells(const HeckeAlgebra& h, CellKind kind);

// Shared lazily-computed cell data for one Hecke algebra: the three
// partitions, Lusztig's a-function, and the Duflo involutions.
class CellData {
public:
  explicit CellData(const HeckeAlgebra& h) : h_(&h) {}

  const HeckeAlgebra& hecke() const { return *h_; }
  const CellPartition& partition(CellKind kind) const;

  // Lusztig's a-function: the maximal v-degree with which the KL basis
  // element of w appears in a product of two KL basis elements of its own
  // two-sided cell.
  int a(Element w) const;

  // The unique involution z in each left cell with a(z) equal to the
  // v-valuation of h_{e,z}; throws CriterionAmbiguous if a cell does not
  // contain exactly one candidate.
  const DufloData& duflo() const;

private:
  void ensure_a() const;

  const HeckeAlgebra* h_;
  mutable std::vector<CellPartition> parts_ = std::vector<CellPartition>(3);
  mutable std::vector<bool> parts_done_ = std::vector<bool>(3, false);
  mutable std::vector<int> a_;  // per element index; filled by ensure_a
  mutable bool a_done_ = false;
  mutable DufloData duflo_;
  mutable bool duflo_done_ = false;
};

// Convenience wrappers around CellData for one-off queries (each computes
// the full two-sided sweep; prefer CellData when making repeated calls).
int a_function(const HeckeAlgebra& h, Element w);
DufloData duflo_involutions(const HeckeAlgebra& h);

} // namespace klcy

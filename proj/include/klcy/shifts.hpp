#pragma once
#include <string>
#include <vector>

#include "klcy/cells.hpp"
#include "klcy/typea.hpp"

namespace klcy {

// Calabi-Yau shift data attached to a Duflo involution d: the self-dual
// object it labels sits 2a(w0*d) steps in the homological direction and
// 2(a(d) - a(w0*d)) steps in the grading direction.
struct CYShift {
  Element duflo;
  long long hom_shift = 0;    // 2 a(w0 d); even, >= 0
  long long grade_shift = 0;  // 2 (a(d) - a(w0 d))
  bool operator==(const CYShift& o) const = default;
};

// Duflo involutions of one group together with the a-values their shifts
// need.  Type-A groups have a fast path through RS shapes (their Duflo
// involutions are exactly the involutions, and a-values come from the
// partition formula); any other finite group goes through the generic
// cell machinery.
class ShiftData {
 public:
  // Shape-based construction; requires g.is_type_a().
  static ShiftData type_a(const CoxeterGroup& g);
  // Generic construction from computed cell data (any finite group).
  static ShiftData from_cells(const CellData& cd);

  const CoxeterGroup& group() const { return *g_; }
  const std::vector<Element>& duflo() const { return duflo_; }
  bool is_duflo(Element d) const;

  // Shift data for one Duflo involution; throws NotDuflo otherwise.
  CYShift shift_of(Element d) const;

  // Sorted distinct homological shifts {2 a(w0 d) : d Duflo}.  These are
  // exactly the dimensions in which a Calabi-Yau object of the required
  // kind exists.
  std::vector<long long> admissible_dims() const;

 private:
  const CoxeterGroup* g_ = nullptr;
  std::vector<Element> duflo_;  // sorted
  // (a(d), a(w0 d)) aligned with duflo_
  std::vector<std::pair<long long, long long>> a_;
};

// One dot of the shift scatter for S_n.  The dot labelled by a partition
// lambda sits at hom = 2 n(lambda), grade = 2 (n(lambda') - n(lambda));
// that is the shift for the Duflo involution d of RS shape lambda', so
// the label is the shape of w0*d.  Dots come in all_partitions(n) order.
struct ShiftDot {
  Partition cell;
  long long hom_shift = 0;
  long long grade_shift = 0;
  bool operator==(const ShiftDot& o) const = default;
};
std::vector<ShiftDot> figure1_coordinates(int n);

// The shift scatter as a standalone SVG document: one labelled dot per
// partition of n, homological axis increasing to the LEFT, grading axis
// increasing upward.  Byte-deterministic.
std::string figure1_svg(int n);

} // namespace klcy

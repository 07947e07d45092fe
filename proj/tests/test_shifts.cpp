#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klcy/shifts.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using klcy::CellData;
using klcy::CoxeterGroup;
using klcy::CYShift;
using klcy::Element;
using klcy::HeckeAlgebra;
using klcy::Partition;
using klcy::ShiftData;
using klcy::StandardTableau;

namespace {

// the row-filling standard tableau of a shape: 1..n row by row
StandardTableau row_filling(const Partition& shape) {
  StandardTableau t;
  int next = 1;
  for (int part : shape.parts) {
    std::vector<int> row(part);
    std::iota(row.begin(), row.end(), next);
    next += part;
    t.rows.push_back(std::move(row));
  }
  return t;
}

// an involution whose RS shape is the given partition
std::vector<int> involution_of_shape(const Partition& shape) {
  StandardTableau t = row_filling(shape);
  return klcy::rs_inverse(t, t);
}

} // namespace

TEST_CASE("rank-one shifts") {
  CoxeterGroup g = CoxeterGroup::type_a(1);
  ShiftData sd = ShiftData::type_a(g);
  Element e = g.identity();
  Element s = g.generator(0);
  REQUIRE(sd.duflo() == std::vector<Element>{e, s});

  CHECK(sd.shift_of(e).hom_shift == 2);
  CHECK(sd.shift_of(e).grade_shift == -2);
  CHECK(sd.shift_of(s).hom_shift == 0);
  CHECK(sd.shift_of(s).grade_shift == 2);
  CHECK(sd.admissible_dims() == std::vector<long long>{0, 2});
}

TEST_CASE("S3 shifts and admissible dimensions") {
  CoxeterGroup g = CoxeterGroup::type_a(2);
  ShiftData sd = ShiftData::type_a(g);
  Element e = g.identity();
  Element s = g.generator(0), t = g.generator(1);
  Element w0 = g.longest_element();
  // Duflo involutions here are exactly the involutions
  CHECK(sd.duflo() == std::vector<Element>{e, s, t, w0});

  CHECK(sd.shift_of(e) == CYShift{e, 6, -6});
  CHECK(sd.shift_of(s) == CYShift{s, 2, 0});
  CHECK(sd.shift_of(t) == CYShift{t, 2, 0});
  CHECK(sd.shift_of(w0) == CYShift{w0, 0, 6});
  CHECK(sd.admissible_dims() == std::vector<long long>{0, 2, 6});

  CHECK(sd.is_duflo(s));
  CHECK(!sd.is_duflo(g.from_word({0, 1})));
  CHECK_THROWS_AS(sd.shift_of(g.from_word({0, 1})), klcy::NotDuflo);
}

TEST_CASE("shape path agrees with the generic cell path on S3 and S4") {
  for (int rank : {2, 3}) {
    CoxeterGroup g = CoxeterGroup::type_a(rank);
    HeckeAlgebra h(g);
    CellData cd(h);
    ShiftData fast = ShiftData::type_a(g);
    ShiftData generic = ShiftData::from_cells(cd);
    REQUIRE(fast.duflo() == generic.duflo());
    for (Element d : fast.duflo())
      CHECK(fast.shift_of(d) == generic.shift_of(d));
    CHECK(fast.admissible_dims() == generic.admissible_dims());
  }
}

TEST_CASE("shift invariants on S2..S5") {
  for (int rank : {1, 2, 3, 4}) {
    CoxeterGroup g = CoxeterGroup::type_a(rank);
    ShiftData sd = ShiftData::type_a(g);
    Element e = g.identity();
    Element w0 = g.longest_element();
    long long lw0 = g.length(w0);
    for (Element d : sd.duflo()) {
      CYShift cs = sd.shift_of(d);
      CHECK(cs.hom_shift >= 0);
      CHECK(cs.hom_shift % 2 == 0);
      CHECK(cs.grade_shift % 2 == 0);
      // hom + grade = 2 a(d) >= 0
      long long a_d = klcy::shape_a(klcy::rs_shape(g, d));
      CHECK(cs.hom_shift + cs.grade_shift == 2 * a_d);
      CHECK(cs.hom_shift + cs.grade_shift >= 0);
    }
    // the two extreme Duflo involutions use a(w0) = l(w0)
    CHECK(sd.shift_of(e) == CYShift{e, 2 * lw0, -2 * lw0});
    CHECK(sd.shift_of(w0) == CYShift{w0, 0, 2 * lw0});
  }
}

TEST_CASE("named S7 shifts") {
  CoxeterGroup g = CoxeterGroup::type_a(6);
  ShiftData sd = ShiftData::type_a(g);

  Element x = g.from_one_line(involution_of_shape(Partition({5, 1, 1})));
  CHECK(sd.shift_of(x).hom_shift == 20);
  CHECK(sd.shift_of(x).grade_shift == -14);

  Element y = g.from_one_line(involution_of_shape(Partition({4, 3})));
  CHECK(sd.shift_of(y).hom_shift == 18);
  CHECK(sd.shift_of(y).grade_shift == -12);
}

TEST_CASE("scatter coordinates for small n") {
  auto one = klcy::figure1_coordinates(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].cell == Partition({1}));
  CHECK(one[0].hom_shift == 0);
  CHECK(one[0].grade_shift == 0);

  auto two = klcy::figure1_coordinates(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == klcy::ShiftDot{Partition({2}), 0, 2});
  CHECK(two[1] == klcy::ShiftDot{Partition({1, 1}), 2, -2});

  CHECK_THROWS_AS(klcy::figure1_coordinates(0), klcy::DomainError);
}

TEST_CASE("scatter for n=7: fifteen dots, two collisions") {
  auto dots = klcy::figure1_coordinates(7);
  REQUIRE(dots.size() == 15);

  std::map<long long, std::vector<Partition>> by_hom;
  for (const auto& d : dots) by_hom[d.hom_shift].push_back(d.cell);
  int collisions = 0;
  for (const auto& [hom, cells] : by_hom)
    if (cells.size() > 1) {
      ++collisions;
      REQUIRE(cells.size() == 2);
      if (hom == 6) {
        CHECK(cells[0] == Partition({5, 1, 1}));
        CHECK(cells[1] == Partition({4, 3}));
      } else {
        CHECK(hom == 12);
        CHECK(cells[0] == Partition({4, 1, 1, 1}));
        CHECK(cells[1] == Partition({3, 2, 2}));
      }
    }
  CHECK(collisions == 2);

  // colliding dots differ in grade
  for (const auto& [hom, cells] : by_hom)
    if (cells.size() == 2) {
      long long g0 = 0, g1 = 0;
      for (const auto& d : dots) {
        if (d.cell == cells[0]) g0 = d.grade_shift;
        if (d.cell == cells[1]) g1 = d.grade_shift;
      }
      CHECK(g0 != g1);
    }
}

TEST_CASE("scatter labels carry the shape of w0*d") {
  // the dot labelled lambda is the shift of the Duflo involution of shape
  // lambda-transpose
  CoxeterGroup g = CoxeterGroup::type_a(6);
  ShiftData sd = ShiftData::type_a(g);
  for (const auto& dot : klcy::figure1_coordinates(7)) {
    Element d = g.from_one_line(involution_of_shape(dot.cell.transpose()));
    CYShift cs = sd.shift_of(d);
    CHECK(cs.hom_shift == dot.hom_shift);
    CHECK(cs.grade_shift == dot.grade_shift);
    CHECK(klcy::rs_shape(g, g.w0_mult(d)) == dot.cell);
  }
}

TEST_CASE("chain-of-ranks shift arithmetic") {
  // In S_{n+1}: the longest element gives (0, n(n+1)); a Duflo involution
  // in the cell (2,1^{n-1}) gives (2, n(n-1)-2); grade difference 2(n+1).
  for (int n : {2, 3, 4, 5}) {
    CoxeterGroup g = CoxeterGroup::type_a(n);
    ShiftData sd = ShiftData::type_a(g);
    CYShift top = sd.shift_of(g.longest_element());
    CHECK(top.hom_shift == 0);
    CHECK(top.grade_shift == n * (n + 1));

    std::vector<int> parts{2};
    for (int i = 1; i < n; ++i) parts.push_back(1);
    Element d = g.from_one_line(involution_of_shape(Partition(parts)));
    CYShift sub = sd.shift_of(d);
    CHECK(sub.hom_shift == 2);
    CHECK(sub.grade_shift == n * (n - 1) - 2);

    CHECK(top.grade_shift - sub.grade_shift == 2 * (n + 1));
  }
}

TEST_CASE("svg scatter is deterministic and complete") {
  std::string svg = klcy::figure1_svg(7);
  CHECK(svg == klcy::figure1_svg(7));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    pos += 7;
  }
  CHECK(circles == 15);
  CHECK(svg.find("(5,1,1)") != std::string::npos);
  CHECK(svg.find("(1,1,1,1,1,1,1)") != std::string::npos);
  CHECK(svg.find("homological shift") != std::string::npos);
  CHECK(svg.find("grading shift") != std::string::npos);

  // homological axis points left: a larger hom shift must sit at a
  // smaller x coordinate.  Dot (1^7) has hom 42, dot (7) has hom 0.
  auto cx_of = [&](std::size_t from) {
    std::size_t c = svg.find("<circle cx=\"", from);
    REQUIRE(c != std::string::npos);
    return std::stol(svg.substr(c + 12));
  };
  // dots are emitted in all_partitions order: (7) first, (1^7) last
  std::size_t first_dot = svg.find("<circle");
  long cx7 = cx_of(first_dot);
  std::size_t last_dot = svg.rfind("<circle");
  long cx1 = std::stol(svg.substr(last_dot + 12));
  CHECK(cx1 < cx7);
}

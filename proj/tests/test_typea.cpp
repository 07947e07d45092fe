#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klcy/typea.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using klcy::CellData;
using klcy::CellKind;
using klcy::CoxeterGroup;
using klcy::Element;
using klcy::HeckeAlgebra;
using klcy::Partition;
using klcy::StandardTableau;

namespace {

// Independent oracle: Greene invariants.  The sum of the first k parts of
// the insertion shape equals the largest total size of a union of k disjoint
// increasing subsequences.  A position set is coverable by k increasing
// subsequences exactly when its longest decreasing subsequence has length at
// most k (Dilworth), so for small n everything is a brute-force subset scan
// that never touches the insertion algorithm.
Partition greene_shape(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> best(n + 1, 0); // best[k] = max |S| with lds(S) <= k
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vals;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) vals.push_back(w[i]);
    int lds = 0;
    std::vector<int> dp(vals.size(), 1);
    for (std::size_t j = 0; j < vals.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i)
        if (vals[i] > vals[j]) dp[j] = std::max(dp[j], dp[i] + 1);
      lds = std::max(lds, dp[j]);
    }
    for (int k = lds; k <= n; ++k)
      best[k] = std::max(best[k], static_cast<int>(vals.size()));
  }
  std::vector<int> parts;
  for (int k = 1; k <= n && best[k] > best[k - 1]; ++k)
    parts.push_back(best[k] - best[k - 1]);
  return Partition(parts);
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> inverse_perm(const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

} // namespace

TEST_CASE("row insertion basics") {
  auto [p, q] = klcy::rs({1, 2, 3, 4});
  CHECK(p.rows == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(q.rows == std::vector<std::vector<int>>{{1, 2, 3, 4}});

  auto [p0, q0] = klcy::rs({4, 3, 2, 1});
  CHECK(p0.shape() == Partition({1, 1, 1, 1}));
  CHECK(p0.rows == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  CHECK(q0.rows == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

  CHECK_THROWS_AS(klcy::rs({1, 1, 3}), klcy::DomainError);
}

TEST_CASE("shapes agree with the Greene-invariant oracle up to n=6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_perms(n))
      CHECK(klcy::rs(w).first.shape() == greene_shape(w));
}

TEST_CASE("reversing the word transposes the shape up to n=6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_perms(n)) {
      auto r = w;
      std::reverse(r.begin(), r.end());
      CHECK(klcy::rs(r).first.shape() == klcy::rs(w).first.shape().transpose());
    }
}

TEST_CASE("roundtrip and inversion symmetry up to n=6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<StandardTableau, StandardTableau>> images;
    for (const auto& w : all_perms(n)) {
      auto [p, q] = klcy::rs(w);
      CHECK(p.shape() == q.shape());
      CHECK(p.is_standard(n));
      CHECK(q.is_standard(n));
      CHECK(klcy::rs_inverse(p, q) == w);
      auto [pi, qi] = klcy::rs(inverse_perm(w));
      CHECK(pi == q);
      CHECK(qi == p);
      images.emplace(p, q);
    }
    // injectivity
    CHECK(images.size() == all_perms(n).size());
  }
}

TEST_CASE("equal tableaux correspond to involutions on S5") {
  for (const auto& w : all_perms(5)) {
    auto [p, q] = klcy::rs(w);
    bool involution = inverse_perm(w) == w;
    CHECK((p == q) == involution);
  }
  // and rs_inverse of a diagonal pair is an involution
  auto [p, q] = klcy::rs({3, 1, 4, 5, 2});
  auto w = klcy::rs_inverse(p, p);
  CHECK(inverse_perm(w) == w);
}

TEST_CASE("rs_inverse validates its input") {
  auto [p3, q3] = klcy::rs({2, 1, 3});
  auto [p4, q4] = klcy::rs({2, 1, 4, 3});
  CHECK_THROWS_AS(klcy::rs_inverse(p3, q4), klcy::ShapeMismatch);
  StandardTableau bad;
  bad.rows = {{1, 3}, {2}};
  StandardTableau notstd;
  notstd.rows = {{2, 3}, {1}};  // column 1 decreases
  CHECK_THROWS_AS(klcy::rs_inverse(bad, notstd), klcy::ShapeMismatch);
}

TEST_CASE("partition helpers") {
  Partition l({5, 1, 1});
  CHECK(l.n() == 7);
  CHECK(l.transpose() == Partition({3, 1, 1, 1, 1}));
  CHECK(klcy::shape_a(l.transpose()) == 10);
  CHECK(Partition({4, 3}).transpose() == Partition({2, 2, 2, 1}));
  CHECK(klcy::shape_a(Partition({2, 2, 2, 1})) == 9);
  CHECK(klcy::w0_shape(Partition({1, 1, 1})) == Partition({3}));

  for (int n = 1; n <= 8; ++n)
    for (const auto& p : klcy::all_partitions(n)) {
      CHECK(p.transpose().transpose() == p);
      CHECK(p.transpose().n() == n);
    }

  CHECK(Partition({3, 1}).dominates(Partition({2, 2})));
  CHECK(!Partition({2, 2}).dominates(Partition({3, 1})));
  CHECK(Partition({2, 2}).dominates(Partition({2, 2})));
  CHECK_THROWS_AS(Partition({3}).dominates(Partition({2, 2})),
                  klcy::ShapeMismatch);
  CHECK_THROWS_AS(Partition({1, 2}), klcy::DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), klcy::DomainError);
}

TEST_CASE("the fifteen shape a-values for n=7") {
  auto parts = klcy::all_partitions(7);
  REQUIRE(parts.size() == 15);
  CHECK(parts.front() == Partition({7}));
  CHECK(parts.back() == Partition({1, 1, 1, 1, 1, 1, 1}));
  // descending lexicographic order
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    CHECK(parts[i].parts > parts[i + 1].parts);

  std::vector<int> avals;
  for (const auto& p : parts) avals.push_back(klcy::shape_a(p));
  CHECK(avals == std::vector<int>({0, 1, 2, 3, 3, 4, 6, 5, 6, 7, 10, 9, 11, 15, 21}));
  CHECK(klcy::shape_a(Partition({4, 2, 1})) == 4);
  CHECK(klcy::shape_a(Partition({2, 1, 1, 1, 1, 1})) == 15);
}

TEST_CASE("RS cells match the mu-graph cells on S4 and S5") {
  for (int rank : {3, 4}) {
    CoxeterGroup g = CoxeterGroup::type_a(rank);
    HeckeAlgebra h(g);
    CellData cd(h);
    auto rscells = klcy::cells_via_rs(g);
    struct Row { CellKind kind; const klcy::CellPartition* mine; };
    for (auto [kind, mine] : {Row{CellKind::Left, &rscells.left},
                              Row{CellKind::Right, &rscells.right},
                              Row{CellKind::TwoSided, &rscells.two_sided}}) {
      const auto& ref = cd.partition(kind);
      CHECK(mine->class_of == ref.class_of);
    }
    // the two-sided order is exactly shape dominance
    CHECK(rscells.two_sided.leq == cd.partition(CellKind::TwoSided).leq);
    // the left/right orders refine shape dominance (strictly: shapes
    // (3,1)/(2,2) in S4 are dominance-comparable but cell-incomparable)
    for (CellKind kind : {CellKind::Left, CellKind::Right}) {
      const auto& ref = cd.partition(kind);
      int ncls = static_cast<int>(ref.classes.size());
      for (int a = 0; a < ncls; ++a)
        for (int b = 0; b < ncls; ++b)
          if (ref.leq[a][b]) {
            Partition sa = klcy::rs_shape(g, ref.classes[a].front());
            Partition sb = klcy::rs_shape(g, ref.classes[b].front());
            CHECK(sa.dominates(sb));
          }
    }
  }
}

TEST_CASE("shape a-function matches the cell a-function on S4 and S5") {
  for (int rank : {3, 4}) {
    CoxeterGroup g = CoxeterGroup::type_a(rank);
    HeckeAlgebra h(g);
    CellData cd(h);
    for (Element w : g.elements())
      CHECK(klcy::shape_a(klcy::rs_shape(g, w)) == cd.a(w));
  }
}

TEST_CASE("shape transposition under w0 on S4") {
  CoxeterGroup g = CoxeterGroup::type_a(3);
  HeckeAlgebra h(g);
  CellData cd(h);
  for (Element w : g.elements()) {
    Partition lw = klcy::rs_shape(g, w);
    CHECK(klcy::rs_shape(g, g.w0_mult(w)) == klcy::w0_shape(lw));
    CHECK(cd.a(g.w0_mult(w)) == klcy::shape_a(klcy::w0_shape(lw)));
  }
}

TEST_CASE("S3 right cells via tableaux") {
  CoxeterGroup g = CoxeterGroup::type_a(2);
  auto cells = klcy::cells_via_rs(g);
  Element e = g.identity();
  Element s = g.from_word({0}), t = g.from_word({1});
  Element st = g.from_word({0, 1}), ts = g.from_word({1, 0});
  Element w0 = g.longest_element();
  auto as_sets = [&](const klcy::CellPartition& p) {
    std::set<std::set<std::uint32_t>> out;
    for (const auto& cls : p.classes) {
      std::set<std::uint32_t> sset;
      for (Element w : cls) sset.insert(w.idx);
      out.insert(std::move(sset));
    }
    return out;
  };
  std::set<std::set<std::uint32_t>> expect = {
      {e.idx}, {s.idx, st.idx}, {t.idx, ts.idx}, {w0.idx}};
  CHECK(as_sets(cells.right) == expect);
}

TEST_CASE("S7 two-sided cells biject with partitions of 7") {
  CoxeterGroup g = CoxeterGroup::type_a(6);
  auto cells = klcy::cells_via_rs(g);
  REQUIRE(cells.two_sided.classes.size() == 15);
  std::set<Partition> shapes;
  for (const auto& cls : cells.two_sided.classes) {
    Partition p = klcy::rs_shape(g, cls.front());
    for (Element w : cls) CHECK(klcy::rs_shape(g, w) == p);
    shapes.insert(p);
  }
  auto parts = klcy::all_partitions(7);
  CHECK(shapes == std::set<Partition>(parts.begin(), parts.end()));
}

#include "klcy/typea.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace klcy {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::transpose() const {
  Partition t;
  if (parts.empty()) return t;
  t.parts.resize(parts[0]);
  for (int j = 0; j < parts[0]; ++j) {
    int count = 0;
    for (int p : parts)
      if (p > j) ++count;
    t.parts[j] = count;
  }
  return t;
}

bool Partition::dominates(const Partition& o) const {
  if (n() != o.n()) throw ShapeMismatch("dominance needs equal partition size");
  int mine = 0, theirs = 0;
  std::size_t k = std::max(parts.size(), o.parts.size());
  for (std::size_t i = 0; i < k; ++i) {
    mine += i < parts.size() ? parts[i] : 0;
    theirs += i < o.parts.size() ? o.parts[i] : 0;
    if (mine < theirs) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

Partition StandardTableau::shape() const {
  Partition p;
  for (const auto& row : rows) p.parts.push_back(static_cast<int>(row.size()));
  return p;
}

bool StandardTableau::is_standard(int n) const {
  std::vector<bool> seen(n + 1, false);
  int total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int x = rows[r][c];
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = true;
      ++total;
      if (c > 0 && rows[r][c - 1] >= x) return false;
      if (r > 0 && rows[r - 1][c] >= x) return false;
    }
  }
  return total == n;
}

std::string StandardTableau::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << "\n";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << " ";
      os << rows[r][c];
    }
  }
  return os.str();
}

std::pair<StandardTableau, StandardTableau> rs(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : w) {
    if (x < 1 || x > n || seen[x]) throw DomainError("not a permutation of 1..n");
    seen[x] = true;
  }
  StandardTableau p, q;
  for (int k = 1; k <= n; ++k) {
    int x = w[k - 1];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.rows.size()) {
        p.rows.push_back({x});
        q.rows.push_back({k});
        break;
      }
      auto& row = p.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q.rows[r].push_back(k);
        break;
      }
      std::swap(*it, x);  // bump
    }
  }
  return {std::move(p), std::move(q)};
}

std::vector<int> rs_inverse(const StandardTableau& p, const StandardTableau& q) {
  Partition shape = p.shape();
  if (shape != q.shape()) throw ShapeMismatch("tableaux have different shapes");
  int n = shape.n();
  if (!p.is_standard(n) || !q.is_standard(n))
    throw ShapeMismatch("tableaux must be standard");

  // position of each entry of q
  std::vector<std::pair<int, int>> pos(n + 1);
  for (std::size_t r = 0; r < q.rows.size(); ++r)
    for (std::size_t c = 0; c < q.rows[r].size(); ++c)
      pos[q.rows[r][c]] = {static_cast<int>(r), static_cast<int>(c)};

  StandardTableau work = p;
  std::vector<int> w(n);
  for (int k = n; k >= 1; --k) {
    auto [r, c] = pos[k];
    int x = work.rows[r][c];
    work.rows[r].pop_back();
    if (work.rows[r].empty()) work.rows.pop_back();
    for (int i = r - 1; i >= 0; --i) {
      // reverse-bump: the rightmost entry smaller than x
      auto& row = work.rows[i];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(*it, x);
    }
    w[k - 1] = x;
  }
  return w;
}

Partition rs_shape(const CoxeterGroup& g, Element w) {
  return rs(g.one_line(w)).first.shape();
}

int shape_a(const Partition& lambda) {
  int a = 0;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    a += static_cast<int>(i) * lambda.parts[i];
  return a;
}

Partition w0_shape(const Partition& lambda) { return lambda.transpose(); }

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw DomainError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending lexicographic order: always extend by the largest part first
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

RSCells cells_via_rs(const CoxeterGroup& g) {
  if (!g.is_type_a()) throw DomainError("RS cells exist in type A only");
  auto els = g.elements();
  std::size_t n = els.size();

  std::vector<StandardTableau> ptab(n), qtab(n);
  std::vector<Partition> shape(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto pq = rs(g.one_line(els[i]));
    shape[i] = pq.first.shape();
    ptab[i] = std::move(pq.first);
    qtab[i] = std::move(pq.second);
  }

  auto build = [&](CellKind kind, auto&& key_of, bool shape_ordered) {
    std::map<std::decay_t<decltype(key_of(0u))>, int> ids;
    CellPartition part;
    part.kind = kind;
    part.class_of.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      auto key = key_of(i);
      auto [it, fresh] = ids.emplace(key, static_cast<int>(part.classes.size()));
      if (fresh) part.classes.push_back({});
      part.class_of[i] = it->second;
      part.classes[it->second].push_back(els[i]);
    }
    // canonical renumbering by minimal element index
    int ncls = static_cast<int>(part.classes.size());
    std::vector<int> order(ncls);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return part.classes[a].front() < part.classes[b].front();
    });
    std::vector<int> rename(ncls);
    for (int i = 0; i < ncls; ++i) rename[order[i]] = i;
    std::vector<std::vector<Element>> classes(ncls);
    for (int c = 0; c < ncls; ++c) classes[rename[c]] = std::move(part.classes[c]);
    part.classes = std::move(classes);
    for (auto& c : part.class_of) c = rename[c];

    // Two-sided classes are ordered by dominance of shapes (dominating
    // shapes are lower).  Tableau data alone does not determine the
    // left/right order -- it is strictly finer than shape dominance already
    // in S4 -- so those partitions carry only the trivial order.
    part.leq.assign(ncls, std::vector<bool>(ncls, false));
    for (int a = 0; a < ncls; ++a)
      for (int b = 0; b < ncls; ++b) {
        const Partition& sa = shape[part.classes[a].front().idx];
        const Partition& sb = shape[part.classes[b].front().idx];
        part.leq[a][b] =
            (a == b) || (shape_ordered && sa != sb && sa.dominates(sb));
      }
    return part;
  };

  RSCells cells;
  cells.left =
      build(CellKind::Left, [&](std::uint32_t i) { return qtab[i]; }, false);
  cells.right =
      build(CellKind::Right, [&](std::uint32_t i) { return ptab[i]; }, false);
  cells.two_sided = build(
      CellKind::TwoSided, [&](std::uint32_t i) { return shape[i]; }, true);
  return cells;
}

} // namespace klcy

#include "klcy/cells.hpp"

#include <algorithm>
#include <map>

namespace klcy {

namespace {

// Iterative Tarjan SCC.  Returns component id per node; components are
// then renumbered canonically by their minimal node.
std::vector<int> strongly_connected(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::size_t n = adj.size();
  std::vector<int> comp(n, -1), low(n), num(n, -1);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, ncomp = 0;

  struct Frame { std::uint32_t node; std::size_t next; };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [u, next] = call.back();
      if (next < adj[u].size()) {
        std::uint32_t w = adj[u][next++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], num[w]);
        }
      } else {
        if (low[u] == num[u]) {
          for (;;) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = ncomp;
            if (w == u) break;
          }
          ++ncomp;
        }
        std::uint32_t done = u;
        call.pop_back();
        if (!call.empty())
          low[call.back().node] = std::min(low[call.back().node], low[done]);
      }
    }
  }

  // canonical renumbering by minimal node index
  std::vector<std::uint32_t> min_node(ncomp, static_cast<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    min_node[comp[i]] = std::min(min_node[comp[i]], i);
  std::vector<int> order(ncomp);
  for (int c = 0; c < ncomp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return min_node[a] < min_node[b]; });
  std::vector<int> rename(ncomp);
  for (int i = 0; i < ncomp; ++i) rename[order[i]] = i;
  for (auto& c : comp) c = rename[c];
  return comp;
}

CellPartition partition_from_edges(const HeckeAlgebra& h, CellKind kind,
                                   const std::vector<std::vector<std::uint32_t>>& adj) {
  const CoxeterGroup& g = h.group();
  std::size_t n = g.size();
  CellPartition part;
  part.kind = kind;
  part.class_of = strongly_connected(adj);
  int ncomp = *std::max_element(part.class_of.begin(), part.class_of.end()) + 1;

  part.classes.assign(ncomp, {});
  auto els = g.elements();
  for (std::uint32_t i = 0; i < n; ++i)
    part.classes[part.class_of[i]].push_back(els[i]);

  // condensation + reachability closure
  std::vector<std::vector<bool>> reach(ncomp, std::vector<bool>(ncomp, false));
  for (int c = 0; c < ncomp; ++c) reach[c][c] = true;
  std::vector<std::vector<int>> cadj(ncomp);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j : adj[i])
      if (part.class_of[i] != part.class_of[j])
        cadj[part.class_of[i]].push_back(part.class_of[j]);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> todo = {c};
    while (!todo.empty()) {
      int u = todo.back();
      todo.pop_back();
      for (int w : cadj[u])
        if (!reach[c][w]) {
          reach[c][w] = true;
          todo.push_back(w);
        }
    }
  }
  part.leq = std::move(reach);
  return part;
}

// Directed mu-graph edges.  An edge x -> y means y is reachable from x in
// one step of the chosen preorder: mu_sym(x,y) != 0 and the (left/right)
// descent set of y is not contained in that of x.
std::vector<std::vector<std::uint32_t>> mu_edges(const HeckeAlgebra& h,
                                                 CellKind kind) {
  const CoxeterGroup& g = h.group();
  std::size_t n = g.size();
  auto els = g.elements();

  std::vector<std::uint32_t> lmask(n), rmask(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    lmask[i] = g.left_descent_mask(els[i]);
    rmask[i] = g.right_descent_mask(els[i]);
  }
  auto not_subset = [](std::uint32_t a, std::uint32_t b) {
    return (a & ~b) != 0;  // a is not contained in b
  };

  std::vector<std::vector<std::uint32_t>> adj(n);
  bool left = kind == CellKind::Left || kind == CellKind::TwoSided;
  bool right = kind == CellKind::Right || kind == CellKind::TwoSided;
  for (std::uint32_t y = 0; y < n; ++y) {
    for (const auto& [x_el, p] : h.kl_basis_element(els[y]).c) {
      std::uint32_t x = x_el.idx;
      if (x == y || p.coeff(1) == 0) continue;
      // mu(x, y) != 0; candidate edges both ways
      if (left) {
        if (not_subset(lmask[y], lmask[x])) adj[x].push_back(y);
        if (not_subset(lmask[x], lmask[y])) adj[y].push_back(x);
      }
      if (right) {
        if (not_subset(rmask[y], rmask[x])) adj[x].push_back(y);
        if (not_subset(rmask[x], rmask[y])) adj[y].push_back(x);
      }
    }
  }
  return adj;
}

} // namespace

CellPartition compute_cells(const HeckeAlgebra& h, CellKind kind) {
  return partition_from_edges(h, kind, mu_edges(h, kind));
}

const CellPartition& CellData::partition(CellKind kind) const {
  int k = static_cast<int>(kind);
  if (!parts_done_[k]) {
    parts_[k] = compute_cells(*h_, kind);
    parts_done_[k] = true;
  }
  return parts_[k];
}

void CellData::ensure_a() const {
  if (a_done_) return;
  const CoxeterGroup& g = h_->group();
  std::size_t n = g.size();
  auto els = g.elements();
  const auto& two = partition(CellKind::TwoSided);

  std::vector<int> amax(two.classes.size(), 0);
  // For each x, build the KL coordinates of kl(x) * kl(y) for every y by
  // induction along reduced words:
  //   kl(y) = kl(y') * kl(s) - sum_z mu(z,y') kl(z)   (s a right descent)
  // and keep the maximal degree of the kl(w)-coefficient over triples
  // (x, y, w) in one two-sided cell.
  for (std::uint32_t xi = 0; xi < n; ++xi) {
    int cx = two.class_of[xi];
    std::vector<std::map<Element, Laurent>> rows(n);
    rows[0] = {{els[xi], Laurent(1)}};
    for (std::uint32_t yi = 1; yi < n; ++yi) {
      const auto& word = g.word(els[yi]);
      int s = word.back();
      Element yp = g.mult_gen_right(els[yi], s);
      rows[yi] = h_->mult_kl_by_gen(rows[yp.idx], s);
      for (const auto& [z, hp] : h_->kl_basis_element(yp).c) {
        Int m = hp.coeff(1);
        if (m == 0 || z == yp) continue;
        if (g.length(g.mult_gen_right(z, s)) > g.length(z)) continue;
        // rows[yi] -= m * rows[z]
        for (const auto& [w, c] : rows[z.idx]) {
          auto it = rows[yi].find(w);
          Laurent sub = c * Laurent(m);
          if (it == rows[yi].end()) {
            rows[yi].emplace(w, -sub);
          } else {
            it->second -= sub;
            if (it->second.is_zero()) rows[yi].erase(it);
          }
        }
      }
      if (two.class_of[yi] != cx) continue;
      for (const auto& [w, c] : rows[yi])
        if (two.class_of[w.idx] == cx && c.degree() > amax[cx])
          amax[cx] = c.degree();
    }
  }

  a_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) a_[i] = amax[two.class_of[i]];
  a_done_ = true;
}

int CellData::a(Element w) const {
  h_->group().length(w);  // validates the handle
  ensure_a();
  return a_[w.idx];
}

const DufloData& CellData::duflo() const {
  if (duflo_done_) return duflo_;
  const CoxeterGroup& g = h_->group();
  const auto& left = partition(CellKind::Left);
  ensure_a();

  DufloData data;
  data.per_left_cell.resize(left.classes.size(), Element{});
  std::vector<int> found(left.classes.size(), 0);
  for (Element z : g.elements()) {
    if (g.multiply(z, z) != g.identity()) continue;
    // candidate iff a(z) equals the v-valuation of h_{e,z}
    const Laurent& he = h_->kl_poly(g.identity(), z);
    if (he.is_zero())
      throw std::logic_error("h_{e,z} vanished; identity must be Bruhat-minimal");
    if (a_[z.idx] != he.valuation()) continue;
    int cid = left.class_of[z.idx];
    ++found[cid];
    data.per_left_cell[cid] = z;
    data.duflo.push_back(z);
  }
  for (std::size_t cid = 0; cid < found.size(); ++cid)
    if (found[cid] != 1)
      throw CriterionAmbiguous(
          "left cell " + std::to_string(cid) + " has " +
          std::to_string(found[cid]) + " Duflo candidates instead of 1");
  std::sort(data.duflo.begin(), data.duflo.end());
  duflo_ = std::move(data);
  duflo_done_ = true;
  return duflo_;
}

int a_function(const HeckeAlgebra& h, Element w) {
  CellData cd(h);
  return cd.a(w);
}

DufloData duflo_involutions(const HeckeAlgebra& h) {
  CellData cd(h);
  return cd.duflo();
}

} // namespace klcy

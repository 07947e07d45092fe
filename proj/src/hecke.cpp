#include "klcy/hecke.hpp"

#include <mutex>

namespace klcy {

namespace {
const Laurent kZero{};
} // namespace

const Laurent& HeckeElt::coeff(Element w) const {
  auto it = c.find(w);
  return it == c.end() ? kZero : it->second;
}

void HeckeElt::add(Element w, const Laurent& p) {
  if (p.is_zero()) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) c.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, p] : o.c) add(w, p);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, p] : o.c) add(w, -p);
  return *this;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  r += o;
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  r -= o;
  return r;
}

HeckeElt HeckeElt::operator*(const Laurent& p) const {
  HeckeElt r;
  if (p.is_zero()) return r;
  for (const auto& [w, q] : c) r.c.emplace(w, q * p);
  return r;
}

HeckeAlgebra::HeckeAlgebra(const CoxeterGroup& w) : w_(&w) {
  kl_.resize(w.size());
  kl_done_.resize(w.size(), false);
}

void HeckeAlgebra::check(Element w) const {
  if (w.gid != w_->gid()) throw ShapeMismatch("element from a different system");
  w_->length(w);  // validates the index
}

HeckeElt HeckeAlgebra::unit(Element w) const {
  check(w);
  HeckeElt h;
  h.c.emplace(w, Laurent(1));
  return h;
}

HeckeElt HeckeAlgebra::mult_standard(const HeckeElt& a, const HeckeElt& b) const {
  const Laurent vdiff = Laurent::v(-1) - Laurent::v(1);  // v^-1 - v
  HeckeElt out;
  for (const auto& [y, cy] : b.c) {
    check(y);
    // a * H_y, one generator of a reduced word at a time
    HeckeElt cur = a;
    for (std::uint8_t s : w_->word(y)) {
      HeckeElt next;
      for (const auto& [x, cx] : cur.c) {
        Element xs = w_->mult_gen_right(x, s);
        if (w_->length(xs) > w_->length(x)) {
          next.add(xs, cx);
        } else {
          next.add(xs, cx);
          next.add(x, cx * vdiff);
        }
      }
      cur = std::move(next);
    }
    out += cur * cy;
  }
  return out;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& a) const {
  // bar(H_s) = H_s^{-1} = H_s + (v - v^-1) H_e; extend along reduced words
  const Laurent vdiff = Laurent::v(1) - Laurent::v(-1);
  HeckeElt out;
  for (const auto& [x, cx] : a.c) {
    check(x);
    HeckeElt cur = unit(w_->identity());
    for (std::uint8_t s : w_->word(x)) {
      HeckeElt gen;
      gen.c.emplace(w_->generator(s), Laurent(1));
      gen.add(w_->identity(), vdiff);
      cur = mult_standard(cur, gen);
    }
    out += cur * cx.bar();
  }
  return out;
}

const std::map<std::uint32_t, Laurent>& HeckeAlgebra::column(std::uint32_t y) const {
  if (kl_done_[y]) return kl_[y];
  auto el = [&](std::uint32_t i) { return Element{w_->gid(), i}; };
  std::map<std::uint32_t, Laurent> col;
  if (y == 0) {
    col.emplace(0u, Laurent(1));
  } else {
    int s = w_->word(el(y))[0];  // ShortLex-first left descent
    std::uint32_t yp = w_->mult_gen_left(s, el(y)).idx;
    const auto& base = column(yp);

    // (H_s + v H_e) * kl_basis_element(y')
    const Laurent vminus = Laurent::v(-1) - Laurent::v(1);
    auto add_to = [&col](std::uint32_t i, const Laurent& p) {
      if (p.is_zero()) return;
      auto it = col.find(i);
      if (it == col.end()) col.emplace(i, p);
      else {
        it->second += p;
        if (it->second.is_zero()) col.erase(it);
      }
    };
    for (const auto& [x, h] : base) {
      Element sx = w_->mult_gen_left(s, el(x));
      if (w_->length(sx) > w_->length(el(x))) {
        add_to(sx.idx, h);
      } else {
        add_to(sx.idx, h);
        add_to(x, h * vminus);
      }
      add_to(x, h * Laurent::v(1));
    }

    // correction terms: subtract mu(z, y') kl_basis_element(z) when sz < z
    // (collect first: the recursive column() call may rehash memo storage)
    std::vector<std::pair<std::uint32_t, Int>> corr;
    for (const auto& [z, h] : base) {
      Int m = h.coeff(1);
      if (m == 0) continue;
      Element sz = w_->mult_gen_left(s, el(z));
      if (w_->length(sz) < w_->length(el(z))) corr.emplace_back(z, m);
    }
    for (const auto& [z, m] : corr) {
      const auto& zcol = column(z);
      Laurent mm(m);
      for (const auto& [x, h] : zcol) add_to(x, -(h * mm));
    }
  }
  kl_[y] = std::move(col);
  kl_done_[y] = true;
  return kl_[y];
}

const HeckeElt& HeckeAlgebra::kl_basis_element(Element y) const {
  check(y);
  auto it = kl_elt_.find(y.idx);
  if (it != kl_elt_.end()) return it->second;
  HeckeElt h;
  for (const auto& [x, p] : column(y.idx))
    h.c.emplace(Element{w_->gid(), x}, p);
  return kl_elt_.emplace(y.idx, std::move(h)).first->second;
}

const Laurent& HeckeAlgebra::kl_poly(Element x, Element y) const {
  check(x);
  check(y);
  const auto& col = column(y.idx);
  auto it = col.find(x.idx);
  return it == col.end() ? kZero : it->second;
}

Int HeckeAlgebra::mu(Element x, Element y) const {
  return kl_poly(x, y).coeff(1);
}

Int HeckeAlgebra::mu_sym(Element x, Element y) const {
  int lx = w_->length(x), ly = w_->length(y);
  if (lx < ly) return mu(x, y);
  if (ly < lx) return mu(y, x);
  return 0;
}

std::map<Element, Laurent> HeckeAlgebra::mult_kl(Element x, Element y) const {
  HeckeElt p = mult_standard(kl_basis_element(x), kl_basis_element(y));
  std::map<Element, Laurent> out;
  // unitriangular back-substitution; the last key has maximal length
  while (!p.c.empty()) {
    auto it = std::prev(p.c.end());
    Element w = it->first;
    Laurent coeff = it->second;
    p -= kl_basis_element(w) * coeff;
    out.emplace(w, std::move(coeff));
  }
  return out;
}

std::map<Element, Laurent> HeckeAlgebra::mult_kl_by_gen(
    const std::map<Element, Laurent>& coords, int s) const {
  const Laurent vpair = Laurent::v(1) + Laurent::v(-1);
  std::map<Element, Laurent> out;
  auto add_to = [&out](Element w, const Laurent& p) {
    if (p.is_zero()) return;
    auto it = out.find(w);
    if (it == out.end()) out.emplace(w, p);
    else {
      it->second += p;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [w, cw] : coords) {
    check(w);
    Element ws = w_->mult_gen_right(w, s);
    if (w_->length(ws) < w_->length(w)) {
      add_to(w, cw * vpair);
      continue;
    }
    add_to(ws, cw);
    for (const auto& [z, h] : column(w.idx)) {
      Int m = h.coeff(1);
      if (m == 0) continue;
      Element ze{w_->gid(), z};
      Element zs = w_->mult_gen_right(ze, s);
      if (w_->length(zs) < w_->length(ze)) add_to(ze, cw * Laurent(m));
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::act_theta(const HeckeElt& h, Element w) const {
  return mult_standard(h, kl_basis_element(w));
}

namespace {

// degree position of the dual-standard copy contributed by the v^j term
// of h_{x,w}, inside the 0..2*len(w0) window
int degree_position(int lw0, int lw, int lx, int j) {
  return 2 * lw0 - lw - lx + j;
}

std::vector<long long> raw_graded_vector(const HeckeAlgebra& h, Element w) {
  const CoxeterGroup& g = h.group();
  int lw0 = g.length(g.longest_element());
  int lw = g.length(w);
  std::vector<long long> vec(2 * lw0 + 1, 0);
  for (Element x : g.elements()) {
    const Laurent& p = h.kl_poly(x, w);
    if (p.is_zero()) continue;
    for (const auto& [j, c] : p.terms()) {
      int d = degree_position(lw0, lw, g.length(x), j);
      if (d < 0 || d >= static_cast<int>(vec.size()))
        throw ConventionUncalibrated("degree position out of window");
      vec[d] += static_cast<long long>(c);
    }
  }
  return vec;
}

void ensure_calibrated() {
  static std::once_flag flag;
  static bool ok = false;
  std::call_once(flag, [] {
    CoxeterGroup s4 = CoxeterGroup::type_a(3);
    HeckeAlgebra h(s4);
    Element w0 = s4.longest_element();
    Element w0s2 = s4.mult_gen_right(w0, 1);
    std::vector<long long> v1 = {1, 0, 3, 0, 5, 0, 6, 0, 5, 0, 3, 0, 1};
    std::vector<long long> v2 = {0, 0, 1, 0, 4, 0, 7, 0, 7, 0, 4, 0, 1};
    ok = raw_graded_vector(h, w0) == v1 && raw_graded_vector(h, w0s2) == v2;
  });
  if (!ok)
    throw ConventionUncalibrated(
        "degree placement rule does not reproduce the S4 fixtures");
}

} // namespace

std::vector<long long> HeckeAlgebra::graded_injective_dim_vector(Element w) const {
  check(w);
  if (!w_->is_type_a())
    throw DomainError("graded dimension vectors are calibrated for type A only");
  ensure_calibrated();
  return raw_graded_vector(*this, w);
}

} // namespace klcy

#include "klcy/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace klcy {

namespace {

std::uint64_t next_gid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

constexpr std::uint32_t kUnknown = 0xffffffffu;

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

} // namespace

CoxeterGroup CoxeterGroup::type_a(int rank, std::size_t cap) {
  if (rank < 1) throw DomainError("type A rank must be >= 1");
  CoxeterGroup g;
  g.gid_ = next_gid();
  g.rank_ = rank;
  g.type_a_n_ = rank + 1;
  g.matrix_.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) {
    g.matrix_[i][i] = 1;
    if (i + 1 < rank) g.matrix_[i][i + 1] = g.matrix_[i + 1][i] = 3;
  }
  g.build_type_a(rank + 1, cap);
  g.finish_tables();
  return g;
}

CoxeterGroup CoxeterGroup::from_matrix(const std::vector<std::vector<int>>& m,
                                       std::size_t cap) {
  int r = static_cast<int>(m.size());
  if (r < 1 || r > 250) throw DomainError("coxeter matrix rank out of range");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(m[i].size()) != r)
      throw ShapeMismatch("coxeter matrix is not square");
    if (m[i][i] != 1) throw DomainError("coxeter matrix diagonal must be 1");
    for (int j = 0; j < r; ++j) {
      if (m[i][j] != m[j][i]) throw DomainError("coxeter matrix must be symmetric");
      if (i != j && m[i][j] < 2) throw DomainError("off-diagonal entries must be >= 2");
    }
  }
  CoxeterGroup g;
  g.gid_ = next_gid();
  g.rank_ = r;
  g.matrix_ = m;
  g.build_general(cap);
  g.finish_tables();
  return g;
}

void CoxeterGroup::build_type_a(int n, std::size_t cap) {
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) {
    fact *= static_cast<std::size_t>(k);
    if (fact > cap)
      throw CapExceeded("S_" + std::to_string(n) + " exceeds element cap " +
                        std::to_string(cap));
  }

  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  struct Row {
    int len;
    std::vector<std::uint8_t> word;
    std::vector<std::uint8_t> perm;
    bool operator<(const Row& o) const {
      if (len != o.len) return len < o.len;
      return word < o.word;
    }
  };
  std::vector<Row> all;
  all.reserve(fact);
  do {
    // ShortLex word: repeatedly strip the smallest left descent.
    // s is a left descent of w iff value s sits right of value s+1.
    std::vector<std::uint8_t> w = p;
    std::vector<std::uint8_t> posv(n);
    for (int i = 0; i < n; ++i) posv[w[i]] = static_cast<std::uint8_t>(i);
    std::vector<std::uint8_t> word;
    for (;;) {
      int s = -1;
      for (int k = 0; k + 1 < n; ++k)
        if (posv[k] > posv[k + 1]) { s = k; break; }
      if (s < 0) break;
      word.push_back(static_cast<std::uint8_t>(s));
      std::swap(w[posv[s]], w[posv[s + 1]]);
      std::swap(posv[s], posv[s + 1]);
    }
    all.push_back(Row{static_cast<int>(word.size()), std::move(word), p});
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(all.begin(), all.end());

  perms_.reserve(all.size());
  lengths_.reserve(all.size());
  words_.reserve(all.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    perms_.push_back(std::move(all[i].perm));
    words_.push_back(std::move(all[i].word));
    lengths_.push_back(static_cast<std::uint16_t>(all[i].len));
    perm_index_.emplace(perms_.back(), i);
  }

  right_.assign(rank_, std::vector<std::uint32_t>(perms_.size()));
  left_.assign(rank_, std::vector<std::uint32_t>(perms_.size()));
  for (std::uint32_t i = 0; i < perms_.size(); ++i) {
    for (int s = 0; s < rank_; ++s) {
      auto q = perms_[i];
      std::swap(q[s], q[s + 1]);  // w * s: swap positions
      right_[s][i] = perm_index_.at(q);
      q = perms_[i];
      for (auto& x : q) {         // s * w: swap values
        if (x == s) x = static_cast<std::uint8_t>(s + 1);
        else if (x == s + 1) x = static_cast<std::uint8_t>(s);
      }
      left_[s][i] = perm_index_.at(q);
    }
  }

}

void CoxeterGroup::build_general(std::size_t cap) {
  words_.push_back({});
  lengths_.push_back(0);
  right_.assign(rank_, {});
  for (int s = 0; s < rank_; ++s) right_[s].push_back(kUnknown);

  std::vector<std::uint32_t> layer = {0};
  while (!layer.empty()) {
    // candidates (x, g) with length(x*g) = length(x) + 1
    std::vector<std::pair<std::uint32_t, int>> cand;
    std::map<std::pair<std::uint32_t, int>, std::uint32_t> cand_id;
    for (std::uint32_t x : layer)
      for (int g = 0; g < rank_; ++g)
        if (right_[g][x] == kUnknown) {
          cand_id.emplace(std::make_pair(x, g),
                          static_cast<std::uint32_t>(cand.size()));
          cand.emplace_back(x, g);
        }
    if (cand.empty()) break;

    UnionFind uf(cand.size());
    for (std::uint32_t ci = 0; ci < cand.size(); ++ci) {
      auto [x, g] = cand[ci];
      for (int t = 0; t < rank_; ++t) {
        if (t == g) continue;
        int m = matrix_[g][t];
        // walk down from x alternating t,g,... for m-1 steps
        std::uint32_t u = x;
        bool ok = true;
        for (int k = 0; k < m - 1; ++k) {
          int letter = (k % 2 == 0) ? t : g;
          std::uint32_t nu = right_[letter][u];
          if (nu == kUnknown || lengths_[nu] >= lengths_[u]) { ok = false; break; }
          u = nu;
        }
        if (!ok) continue;
        // ascend by the complementary alternating word ending in g
        for (int k = 0; k < m - 1; ++k) {
          int letter = ((m - 2 - k) % 2 == 0) ? g : t;
          std::uint32_t nu = right_[letter][u];
          if (nu == kUnknown || lengths_[nu] <= lengths_[u])
            throw std::logic_error("coxeter table: ascent chain broke");
          u = nu;
        }
        auto it = cand_id.find({u, t});
        if (it == cand_id.end())
          throw std::logic_error("coxeter table: matched candidate missing");
        uf.unite(ci, it->second);
      }
    }

    // one new element per class; ShortLex word = min over class
    std::map<std::uint32_t, std::uint32_t> class_elem;
    std::vector<std::uint32_t> new_layer;
    for (std::uint32_t ci = 0; ci < cand.size(); ++ci) {
      auto [x, g] = cand[ci];
      std::vector<std::uint8_t> w = words_[x];
      w.push_back(static_cast<std::uint8_t>(g));
      std::uint32_t root = uf.find(ci);
      auto it = class_elem.find(root);
      std::uint32_t z;
      if (it == class_elem.end()) {
        z = static_cast<std::uint32_t>(words_.size());
        if (words_.size() + 1 > cap)
          throw CapExceeded("enumeration exceeded element cap " +
                            std::to_string(cap) + " (group infinite or cap too low)");
        words_.push_back(w);
        lengths_.push_back(static_cast<std::uint16_t>(lengths_[x] + 1));
        for (int s = 0; s < rank_; ++s) right_[s].push_back(kUnknown);
        class_elem.emplace(root, z);
        new_layer.push_back(z);
      } else {
        z = it->second;
        if (w < words_[z]) words_[z] = w;
      }
      right_[g][x] = z;
      right_[g][z] = x;
    }
    layer = std::move(new_layer);
  }

  // re-sort each layer by word (ShortLex) and remap tables
  std::vector<std::uint32_t> order(words_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
    return words_[a] < words_[b];
  });
  std::vector<std::uint32_t> pos(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<std::vector<std::uint8_t>> words2(words_.size());
  std::vector<std::uint16_t> len2(words_.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    words2[i] = std::move(words_[order[i]]);
    len2[i] = lengths_[order[i]];
  }
  words_ = std::move(words2);
  lengths_ = std::move(len2);
  std::vector<std::vector<std::uint32_t>> right2(rank_,
      std::vector<std::uint32_t>(words_.size()));
  for (int s = 0; s < rank_; ++s)
    for (std::uint32_t i = 0; i < words_.size(); ++i)
      right2[s][i] = pos[right_[s][order[i]]];
  right_ = std::move(right2);

  // left table by word evaluation
  left_.assign(rank_, std::vector<std::uint32_t>(words_.size()));
  for (int s = 0; s < rank_; ++s)
    for (std::uint32_t i = 0; i < words_.size(); ++i) {
      std::uint32_t u = right_[s][0];
      for (std::uint8_t a : words_[i]) u = right_[a][u];
      left_[s][i] = u;
    }
}

void CoxeterGroup::finish_tables() {
  inverse_.resize(words_.size());
  for (std::uint32_t i = 0; i < words_.size(); ++i) {
    std::uint32_t u = 0;
    const auto& w = words_[i];
    for (auto it = w.rbegin(); it != w.rend(); ++it) u = right_[*it][u];
    inverse_[i] = u;
  }
}

void CoxeterGroup::check(Element w) const {
  if (w.gid != gid_ || w.idx >= words_.size())
    throw ShapeMismatch("element does not belong to this Coxeter system");
}

Element CoxeterGroup::generator(int s) const {
  if (s < 0 || s >= rank_) throw DomainError("generator index out of range");
  return handle(right_[s][0]);
}

std::vector<Element> CoxeterGroup::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.push_back(handle(i));
  return out;
}

int CoxeterGroup::length(Element w) const {
  check(w);
  return lengths_[w.idx];
}

Element CoxeterGroup::multiply(Element a, Element b) const {
  check(a); check(b);
  if (is_type_a()) {
    const auto& pa = perms_[a.idx];
    const auto& pb = perms_[b.idx];
    std::vector<std::uint8_t> q(pa.size());
    for (std::size_t k = 0; k < pa.size(); ++k) q[k] = pa[pb[k]];
    return handle(perm_index_.at(q));
  }
  std::uint32_t u = a.idx;
  for (std::uint8_t s : words_[b.idx]) u = right_[s][u];
  return handle(u);
}

Element CoxeterGroup::inverse(Element w) const {
  check(w);
  return handle(inverse_[w.idx]);
}

Element CoxeterGroup::mult_gen_right(Element w, int s) const {
  check(w);
  if (s < 0 || s >= rank_) throw DomainError("generator index out of range");
  return handle(right_[s][w.idx]);
}

Element CoxeterGroup::mult_gen_left(int s, Element w) const {
  check(w);
  if (s < 0 || s >= rank_) throw DomainError("generator index out of range");
  return handle(left_[s][w.idx]);
}

std::uint32_t CoxeterGroup::left_descent_mask(Element w) const {
  check(w);
  std::uint32_t m = 0;
  for (int s = 0; s < rank_; ++s)
    if (lengths_[left_[s][w.idx]] < lengths_[w.idx]) m |= (1u << s);
  return m;
}

std::uint32_t CoxeterGroup::right_descent_mask(Element w) const {
  check(w);
  std::uint32_t m = 0;
  for (int s = 0; s < rank_; ++s)
    if (lengths_[right_[s][w.idx]] < lengths_[w.idx]) m |= (1u << s);
  return m;
}

std::vector<int> CoxeterGroup::left_descents(Element w) const {
  std::uint32_t m = left_descent_mask(w);
  std::vector<int> out;
  for (int s = 0; s < rank_; ++s) if (m & (1u << s)) out.push_back(s);
  return out;
}

std::vector<int> CoxeterGroup::right_descents(Element w) const {
  std::uint32_t m = right_descent_mask(w);
  std::vector<int> out;
  for (int s = 0; s < rank_; ++s) if (m & (1u << s)) out.push_back(s);
  return out;
}

bool CoxeterGroup::bruhat_leq(Element x, Element y) const {
  check(x); check(y);
  if (lengths_[x.idx] > lengths_[y.idx]) return false;
  if (x.idx == y.idx) return true;
  auto key = std::make_pair(x.idx, y.idx);
  auto it = bruhat_memo_.find(key);
  if (it != bruhat_memo_.end()) return it->second;
  std::uint32_t u = x.idx;
  const auto& w = words_[y.idx];
  for (auto r = w.rbegin(); r != w.rend(); ++r) {
    std::uint32_t nu = right_[*r][u];
    if (lengths_[nu] < lengths_[u]) u = nu;
  }
  bool ok = (u == 0);
  bruhat_memo_.emplace(key, ok);
  return ok;
}

Element CoxeterGroup::longest_element() const {
  return handle(static_cast<std::uint32_t>(size() - 1));
}

Element CoxeterGroup::w0_mult(Element w) const {
  return multiply(longest_element(), w);
}

Element CoxeterGroup::w0_conjugate(Element w) const {
  return multiply(multiply(longest_element(), w), longest_element());
}

const std::vector<std::uint8_t>& CoxeterGroup::word(Element w) const {
  check(w);
  return words_[w.idx];
}

std::vector<int> CoxeterGroup::one_line(Element w) const {
  check(w);
  if (!is_type_a()) throw DomainError("one-line form only exists in type A");
  std::vector<int> out(perms_[w.idx].size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = perms_[w.idx][i] + 1;
  return out;
}

Element CoxeterGroup::from_word(const std::vector<int>& word) const {
  std::uint32_t u = 0;
  for (int s : word) {
    if (s < 0 || s >= rank_) throw DomainError("word letter out of range");
    u = right_[s][u];
  }
  return handle(u);
}

Element CoxeterGroup::from_one_line(const std::vector<int>& perm) const {
  if (!is_type_a()) throw DomainError("one-line form only exists in type A");
  if (static_cast<int>(perm.size()) != type_a_n_)
    throw ShapeMismatch("one-line length does not match rank+1");
  std::vector<std::uint8_t> p(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 1 || perm[i] > type_a_n_ || seen[perm[i] - 1])
      throw DomainError("not a permutation of 1..n");
    seen[perm[i] - 1] = true;
    p[i] = static_cast<std::uint8_t>(perm[i] - 1);
  }
  return handle(perm_index_.at(p));
}

std::string CoxeterGroup::name(Element w) const {
  check(w);
  if (is_type_a() && type_a_n_ <= 9) {
    std::string s;
    for (auto x : perms_[w.idx]) s += static_cast<char>('1' + x);
    return s;
  }
  if (words_[w.idx].empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (auto s : words_[w.idx]) {
    if (!first) os << "*";
    os << "s" << (static_cast<int>(s) + 1);
    first = false;
  }
  return os.str();
}

} // namespace klcy

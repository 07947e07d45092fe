#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klcy/errors.hpp"

namespace klcy {

// A finite Coxeter group, fully enumerated on construction.
//
// Elements are exposed as lightweight handles (group id + index into the
// element table, which is sorted by (length, normal form)).  Type A groups
// use one-line permutations as the normal form and fast multiplication;
// groups given by an arbitrary Coxeter matrix are built layer by layer,
// identifying new elements through the dihedral descent-chain rule, and use
// ShortLex-minimal reduced words as normal forms.

struct Element {
  std::uint64_t gid = 0;
  std::uint32_t idx = 0;
  bool operator==(const Element& o) const = default;
  auto operator<=>(const Element& o) const = default;
};

class CoxeterGroup {
public:
  static constexpr std::size_t kDefaultCap = 50000;

  // S_{rank+1}, i.e. Cartan type A_rank.
  static CoxeterGroup type_a(int rank, std::size_t cap = kDefaultCap);
  // General finite type from a Coxeter matrix (m[i][i]=1, m[i][j]>=2).
  static CoxeterGroup from_matrix(const std::vector<std::vector<int>>& m,
                                  std::size_t cap = kDefaultCap);

  int rank() const { return rank_; }
  std::size_t size() const { return words_.size(); }
  std::uint64_t gid() const { return gid_; }
  bool is_type_a() const { return type_a_n_ > 0; }
  // one-line size for type A (= rank+1), 0 otherwise
  int permutation_size() const { return type_a_n_; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return matrix_; }

  Element identity() const { return handle(0); }
  Element generator(int s) const;             // 0-based
  std::vector<Element> elements() const;      // sorted by (length, normal form)

  int length(Element w) const;
  Element multiply(Element a, Element b) const;
  Element inverse(Element w) const;
  Element mult_gen_right(Element w, int s) const;  // w * s
  Element mult_gen_left(int s, Element w) const;   // s * w

  std::uint32_t left_descent_mask(Element w) const;
  std::uint32_t right_descent_mask(Element w) const;
  std::vector<int> left_descents(Element w) const;
  std::vector<int> right_descents(Element w) const;

  // Bruhat order via the greedy subword test on a fixed reduced word.
  bool bruhat_leq(Element x, Element y) const;

  Element longest_element() const;
  Element w0_mult(Element w) const;       // w0 * w
  Element w0_conjugate(Element w) const;  // w0 * w * w0

  // ShortLex-minimal reduced word (0-based generator indices).
  const std::vector<std::uint8_t>& word(Element w) const;
  // one-line permutation of {1..n}; type A only
  std::vector<int> one_line(Element w) const;

  Element from_word(const std::vector<int>& word) const;    // 0-based letters
  Element from_one_line(const std::vector<int>& perm) const; // type A only

  std::string name(Element w) const;  // "e", "s1*s2", or one-line "2143"

private:
  CoxeterGroup() = default;
  void check(Element w) const;
  Element handle(std::uint32_t i) const { return Element{gid_, i}; }
  void build_type_a(int n, std::size_t cap);
  void build_general(std::size_t cap);
  void finish_tables();

  std::uint64_t gid_ = 0;
  int rank_ = 0;
  int type_a_n_ = 0;  // permutation degree for type A, else 0
  std::vector<std::vector<int>> matrix_;

  std::vector<std::vector<std::uint8_t>> words_;   // ShortLex normal forms
  std::vector<std::vector<std::uint8_t>> perms_;   // type A only (0-based images)
  std::vector<std::uint16_t> lengths_;
  std::vector<std::uint32_t> inverse_;
  // right_[s][i] = index of elements_[i] * s ; left_[s][i] = s * elements_[i]
  std::vector<std::vector<std::uint32_t>> right_, left_;
  std::map<std::vector<std::uint8_t>, std::uint32_t> perm_index_;  // type A

  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, bool> bruhat_memo_;
};

} // namespace klcy

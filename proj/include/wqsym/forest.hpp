#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "wqsym/packed_word.hpp"

namespace wqsym {

/// Node(I, left, right): a root labeled by a position list with an ordered
/// left forest and an ordered right forest.
struct BiplaneTree {
  PositionSet label;
  std::vector<BiplaneTree> left;
  std::vector<BiplaneTree> right;

  friend bool operator==(const BiplaneTree&, const BiplaneTree&) = default;
  friend std::strong_ordering operator<=>(const BiplaneTree& a,
                                          const BiplaneTree& b);
};

using Forest = std::vector<BiplaneTree>;

/// Leaf shorthand: Node(label, [], []).
BiplaneTree leaf(PositionSet label);
BiplaneTree node(PositionSet label, Forest left, Forest right);

/// p + weight(left) + weight(right)
std::size_t weight(const BiplaneTree& t);
std::size_t weight(const Forest& f);
/// p + weight(right)
std::size_t right_weight(const BiplaneTree& t);

/// Checks the label constraints of a packed tree at every node:
/// with no right children the label is {1..p}; otherwise
/// 1 <= i_1 <= w(r_1) and 1 <= w_r(t) + 1 - i_p <= w(r_d).
bool is_packed_tree(const BiplaneTree& t);
bool is_packed_forest(const Forest& f);

/// Whether Node(I, [], f) satisfies the root constraint, i.e. f lies in the
/// constrained family for I. The empty forest qualifies only for I = {1..p}.
bool satisfies_max_constraint(const Forest& f, const PositionSet& I);

/// F(w): one tree per irreducible factor of w.
Forest word_to_forest(const PackedWord& w);
/// T(w) = Node(I, F(u), F(v)) for w = u |> phi_I(v) with |u| maximal.
/// Throws std::invalid_argument on empty or reducible input.
BiplaneTree word_to_tree(const PackedWord& w);

/// Inverse bijection. Throws std::invalid_argument on non-packed input.
PackedWord forest_to_word(const Forest& f);
PackedWord tree_to_word(const BiplaneTree& t);

/// Packed forests of weight n, in the order of their words.
std::vector<Forest> enumerate_forests(std::size_t n);
/// Packed trees of weight n (images of irreducible words).
std::vector<BiplaneTree> enumerate_trees(std::size_t n);
/// Packed trees of weight n with empty left forest.
std::vector<BiplaneTree> enumerate_tprim_trees(std::size_t n);
/// Forests f of weight n - |I| with Node(I, [], f) a packed tree of weight n.
std::vector<Forest> enumerate_constrained_forests(std::size_t n,
                                                  const PositionSet& I);

/// Independent generator working directly from the packed-tree conditions.
/// Forests of weight n, memoized per call; the result is sorted.
std::vector<Forest> generate_forests_direct(std::size_t n);
std::vector<BiplaneTree> generate_trees_direct(std::size_t n);

/// Indented rendering with L/R markers for left and right children.
std::string render(const BiplaneTree& t);
std::string render(const Forest& f);

}  // namespace wqsym

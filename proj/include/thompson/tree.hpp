#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

// Finite planar binary tree. A default-constructed Tree is a single leaf.
// Values are immutable and share structure, so copies are cheap.
//
// Planarity is encoded by child order: caret(leaf, caret(leaf, leaf)) and
// caret(caret(leaf, leaf), leaf) are distinct trees.
class Tree {
 public:
  Tree() = default;  // leaf

  static Tree leaf() { return Tree(); }
  static Tree caret(Tree left, Tree right);

  bool is_leaf() const { return node_ == nullptr; }
  bool is_caret() const { return node_ != nullptr; }
  // A grounded caret joins two leaves.
  bool is_grounded_caret() const;

  const Tree& left() const;   // pre: is_caret()
  const Tree& right() const;  // pre: is_caret()

  int leaf_count() const;
  int caret_count() const { return leaf_count() - 1; }
  std::size_t hash() const;

  bool operator==(const Tree& other) const;
  bool operator!=(const Tree& other) const { return !(*this == other); }

  // Appends the left-leaf index of every grounded caret, offset by `base`.
  void grounded_caret_positions(int base, std::vector<int>& out) const;

  // Replaces the grounded caret over leaves {leaf, leaf+1} by a leaf.
  // pre: such a caret exists.
  Tree without_grounded_caret(int leaf) const;

  // Replaces leaf #leaf by a grounded caret (an expansion step).
  Tree with_leaf_expanded(int leaf) const;

  // Appends, for each leaf in order, whether it is the left child of its
  // caret. The leaf of a trivial tree has no caret and gets false.
  void leaf_sides(std::vector<bool>& out) const;

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;  // nullptr = leaf
};

// Text form: "." for a leaf, "(" left right ")" for a caret.
std::string format_tree(const Tree& t);
Tree parse_tree(std::string_view text, std::size_t& pos);

}  // namespace thompson

#include "thompson/tree.hpp"

#include <cassert>

#include "thompson/errors.hpp"

namespace thompson {

struct Tree::Node {
  Tree left;
  Tree right;
  int leaves;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

constexpr std::size_t kLeafHash = 0x01000193u;

}  // namespace

Tree Tree::caret(Tree left, Tree right) {
  int leaves = left.leaf_count() + right.leaf_count();
  std::size_t h = mix(left.hash(), right.hash());
  return Tree(std::make_shared<const Node>(
      Node{std::move(left), std::move(right), leaves, h}));
}

bool Tree::is_grounded_caret() const {
  return node_ && node_->left.is_leaf() && node_->right.is_leaf();
}

const Tree& Tree::left() const {
  assert(node_);
  return node_->left;
}

const Tree& Tree::right() const {
  assert(node_);
  return node_->right;
}

int Tree::leaf_count() const { return node_ ? node_->leaves : 1; }

std::size_t Tree::hash() const { return node_ ? node_->hash : kLeafHash; }

bool Tree::operator==(const Tree& other) const {
  if (node_ == other.node_) return true;  // shared structure or both leaves
  if (!node_ || !other.node_) return false;
  if (node_->leaves != other.node_->leaves || node_->hash != other.node_->hash)
    return false;
  return node_->left == other.node_->left && node_->right == other.node_->right;
}

void Tree::grounded_caret_positions(int base, std::vector<int>& out) const {
  if (is_leaf()) return;
  if (is_grounded_caret()) {
    out.push_back(base);
    return;
  }
  node_->left.grounded_caret_positions(base, out);
  node_->right.grounded_caret_positions(base + node_->left.leaf_count(), out);
}

Tree Tree::without_grounded_caret(int leaf) const {
  assert(is_caret());
  int nl = node_->left.leaf_count();
  if (leaf == nl - 1) {
    // The pair {leaf, leaf+1} straddles this caret's split, so this caret
    // is the only one joining those leaves.
    assert(is_grounded_caret());
    return Tree::leaf();
  }
  if (leaf < nl - 1)
    return caret(node_->left.without_grounded_caret(leaf), node_->right);
  return caret(node_->left, node_->right.without_grounded_caret(leaf - nl));
}

Tree Tree::with_leaf_expanded(int leaf) const {
  if (is_leaf()) {
    assert(leaf == 0);
    return caret(Tree::leaf(), Tree::leaf());
  }
  int nl = node_->left.leaf_count();
  if (leaf < nl)
    return caret(node_->left.with_leaf_expanded(leaf), node_->right);
  return caret(node_->left, node_->right.with_leaf_expanded(leaf - nl));
}

namespace {

void leaf_sides_walk(const Tree& t, bool is_left, std::vector<bool>& out) {
  if (t.is_leaf()) {
    out.push_back(is_left);
    return;
  }
  leaf_sides_walk(t.left(), true, out);
  leaf_sides_walk(t.right(), false, out);
}

}  // namespace

void Tree::leaf_sides(std::vector<bool>& out) const {
  leaf_sides_walk(*this, false, out);
}

std::string format_tree(const Tree& t) {
  if (t.is_leaf()) return ".";
  return "(" + format_tree(t.left()) + format_tree(t.right()) + ")";
}

Tree parse_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size())
    throw ParseError("unexpected end of tree text", pos);
  char c = text[pos];
  if (c == '.') {
    ++pos;
    return Tree::leaf();
  }
  if (c == '(') {
    ++pos;
    Tree left = parse_tree(text, pos);
    Tree right = parse_tree(text, pos);
    if (pos >= text.size() || text[pos] != ')')
      throw ParseError("expected ')' in tree", pos);
    ++pos;
    return Tree::caret(std::move(left), std::move(right));
  }
  throw ParseError("expected '.' or '(' in tree", pos);
}

}  // namespace thompson

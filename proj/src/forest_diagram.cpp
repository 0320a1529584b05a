#include "thompson/forest_diagram.hpp"

#include <algorithm>
#include <cassert>

#include "thompson/errors.hpp"

namespace thompson {

int PointedForest::leaf_count() const {
  int n = 0;
  for (const Tree& t : trees) n += t.leaf_count();
  return n;
}

std::vector<int> PointedForest::leaf_starts() const {
  std::vector<int> starts;
  starts.reserve(trees.size() + 1);
  int n = 0;
  for (const Tree& t : trees) {
    starts.push_back(n);
    n += t.leaf_count();
  }
  starts.push_back(n);
  return starts;
}

std::pair<int, int> PointedForest::locate_leaf(int leaf) const {
  int n = 0;
  for (int i = 0; i < tree_count(); ++i) {
    int c = trees[i].leaf_count();
    if (leaf < n + c) return {i, leaf - n};
    n += c;
  }
  throw std::out_of_range("leaf index out of range");
}

bool PointedForest::all_trivial() const {
  for (const Tree& t : trees)
    if (t.is_caret()) return false;
  return true;
}

int PointedForest::total_carets() const {
  int n = 0;
  for (const Tree& t : trees) n += t.caret_count();
  return n;
}

std::vector<bool> PointedForest::leaf_sides() const {
  std::vector<bool> out;
  out.reserve(leaf_count());
  for (const Tree& t : trees) t.leaf_sides(out);
  return out;
}

std::size_t PointedForest::hash() const {
  std::size_t h = 0x811c9dc5u + static_cast<std::size_t>(pointer);
  for (const Tree& t : trees)
    h = t.hash() ^ (h + 0x9e3779b97f4a7c15ULL + (t.hash() << 6) + (h >> 2));
  return h;
}

std::size_t ForestDiagram::hash() const {
  std::size_t a = top.hash(), b = bottom.hash();
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

void validate(const ForestDiagram& d) {
  if (d.top.trees.empty() || d.bottom.trees.empty())
    throw StructuralError("forest window must be nonempty");
  if (d.top.pointer < 0 || d.top.pointer >= d.top.tree_count() ||
      d.bottom.pointer < 0 || d.bottom.pointer >= d.bottom.tree_count())
    throw StructuralError("pointer out of range");
  if (d.top.leaf_count() != d.bottom.leaf_count())
    throw StructuralError("top and bottom leaf counts differ");
}

namespace {

// Left-leaf indices of grounded carets present in both forests.
std::vector<int> opposing_pairs(const ForestDiagram& d) {
  std::vector<int> top_pos, bottom_pos;
  {
    int base = 0;
    for (const Tree& t : d.top.trees) {
      t.grounded_caret_positions(base, top_pos);
      base += t.leaf_count();
    }
    base = 0;
    for (const Tree& t : d.bottom.trees) {
      t.grounded_caret_positions(base, bottom_pos);
      base += t.leaf_count();
    }
  }
  std::vector<int> common;
  std::set_intersection(top_pos.begin(), top_pos.end(), bottom_pos.begin(),
                        bottom_pos.end(), std::back_inserter(common));
  return common;
}

void remove_grounded(PointedForest& f, int leaf) {
  auto [tree, offset] = f.locate_leaf(leaf);
  f.trees[tree] = f.trees[tree].without_grounded_caret(offset);
}

bool trimmable_front(const ForestDiagram& d) {
  return d.top.trees.front().is_leaf() && d.bottom.trees.front().is_leaf() &&
         d.top.pointer != 0 && d.bottom.pointer != 0;
}

bool trimmable_back(const ForestDiagram& d) {
  return d.top.trees.back().is_leaf() && d.bottom.trees.back().is_leaf() &&
         d.top.pointer != d.top.tree_count() - 1 &&
         d.bottom.pointer != d.bottom.tree_count() - 1;
}

void extend_back(ForestDiagram& d) {
  d.top.trees.push_back(Tree::leaf());
  d.bottom.trees.push_back(Tree::leaf());
}

void extend_front(ForestDiagram& d) {
  d.top.trees.insert(d.top.trees.begin(), Tree::leaf());
  d.bottom.trees.insert(d.bottom.trees.begin(), Tree::leaf());
  ++d.top.pointer;
  ++d.bottom.pointer;
}

}  // namespace

bool is_canonical(const ForestDiagram& d) {
  validate(d);
  return opposing_pairs(d).empty() && !trimmable_front(d) && !trimmable_back(d);
}

ForestDiagram canonicalize(ForestDiagram d) {
  validate(d);
  for (;;) {
    std::vector<int> common = opposing_pairs(d);
    if (common.empty()) break;
    // Grounded carets within one forest are leaf-disjoint, so the matched
    // pairs can be removed right to left without invalidating indices.
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      remove_grounded(d.top, *it);
      remove_grounded(d.bottom, *it);
    }
  }
  while (trimmable_front(d)) {
    d.top.trees.erase(d.top.trees.begin());
    d.bottom.trees.erase(d.bottom.trees.begin());
    --d.top.pointer;
    --d.bottom.pointer;
  }
  while (trimmable_back(d)) {
    d.top.trees.pop_back();
    d.bottom.trees.pop_back();
  }
  return d;
}

ForestDiagram apply_generator(Letter g, const ForestDiagram& v) {
  ForestDiagram d = v;
  switch (g) {
    case Letter::X0:
      if (d.top.pointer + 1 == d.top.tree_count()) extend_back(d);
      ++d.top.pointer;
      break;
    case Letter::X0Inv:
      if (d.top.pointer == 0)
        extend_front(d);  // shifts both pointers right by one
      --d.top.pointer;
      break;
    case Letter::X1: {
      if (d.top.pointer + 1 == d.top.tree_count()) extend_back(d);
      int p = d.top.pointer;
      Tree merged = Tree::caret(d.top.trees[p], d.top.trees[p + 1]);
      d.top.trees[p] = std::move(merged);
      d.top.trees.erase(d.top.trees.begin() + p + 1);
      break;
    }
    case Letter::X1Inv: {
      int p = d.top.pointer;
      if (d.top.trees[p].is_caret()) {
        Tree left = d.top.trees[p].left();
        Tree right = d.top.trees[p].right();
        d.top.trees[p] = std::move(left);
        d.top.trees.insert(d.top.trees.begin() + p + 1, std::move(right));
      } else {
        // Expansion: the pointed top leaf and its matched bottom leaf both
        // grow carets, then the new top caret is deleted. Net effect: the
        // bottom forest gains a grounded caret.
        int leaf = d.top.leaf_starts()[p];
        auto [btree, boffset] = d.bottom.locate_leaf(leaf);
        d.bottom.trees[btree] = d.bottom.trees[btree].with_leaf_expanded(boffset);
        d.top.trees.insert(d.top.trees.begin() + p + 1, Tree::leaf());
      }
      break;
    }
  }
  return canonicalize(std::move(d));
}

ForestDiagram inverse(const ForestDiagram& v) {
  ForestDiagram d;
  d.top = v.bottom;
  d.bottom = v.top;
  return d;  // reduction and trimming conditions are top/bottom symmetric
}

bool is_semi_positive(const ForestDiagram& v) { return v.bottom.all_trivial(); }

namespace {

Tree graft(const Tree& t, std::vector<Tree>::const_iterator& it) {
  if (t.is_leaf()) return *it++;
  Tree left = graft(t.left(), it);
  Tree right = graft(t.right(), it);
  return Tree::caret(std::move(left), std::move(right));
}

}  // namespace

ForestDiagram stack_multiply(const ForestDiagram& f, const ForestDiagram& g) {
  if (!is_semi_positive(f))
    throw std::invalid_argument("stack_multiply requires a semi-positive left factor");
  ForestDiagram h = g;
  // Leaf i of f's top forest grafts onto g's top tree j0 + i.
  int leaves = f.top.leaf_count();
  int j0 = h.top.pointer - f.bottom.pointer;
  while (j0 < 0) {
    extend_front(h);
    ++j0;
  }
  while (j0 + leaves > h.top.tree_count()) extend_back(h);

  std::vector<Tree> grafted;
  grafted.reserve(h.top.tree_count() - leaves + f.top.tree_count());
  auto it = h.top.trees.cbegin();
  for (int j = 0; j < j0; ++j) grafted.push_back(*it++);
  for (const Tree& t : f.top.trees) grafted.push_back(graft(t, it));
  while (it != h.top.trees.cend()) grafted.push_back(*it++);

  ForestDiagram out;
  out.top.trees = std::move(grafted);
  out.top.pointer = j0 + f.top.pointer;
  out.bottom = std::move(h.bottom);
  return canonicalize(std::move(out));
}

ForestDiagram multiply(const ForestDiagram& f, const ForestDiagram& g) {
  GroupWord w = to_word(f);
  ForestDiagram acc = g;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    acc = apply_generator(*it, acc);
  return acc;
}

ForestDiagram from_word(const GroupWord& w) {
  ForestDiagram acc;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    acc = apply_generator(*it, acc);
  return acc;
}

namespace {

// Emits, in application order, the ops that grow the trivial tree under
// the pointer into t, leaving the pointer on it. x1 merges the pointer
// tree with its right neighbour, so a caret is built left child first.
void build_tree_ops(const Tree& t, GroupWord& ops) {
  if (t.is_leaf()) return;
  build_tree_ops(t.left(), ops);
  if (t.right().is_leaf()) {
    ops.push_back(Letter::X1);
    return;
  }
  ops.push_back(Letter::X0);
  build_tree_ops(t.right(), ops);
  ops.push_back(Letter::X0Inv);
  ops.push_back(Letter::X1);
}

// Word w with: from_word(w) = the semi-positive element carrying `f` as
// its top forest over a trivial bottom forest pointed at position 0.
GroupWord word_for_forest(const PointedForest& f) {
  GroupWord ops;  // application order; reversed at the end
  int last_nontrivial = -1;
  for (int i = 0; i < f.tree_count(); ++i)
    if (f.trees[i].is_caret()) last_nontrivial = i;
  int reach = std::max(f.pointer, last_nontrivial);
  for (int j = 0; j <= reach; ++j) {
    if (j > 0) ops.push_back(Letter::X0);
    build_tree_ops(f.trees[j], ops);
  }
  for (int j = reach; j > f.pointer; --j) ops.push_back(Letter::X0Inv);
  return GroupWord(ops.rbegin(), ops.rend());
}

}  // namespace

GroupWord to_word(const ForestDiagram& v) {
  // v = T * B^-1 where T carries v's top forest over a trivial forest and
  // B carries v's bottom forest likewise, with matching trivial pointers.
  GroupWord wt = word_for_forest(v.top);
  GroupWord wb = word_for_forest(v.bottom);
  GroupWord out = std::move(wt);
  GroupWord binv = inverse_word(wb);
  out.insert(out.end(), binv.begin(), binv.end());
  return out;
}

std::string format_forest(const PointedForest& f) {
  std::string out;
  for (int i = 0; i < f.tree_count(); ++i) {
    if (i) out += ' ';
    if (i == f.pointer) out += '^';
    out += format_tree(f.trees[i]);
  }
  return out;
}

std::string format_diagram(const ForestDiagram& d) {
  return format_forest(d.top) + " / " + format_forest(d.bottom);
}

namespace {

PointedForest parse_forest(std::string_view text, std::size_t base) {
  PointedForest f;
  f.trees.clear();
  f.pointer = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    bool pointed = false;
    if (text[pos] == '^') {
      pointed = true;
      ++pos;
    }
    Tree t = parse_tree(text, pos);
    if (pointed) {
      if (f.pointer >= 0)
        throw ParseError("forest has more than one pointer", base + pos);
      f.pointer = f.tree_count();
    }
    f.trees.push_back(std::move(t));
  }
  if (f.trees.empty()) throw ParseError("empty forest", base);
  if (f.pointer < 0)
    throw ParseError("forest has no pointed tree", base + text.size());
  return f;
}

}  // namespace

ForestDiagram parse_diagram(std::string_view text, bool require_canonical) {
  std::size_t sep = text.find(" / ");
  if (sep == std::string_view::npos)
    throw ParseError("expected ' / ' between forests", text.size());
  ForestDiagram d;
  d.top = parse_forest(text.substr(0, sep), 0);
  d.bottom = parse_forest(text.substr(sep + 3), sep + 3);
  validate(d);
  if (require_canonical && !is_canonical(d))
    throw StructuralError(
        "diagram is not in canonical form (pass raw input to normalize)");
  return d;
}

}  // namespace thompson

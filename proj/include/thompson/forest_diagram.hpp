#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/tree.hpp"
#include "thompson/word.hpp"

namespace thompson {

// A bounded bi-infinite binary forest, stored as its finite window of
// trees plus the index of the pointed tree. Trees outside the window are
// implicitly trivial and matched to each other in order.
struct PointedForest {
  std::vector<Tree> trees{Tree::leaf()};
  int pointer = 0;

  int tree_count() const { return static_cast<int>(trees.size()); }
  int leaf_count() const;
  // Cumulative leaf offsets; size tree_count()+1, last entry = leaf_count().
  std::vector<int> leaf_starts() const;
  // Tree containing window leaf `leaf`, plus the offset inside that tree.
  std::pair<int, int> locate_leaf(int leaf) const;
  bool all_trivial() const;
  int total_carets() const;
  // For each window leaf, whether it is the left child of its caret.
  std::vector<bool> leaf_sides() const;

  bool operator==(const PointedForest& other) const {
    return pointer == other.pointer && trees == other.trees;
  }
  std::size_t hash() const;
};

// A forest diagram: top and bottom forests whose windows hold equally many
// leaves. The leaf bijection sends the i-th window leaf of the bottom to
// the i-th window leaf of the top, and trivial trees to trivial trees in
// order outside the window.
//
// The canonical (reduced and trimmed) diagrams are in bijection with the
// elements of F; a default-constructed diagram is the identity ("^. / ^.").
struct ForestDiagram {
  PointedForest top;
  PointedForest bottom;

  static ForestDiagram identity() { return ForestDiagram{}; }

  bool operator==(const ForestDiagram& other) const {
    return top == other.top && bottom == other.bottom;
  }
  bool operator!=(const ForestDiagram& other) const { return !(*this == other); }
  std::size_t hash() const;
};

// Throws StructuralError on leaf-count mismatch, bad pointer, empty window.
void validate(const ForestDiagram& d);

// Reduced (no opposing pair of grounded carets) and trimmed (no boundary
// position with both trees trivial and unpointed).
bool is_canonical(const ForestDiagram& d);

// Removes opposing grounded caret pairs until none remain, then trims the
// window. Idempotent; the result is the unique canonical representative.
ForestDiagram canonicalize(ForestDiagram d);

// Left multiplication by one generator letter. pre: v canonical.
//   x0   moves the top pointer one tree right,
//   x0^-1 one tree left (the window is extended as needed),
//   x1   merges the pointed top tree with its right neighbour under a caret,
//   x1^-1 deletes the pointed top tree's root caret, expanding first when
//         the pointed tree is trivial (which grows a grounded bottom caret).
ForestDiagram apply_generator(Letter g, const ForestDiagram& v);

// Swaps the top and bottom forests. pre: v canonical.
ForestDiagram inverse(const ForestDiagram& v);

// Trivial bottom forest, i.e. membership in the monoid <x0, x0^-1, x1>.
bool is_semi_positive(const ForestDiagram& v);

// Left multiplication computed by attaching f's top forest along its
// leaves to the roots of g's top forest, with f's bottom pointer aligned
// to g's top pointer. pre: f semi-positive. Agrees with multiply().
ForestDiagram stack_multiply(const ForestDiagram& f, const ForestDiagram& g);

// Group product f*g, computed by folding the letters of to_word(f) over g.
ForestDiagram multiply(const ForestDiagram& f, const ForestDiagram& g);

// Folds the word over the identity, rightmost letter first, so that
// from_word(w1 ++ w2) == multiply(from_word(w1), from_word(w2)).
ForestDiagram from_word(const GroupWord& w);

// Some word with from_word(to_word(v)) == v. The output builds v's top
// forest over a trivial forest, times the inverse of the same for the
// bottom forest; its length is O(carets + window width), not geodesic.
GroupWord to_word(const ForestDiagram& v);

// Text form (also the canonical hash/dedup key):
//   Tree    := "." | "(" Tree Tree ")"
//   Forest  := trees separated by single spaces, pointed tree prefixed "^"
//   Diagram := topForest " / " bottomForest
// Identity = "^. / ^.".
std::string format_forest(const PointedForest& f);
std::string format_diagram(const ForestDiagram& d);

// Parses the text form. With require_canonical (the default, used for
// group-operation inputs) a non-canonical diagram is a StructuralError.
ForestDiagram parse_diagram(std::string_view text, bool require_canonical = true);

}  // namespace thompson

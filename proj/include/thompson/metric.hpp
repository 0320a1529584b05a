#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thompson/forest_diagram.hpp"

namespace thompson {

// Space labels for the length formula. A space is the gap between two
// consecutive leaves; interior if both leaves sit in the same tree.
//   L: exterior, left of the pointed tree            (precedence first)
//   N: otherwise, and the leaf right of the space is a left child
//   I: interior and not N
//   R: exterior, right of the pointed tree, not N
enum class SpaceLabel : char { L = 'L', N = 'N', I = 'I', R = 'R' };

struct SpaceLabeling {
  int leaf_min = 0;  // support interval, in window-leaf indices
  int leaf_max = 0;
  std::vector<SpaceLabel> top_labels;     // one per space in the support
  std::vector<SpaceLabel> bottom_labels;
  std::vector<int> weights;               // pairwise weights, 0/1/2

  std::string top_string() const;
  std::string bottom_string() const;
};

struct LengthBreakdown {
  int top_carets = 0;
  int bottom_carets = 0;
  int caret_count = 0;  // l1 = top + bottom carets
  int x0_count = 0;     // l0 = sum of space-pair weights
  int total = 0;        // l = l1 + l0, the word length
};

// Weight of a space pair, symmetric in its arguments:
//   either label L: 1, except (L,L) = 2
//   either label N: 2
//   (R,R) = 2; (I,I) = (I,R) = (R,I) = 0
int pair_weight(SpaceLabel top, SpaceLabel bottom);

// Minimal leaf interval containing both pointed trees and every
// nontrivial tree. For canonical diagrams this is the whole window.
std::pair<int, int> support(const ForestDiagram& v);

SpaceLabeling label_spaces(const ForestDiagram& v);

// The length formula: l(v) = (total carets) + (sum of pair weights).
// Equals the graph distance from the identity in the Cayley graph.
LengthBreakdown length(const ForestDiagram& v);
int norm(const ForestDiagram& v);  // length(v).total

// Number of space pairs in the support.
int width(const ForestDiagram& v);

// Pointed trees' rightmost leaves are matched and every tree strictly
// right of either pointer is trivial.
bool is_left_sided(const ForestDiagram& v);

// A word of exactly norm(v) letters folding to v, found by greedy descent
// (some neighbour always has length l-1). Ties broken in the fixed letter
// order x0 < x0^-1 < x1 < x1^-1, so the output is deterministic.
GroupWord geodesic_word(const ForestDiagram& v);

// Behaviour of v under x2 = x0^-1 x1 x0. Left-sided elements commute with
// x2 and satisfy l(x2 v) = l(v) + 3.
struct X2Facts {
  bool commutes = false;
  int length_shift = 0;
};
X2Facts x2_facts(const ForestDiagram& v);

const ForestDiagram& x2_element();

}  // namespace thompson

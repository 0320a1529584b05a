#include "thompson/metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace thompson {

std::string SpaceLabeling::top_string() const {
  std::string s;
  for (SpaceLabel l : top_labels) s += static_cast<char>(l);
  return s;
}

std::string SpaceLabeling::bottom_string() const {
  std::string s;
  for (SpaceLabel l : bottom_labels) s += static_cast<char>(l);
  return s;
}

int pair_weight(SpaceLabel top, SpaceLabel bottom) {
  if (top == SpaceLabel::L || bottom == SpaceLabel::L)
    return (top == bottom) ? 2 : 1;
  if (top == SpaceLabel::N || bottom == SpaceLabel::N) return 2;
  if (top == SpaceLabel::R && bottom == SpaceLabel::R) return 2;
  return 0;
}

std::pair<int, int> support(const ForestDiagram& v) {
  auto widen = [](const PointedForest& f, int& lo, int& hi) {
    std::vector<int> starts = f.leaf_starts();
    lo = std::min(lo, starts[f.pointer]);
    hi = std::max(hi, starts[f.pointer + 1] - 1);
    for (int i = 0; i < f.tree_count(); ++i) {
      if (f.trees[i].is_caret()) {
        lo = std::min(lo, starts[i]);
        hi = std::max(hi, starts[i + 1] - 1);
      }
    }
  };
  int lo = v.top.leaf_count();  // larger than any index
  int hi = -1;
  widen(v.top, lo, hi);
  widen(v.bottom, lo, hi);
  return {lo, hi};
}

namespace {

std::vector<SpaceLabel> forest_labels(const PointedForest& f, int lo, int hi) {
  std::vector<int> tree_of(f.leaf_count());
  {
    int leaf = 0;
    for (int i = 0; i < f.tree_count(); ++i)
      for (int k = 0; k < f.trees[i].leaf_count(); ++k) tree_of[leaf++] = i;
  }
  std::vector<bool> left_child = f.leaf_sides();

  std::vector<SpaceLabel> labels;
  labels.reserve(hi - lo);
  for (int i = lo; i < hi; ++i) {  // space between leaves i and i+1
    bool exterior = tree_of[i] != tree_of[i + 1];
    if (exterior && tree_of[i + 1] <= f.pointer)
      labels.push_back(SpaceLabel::L);
    else if (left_child[i + 1])
      // For an exterior space this holds exactly when the next tree is
      // nontrivial (its leftmost leaf is then a left child).
      labels.push_back(SpaceLabel::N);
    else if (!exterior)
      labels.push_back(SpaceLabel::I);
    else
      labels.push_back(SpaceLabel::R);
  }
  return labels;
}

}  // namespace

SpaceLabeling label_spaces(const ForestDiagram& v) {
  auto [lo, hi] = support(v);
  SpaceLabeling out;
  out.leaf_min = lo;
  out.leaf_max = hi;
  out.top_labels = forest_labels(v.top, lo, hi);
  out.bottom_labels = forest_labels(v.bottom, lo, hi);
  out.weights.reserve(out.top_labels.size());
  for (std::size_t i = 0; i < out.top_labels.size(); ++i)
    out.weights.push_back(pair_weight(out.top_labels[i], out.bottom_labels[i]));
  return out;
}

LengthBreakdown length(const ForestDiagram& v) {
  LengthBreakdown b;
  b.top_carets = v.top.total_carets();
  b.bottom_carets = v.bottom.total_carets();
  b.caret_count = b.top_carets + b.bottom_carets;
  for (int w : label_spaces(v).weights) b.x0_count += w;
  b.total = b.caret_count + b.x0_count;
  return b;
}

int norm(const ForestDiagram& v) { return length(v).total; }

int width(const ForestDiagram& v) {
  auto [lo, hi] = support(v);
  return hi - lo;
}

bool is_left_sided(const ForestDiagram& v) {
  std::vector<int> top_starts = v.top.leaf_starts();
  std::vector<int> bottom_starts = v.bottom.leaf_starts();
  if (top_starts[v.top.pointer + 1] != bottom_starts[v.bottom.pointer + 1])
    return false;  // rightmost leaves of the pointed trees are not matched
  for (int i = v.top.pointer + 1; i < v.top.tree_count(); ++i)
    if (v.top.trees[i].is_caret()) return false;
  for (int i = v.bottom.pointer + 1; i < v.bottom.tree_count(); ++i)
    if (v.bottom.trees[i].is_caret()) return false;
  return true;
}

GroupWord geodesic_word(const ForestDiagram& v) {
  static const Letter kOrder[4] = {Letter::X0, Letter::X0Inv, Letter::X1,
                                   Letter::X1Inv};
  GroupWord word;
  ForestDiagram cur = v;
  int len = norm(cur);
  word.reserve(len);
  while (len > 0) {
    bool stepped = false;
    for (Letter g : kOrder) {
      ForestDiagram next = apply_generator(g, cur);
      if (norm(next) == len - 1) {
        word.push_back(inverse(g));
        cur = std::move(next);
        --len;
        stepped = true;
        break;
      }
    }
    if (!stepped)
      throw std::logic_error("no descending neighbour; length formula broken");
  }
  return word;
}

const ForestDiagram& x2_element() {
  static const ForestDiagram x2 = from_word(expand_higher_generator(2));
  return x2;
}

X2Facts x2_facts(const ForestDiagram& v) {
  X2Facts f;
  f.commutes = multiply(x2_element(), v) == multiply(v, x2_element());
  f.length_shift = norm(multiply(x2_element(), v)) - norm(v);
  return f;
}

}  // namespace thompson

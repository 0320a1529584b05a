#include "thompson/render.hpp"

#include <algorithm>
#include <vector>

namespace thompson {

namespace {

constexpr int kLeafGap = 3;

struct NodeArt {
  int height;  // leaves at 0
  int center;  // column
};

struct ForestArt {
  std::vector<std::string> rows;  // rows[0] = row just above/below leaves
  std::string leaf_row;
  std::string marker_row;
  int width = 0;
};

void put(std::vector<std::string>& rows, int row, int col, char c, int width) {
  while (static_cast<int>(rows.size()) <= row) rows.emplace_back(width, ' ');
  rows[row][col] = c;
}

NodeArt layout(const Tree& t, int& next_leaf,
               std::vector<std::string>& rows, int width) {
  if (t.is_leaf()) {
    int col = kLeafGap * next_leaf++;
    return {0, col};
  }
  NodeArt l = layout(t.left(), next_leaf, rows, width);
  NodeArt r = layout(t.right(), next_leaf, rows, width);
  int h = std::max(l.height, r.height) + 1;
  put(rows, h - 1, l.center, '/', width);
  put(rows, h - 1, r.center, '\\', width);
  for (int c = l.center + 1; c < r.center; ++c) put(rows, h - 1, c, '-', width);
  // Verticals down to shallower children.
  for (int row = l.height; row < h - 1; ++row) put(rows, row, l.center, '|', width);
  for (int row = r.height; row < h - 1; ++row) put(rows, row, r.center, '|', width);
  return {h, (l.center + r.center) / 2};
}

ForestArt forest_art(const PointedForest& f, char pointer_mark) {
  ForestArt art;
  art.width = kLeafGap * f.leaf_count();
  art.leaf_row.assign(art.width, ' ');
  art.marker_row.assign(art.width, ' ');
  int next_leaf = 0;
  for (int i = 0; i < f.tree_count(); ++i) {
    int first_leaf = next_leaf;
    NodeArt root = layout(f.trees[i], next_leaf, art.rows, art.width);
    for (int leaf = first_leaf; leaf < next_leaf; ++leaf)
      art.leaf_row[kLeafGap * leaf] = '.';
    if (i == f.pointer) art.marker_row[root.center] = pointer_mark;
  }
  return art;
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

std::string render_ascii(const ForestDiagram& d) {
  ForestArt top = forest_art(d.top, 'v');
  ForestArt bottom = forest_art(d.bottom, '^');
  std::string out = format_diagram(d) + "\n\n";
  out += rstrip(top.marker_row) + "\n";
  for (auto it = top.rows.rbegin(); it != top.rows.rend(); ++it)
    out += rstrip(*it) + "\n";
  out += rstrip(top.leaf_row) + "\n";
  std::string ties(std::max(top.width, bottom.width), ' ');
  for (int leaf = 0; leaf < d.top.leaf_count(); ++leaf)
    ties[kLeafGap * leaf] = ':';
  out += rstrip(ties) + "\n";
  out += rstrip(bottom.leaf_row) + "\n";
  for (const std::string& row : bottom.rows) {
    std::string flipped = row;
    for (char& c : flipped) {
      if (c == '/')
        c = '\\';
      else if (c == '\\')
        c = '/';
    }
    out += rstrip(flipped) + "\n";
  }
  out += rstrip(bottom.marker_row) + "\n";
  return out;
}

namespace {

int dot_tree(const Tree& t, const std::string& prefix, int& next_id,
             int& next_leaf, std::vector<std::string>& lines,
             std::vector<std::string>& leaf_ids, bool pointed_root) {
  int id = next_id++;
  std::string name = prefix + std::to_string(id);
  if (t.is_leaf()) {
    lines.push_back("    " + name + " [shape=point, width=0.12, label=\"\"" +
                    std::string(pointed_root ? ", color=red" : "") + "];");
    leaf_ids.push_back(name);
    ++next_leaf;
    return id;
  }
  lines.push_back("    " + name + " [shape=circle, width=0.08, label=\"\"" +
                  std::string(pointed_root ? ", color=red, peripheries=2" : "") +
                  "];");
  int l = dot_tree(t.left(), prefix, next_id, next_leaf, lines, leaf_ids, false);
  int r = dot_tree(t.right(), prefix, next_id, next_leaf, lines, leaf_ids, false);
  lines.push_back("    " + name + " -> " + prefix + std::to_string(l) + ";");
  lines.push_back("    " + name + " -> " + prefix + std::to_string(r) + ";");
  return id;
}

}  // namespace

std::string render_dot(const ForestDiagram& d) {
  std::vector<std::string> lines;
  std::vector<std::string> top_leaves, bottom_leaves;
  lines.push_back("digraph forest_diagram {");
  lines.push_back("  rankdir=TB;");
  lines.push_back("  node [fontsize=10];");
  for (int side = 0; side < 2; ++side) {
    const PointedForest& f = side == 0 ? d.top : d.bottom;
    std::vector<std::string>& leaves = side == 0 ? top_leaves : bottom_leaves;
    std::string prefix = side == 0 ? "t" : "b";
    lines.push_back("  subgraph cluster_" + std::string(side == 0 ? "top" : "bottom") + " {");
    lines.push_back("    label=\"" + std::string(side == 0 ? "top" : "bottom") + "\";");
    int next_id = 0, next_leaf = 0;
    for (int i = 0; i < f.tree_count(); ++i)
      dot_tree(f.trees[i], prefix, next_id, next_leaf, lines, leaves,
               i == f.pointer);
    lines.push_back("  }");
  }
  for (std::size_t i = 0; i < top_leaves.size(); ++i)
    lines.push_back("  " + top_leaves[i] + " -> " + bottom_leaves[i] +
                    " [style=dotted, arrowhead=none, constraint=false];");
  lines.push_back("}");
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

}  // namespace thompson

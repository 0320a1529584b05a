#pragma once

#include <string>

#include "thompson/forest_diagram.hpp"

namespace thompson {

// Plain-text picture of a diagram: the top forest drawn with carets above
// its leaf row, the bottom forest mirrored below, pointers marked with
// 'v'/'^' at the pointed roots, plus the nested-paren serialization.
std::string render_ascii(const ForestDiagram& d);

// Graphviz drawing: top and bottom forests as clusters, dotted edges for
// the leaf bijection, pointed roots double-circled.
std::string render_dot(const ForestDiagram& d);

}  // namespace thompson

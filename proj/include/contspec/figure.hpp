#pragma once

#include <string>

#include "contspec/continuity.hpp"

namespace contspec {

// Column-and-arrow figure of a space with a piecewise map: columns as
// vertical interval stacks at integer x positions (closed endpoints filled,
// open endpoints hollow), one labeled arrow per piece, discontinuity
// witnesses marked in red.
std::string render_svg(const ColumnSpace& space, const PiecewiseMap& map,
                       const std::vector<Witness>& witnesses = {});

// Same data as a graphviz digraph: one node per interval part, one edge per
// piece labeled with its offset.
std::string render_dot(const ColumnSpace& space, const PiecewiseMap& map);

} // namespace contspec

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssyn/region.hpp"

namespace ssyn::cli {

struct PlotSpec {
    std::string var_x;
    std::string var_y;
    std::map<std::string, Rational> fixes;  // by display name, all non-plot vars
    Rational xmin, xmax, ymin, ymax;
};

struct PlotLayer {
    Region region;     // over the full variable space
    std::string fill;  // css color
};

// Substitutes the fixed variables and keeps the two plot coordinates.
// Throws std::runtime_error when a non-plot variable has no fixing.
Region section_to_plane(const Region& r, const PlotSpec& spec, const VarSpacePtr& plane);

// One 600x600 panel per location, stacked vertically. Each piece is drawn
// as a filled polygon clipped to the bounding box; vertices are found by
// pairwise constraint intersection and feasibility filtering, then sorted
// by angle. Strict boundaries are dashed, non-strict solid.
std::string render_svg(const std::vector<std::pair<std::string, std::vector<PlotLayer>>>&
                           location_layers,
                       const PlotSpec& spec);

}  // namespace ssyn::cli

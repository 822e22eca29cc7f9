#pragma once

#include <string>

#include "bskel/skeleton.hpp"

namespace bskel {

struct RenderStyle {
    double node_radius = 2.5;
    double edge_width = 1.0;
    double canvas_padding = 10.0;
    std::string node_fill = "black";
    std::string edge_stroke = "black";

    void validate() const;
};

/// SVG drawing of a skeleton: one <circle> per node, one <line> per edge,
/// y flipped so larger y is drawn higher. The canvas is the data extent
/// grown by node_radius + canvas_padding on every side.
std::string render_svg(const PointSet& ps, const SkeletonGraph& g, const RenderStyle& style = {});

} // namespace bskel

#include "bskel/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "bskel/io.hpp"

namespace bskel {

namespace {

bool is_safe_color(const std::string& c)
{
    return !c.empty() && std::all_of(c.begin(), c.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '#' || ch == '(' || ch == ')' ||
               ch == ',' || ch == '.' || ch == ' ' || ch == '%';
    });
}

} // namespace

void RenderStyle::validate() const
{
    if (!(node_radius > 0.0) || !std::isfinite(node_radius))
        throw Error("render style: node_radius must be finite and > 0");
    if (!(edge_width > 0.0) || !std::isfinite(edge_width))
        throw Error("render style: edge_width must be finite and > 0");
    if (!(canvas_padding >= 0.0) || !std::isfinite(canvas_padding))
        throw Error("render style: canvas_padding must be finite and >= 0");
    if (!is_safe_color(node_fill))
        throw Error("render style: bad node_fill '" + node_fill + "'");
    if (!is_safe_color(edge_stroke))
        throw Error("render style: bad edge_stroke '" + edge_stroke + "'");
}

std::string render_svg(const PointSet& ps, const SkeletonGraph& g, const RenderStyle& style)
{
    style.validate();
    if (g.node_count() != ps.size())
        throw Error("render: graph and point set sizes disagree");

    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    if (!ps.empty()) {
        xmin = xmax = ps[0].x;
        ymin = ymax = ps[0].y;
        for (const Point& p : ps) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const double margin = ps.empty() ? style.canvas_padding : style.node_radius + style.canvas_padding;
    const double width = (xmax - xmin) + 2.0 * margin;
    const double height = (ymax - ymin) + 2.0 * margin;
    auto sx = [&](double x) { return format_real(x - xmin + margin); };
    auto sy = [&](double y) { return format_real(ymax - y + margin); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_real(width) << "\" height=\""
       << format_real(height) << "\" viewBox=\"0 0 " << format_real(width) << ' ' << format_real(height)
       << "\">\n";
    os << "<g stroke=\"" << style.edge_stroke << "\" stroke-width=\"" << format_real(style.edge_width) << "\">\n";
    for (const Edge& e : g.edges()) {
        os << "<line x1=\"" << sx(ps[e.i].x) << "\" y1=\"" << sy(ps[e.i].y) << "\" x2=\"" << sx(ps[e.j].x)
           << "\" y2=\"" << sy(ps[e.j].y) << "\"/>\n";
    }
    os << "</g>\n";
    os << "<g fill=\"" << style.node_fill << "\">\n";
    for (const Point& p : ps)
        os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << format_real(style.node_radius)
           << "\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace bskel

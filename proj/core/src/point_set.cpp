#include "bskel/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace bskel {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points))
{
    std::vector<NodeId> order(points_.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    for (NodeId id : order) {
        if (!is_finite(points_[id]))
            throw Error("point " + std::to_string(id) + " has a non-finite coordinate");
    }
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        const Point& pa = points_[a];
        const Point& pb = points_[b];
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (points_[order[k - 1]] == points_[order[k]])
            throw Error("duplicate points " + std::to_string(std::min(order[k - 1], order[k])) +
                        " and " + std::to_string(std::max(order[k - 1], order[k])));
    }
}

NodeId PointSet::append(Point p)
{
    if (!is_finite(p))
        throw Error("appended point has a non-finite coordinate");
    if (std::find(points_.begin(), points_.end(), p) != points_.end())
        throw Error("coincident points");
    points_.push_back(p);
    return static_cast<NodeId>(points_.size() - 1);
}

double median_nearest_neighbor_distance(const PointSet& ps)
{
    const std::size_t n = ps.size();
    if (n < 2)
        return 0.0;

    // Sweep in x order; stop scanning once the x gap alone exceeds the best.
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return ps[a].x < ps[b].x; });

    std::vector<double> nearest(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Point p = ps[order[k]];
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t m = k + 1; m < n; ++m) {
            const double dx = ps[order[m]].x - p.x;
            if (dx * dx >= best)
                break;
            best = std::min(best, squared_distance(p, ps[order[m]]));
        }
        for (std::size_t m = k; m-- > 0;) {
            const double dx = p.x - ps[order[m]].x;
            if (dx * dx >= best)
                break;
            best = std::min(best, squared_distance(p, ps[order[m]]));
        }
        nearest[k] = best;
    }
    auto mid = nearest.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(nearest.begin(), mid, nearest.end());
    return std::sqrt(*mid);
}

} // namespace bskel

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bskel/geometry.hpp"

namespace bskel {

using NodeId = std::uint32_t;

/// Ordered, duplicate-free planar point set. A point's id is its position.
class PointSet {
public:
    PointSet() = default;

    /// Throws Error on non-finite coordinates or coincident points.
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](NodeId id) const { return points_[id]; }
    std::span<const Point> points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    /// Appends p and returns its id. Throws on coincidence with an existing point.
    NodeId append(Point p);

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

/// Median over all points of the distance to the nearest other point.
/// Returns 0 for sets with fewer than two points.
double median_nearest_neighbor_distance(const PointSet& ps);

} // namespace bskel

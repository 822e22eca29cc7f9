#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bskel/point_set.hpp"

namespace bskel {

/// Axis-aligned box, closed on all sides.
struct Box {
    double xmin, ymin, xmax, ymax;
};

/// Uniform bucket grid over point ids. Every indexed id lives in exactly
/// the bucket of the cell containing its coordinates.
class GridIndex {
public:
    /// Indexes all of ps. cell_size must be finite and > 0.
    GridIndex(const PointSet& ps, double cell_size);

    /// Cell size defaults to the median nearest-neighbor distance (or 1 for
    /// degenerate sets).
    static GridIndex over(const PointSet& ps);

    double cell_size() const { return cell_size_; }
    std::size_t size() const { return count_; }
    std::size_t occupied_cells() const { return cells_.size(); }

    /// Adds p under id, which must equal size().
    void insert(NodeId id, Point p);

    /// True iff the index holds exactly the points of ps under their ids.
    bool indexes(const PointSet& ps) const;

    /// Calls visit(id) for ids whose cell overlaps box until visit returns
    /// true; reports whether it did. May visit ids outside the box but never
    /// skips one inside it. Boxes spanning more cells than are occupied scan
    /// the occupied cells instead of the box.
    template <typename Visit>
    bool any_in_box(const Box& box, Visit&& visit) const
    {
        const std::int64_t x0 = clamp_coord(box.xmin), x1 = clamp_coord(box.xmax);
        const std::int64_t y0 = clamp_coord(box.ymin), y1 = clamp_coord(box.ymax);
        const double span = static_cast<double>(x1 - x0 + 1) * static_cast<double>(y1 - y0 + 1);
        if (span > static_cast<double>(cells_.size())) {
            for (const Bucket& b : cells_) {
                if (b.cx < x0 || b.cx > x1 || b.cy < y0 || b.cy > y1)
                    continue;
                for (NodeId id : b.ids)
                    if (visit(id))
                        return true;
            }
            return false;
        }
        for (std::int64_t cx = x0; cx <= x1; ++cx) {
            for (std::int64_t cy = y0; cy <= y1; ++cy) {
                auto it = lookup_.find(key(cx, cy));
                if (it == lookup_.end())
                    continue;
                for (NodeId id : cells_[it->second].ids)
                    if (visit(id))
                        return true;
            }
        }
        return false;
    }

private:
    struct Bucket {
        std::int64_t cx, cy;
        std::vector<NodeId> ids;
    };

    static constexpr double kMaxCell = 1 << 30;

    std::int64_t clamp_coord(double v) const
    {
        return static_cast<std::int64_t>(std::clamp(std::floor(v / cell_size_), -kMaxCell, kMaxCell));
    }
    static std::uint64_t key(std::int64_t cx, std::int64_t cy)
    {
        return (static_cast<std::uint64_t>(cx) << 32) ^ (static_cast<std::uint64_t>(cy) & 0xffffffffu);
    }
    static std::uint64_t fingerprint_of(NodeId id, Point p);

    double cell_size_;
    std::size_t count_ = 0;
    std::uint64_t fingerprint_ = 0;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
    std::vector<Bucket> cells_;
};

} // namespace bskel

#include "bskel/grid_index.hpp"

#include <bit>
#include <string>

namespace bskel {

namespace {

std::uint64_t mix(std::uint64_t z)
{
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

GridIndex::GridIndex(const PointSet& ps, double cell_size) : cell_size_(cell_size)
{
    if (!(cell_size > 0.0) || !std::isfinite(cell_size))
        throw Error("grid cell size must be finite and > 0");
    for (NodeId id = 0; id < ps.size(); ++id)
        insert(id, ps[id]);
}

GridIndex GridIndex::over(const PointSet& ps)
{
    double cell = median_nearest_neighbor_distance(ps);
    if (!(cell > 0.0) || !std::isfinite(cell))
        cell = 1.0;
    return GridIndex(ps, cell);
}

void GridIndex::insert(NodeId id, Point p)
{
    if (id != count_)
        throw Error("grid index ids must be inserted in order");
    if (!is_finite(p))
        throw Error("non-finite coordinate");
    const double fx = std::floor(p.x / cell_size_);
    const double fy = std::floor(p.y / cell_size_);
    if (std::abs(fx) >= kMaxCell || std::abs(fy) >= kMaxCell)
        throw Error("point " + std::to_string(id) + " is out of range for grid cell size " +
                    std::to_string(cell_size_));
    const auto cx = static_cast<std::int64_t>(fx);
    const auto cy = static_cast<std::int64_t>(fy);
    auto [it, fresh] = lookup_.try_emplace(key(cx, cy), cells_.size());
    if (fresh)
        cells_.push_back(Bucket{cx, cy, {}});
    cells_[it->second].ids.push_back(id);
    fingerprint_ += fingerprint_of(id, p);
    ++count_;
}

bool GridIndex::indexes(const PointSet& ps) const
{
    if (ps.size() != count_)
        return false;
    std::uint64_t f = 0;
    for (NodeId id = 0; id < ps.size(); ++id)
        f += fingerprint_of(id, ps[id]);
    return f == fingerprint_;
}

std::uint64_t GridIndex::fingerprint_of(NodeId id, Point p)
{
    // +0.0 keeps -0.0 and 0.0 on the same fingerprint.
    return mix(mix(std::bit_cast<std::uint64_t>(p.x + 0.0) ^ id) + std::bit_cast<std::uint64_t>(p.y + 0.0));
}

} // namespace bskel

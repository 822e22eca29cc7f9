#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bskel/geometry.hpp"
#include "bskel/grid_index.hpp"
#include "bskel/point_set.hpp"

namespace bskel {

/// Unordered node pair stored with i < j.
struct Edge {
    NodeId i = 0;
    NodeId j = 0;

    static Edge of(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edges gained and lost when one point is inserted into a skeleton.
/// removed ⊆ previous edges; every added edge touches new_point_id.
struct InsertionDelta {
    NodeId new_point_id = 0;
    std::vector<Edge> added;
    std::vector<Edge> removed;
};

/// Immutable beta-skeleton: node count, sorted edge list, sorted adjacency.
class SkeletonGraph {
public:
    SkeletonGraph() = default;

    /// Throws Error on self-loops, duplicates or ids >= node_count.
    SkeletonGraph(std::size_t node_count, double beta, std::vector<Edge> edges);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    double beta() const { return beta_; }

    std::span<const Edge> edges() const& { return edges_; }
    std::span<const Edge> edges() const&& = delete; // would dangle
    std::span<const NodeId> neighbors(NodeId v) const& { return adjacency_[v]; }
    std::span<const NodeId> neighbors(NodeId v) const&& = delete;
    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
    bool has_edge(NodeId a, NodeId b) const;

    /// The graph with delta applied; the node count grows by one.
    SkeletonGraph with_delta(const InsertionDelta& delta) const;

    friend bool operator==(const SkeletonGraph& a, const SkeletonGraph& b)
    {
        return a.node_count() == b.node_count() && a.edges_ == b.edges_;
    }

private:
    double beta_ = 1.0;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
};

/// O(n^3) reference construction: (i, j) is an edge iff no third point lies
/// in their (closed) lune.
SkeletonGraph build_naive(const PointSet& ps, double beta, Tolerance tol = {});

/// Same edge set as build_naive; witnesses are drawn from the grid cells
/// that overlap the lune's bounding box. Throws if idx does not index ps.
SkeletonGraph build_indexed(const PointSet& ps, double beta, const GridIndex& idx, Tolerance tol = {});
SkeletonGraph build_indexed(const PointSet& ps, double beta, Tolerance tol = {});

/// Re-tests only the edges of g (built at a smaller beta) at beta. By lune
/// nesting this equals a full build at beta.
SkeletonGraph restrict_to_beta(const SkeletonGraph& g, const PointSet& ps, double beta, const GridIndex& idx);

/// Edge set when the lune is replaced by its beta -> infinity strip.
SkeletonGraph build_limit(const PointSet& ps);

/// Delta that turns g (the exact skeleton of ps at beta) into the skeleton
/// of ps ∪ {p}. The new point receives id ps.size().
InsertionDelta insert_point(const SkeletonGraph& g, const PointSet& ps, double beta, Point p);
/// As above, reusing an index of ps.
InsertionDelta insert_point(const SkeletonGraph& g, const PointSet& ps, double beta, Point p,
                            const GridIndex& idx, Tolerance tol = {});

enum class ConnectivityMode { PathConnected, NoIsolatedNodes };

/// "path-connected" or "no-isolated-nodes".
std::string_view to_string(ConnectivityMode mode);
ConnectivityMode parse_connectivity(std::string_view text);

bool is_connected(const SkeletonGraph& g, ConnectivityMode mode);

/// A beta=1 edge (a, b) whose limit strip contains a third point x.
struct StabilityViolation {
    NodeId a;
    NodeId b;
    NodeId x;
};

/// First violation in (a, b, x) lexicographic order, or none when the set
/// is stable.
std::optional<StabilityViolation> find_stability_violation(const PointSet& ps);

/// True iff every beta=1 edge survives the strip limit, i.e. the skeleton
/// keeps all its edges for every beta >= 1. Requires at least two points.
bool is_stable(const PointSet& ps);

} // namespace bskel

#include "bskel/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bskel {

namespace {

constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

void check_beta(double beta)
{
    if (!(beta >= 1.0) || std::isinf(beta))
        throw Error("unsupported beta " + std::to_string(beta) + " (need finite beta >= 1)");
}

void check_tolerance(Tolerance tol)
{
    if (!(tol.eps >= 0.0) || std::isinf(tol.eps))
        throw Error("tolerance must be finite and >= 0");
}

// Bounding box of the rectangle {along ab in [0, |ab|], |across| <= w} that
// encloses the lune, with w the lune's half-width at the midpoint.
Box lune_box(Point p, Point q, double beta, double pad)
{
    const Point d = q - p;
    const double len = std::sqrt(dot(d, d));
    const double w = len * std::sqrt(beta / 2.0 - 0.25);
    const double wx = w * std::abs(d.y) / len;
    const double wy = w * std::abs(d.x) / len;
    return {std::min(p.x, q.x) - wx - pad, std::min(p.y, q.y) - wy - pad,
            std::max(p.x, q.x) + wx + pad, std::max(p.y, q.y) + wy + pad};
}

class WitnessSearch {
public:
    WitnessSearch(const PointSet& ps, const GridIndex& idx, double beta, double eps)
        : ps_(ps), idx_(idx), beta_(beta), eps_(eps)
    {
    }

    // True iff some indexed point other than skip_a/skip_b lies in the lune
    // of (p, q).
    bool blocked(Point p, Point q, NodeId skip_a, NodeId skip_b) const
    {
        auto inside = [&](NodeId k) {
            return k != skip_a && k != skip_b &&
                   detail::lune_contains_unchecked(p, q, beta_, ps_[k], eps_);
        };
        // The midpoint cell almost always settles long pairs at once.
        const Point mid = 0.5 * (p + q);
        if (idx_.any_in_box({mid.x, mid.y, mid.x, mid.y}, inside))
            return true;
        return idx_.any_in_box(lune_box(p, q, beta_, idx_.cell_size()), inside);
    }

private:
    const PointSet& ps_;
    const GridIndex& idx_;
    double beta_;
    double eps_;
};

} // namespace

SkeletonGraph::SkeletonGraph(std::size_t node_count, double beta, std::vector<Edge> edges)
    : beta_(beta), edges_(std::move(edges)), adjacency_(node_count)
{
    for (Edge& e : edges_) {
        if (e.i == e.j)
            throw Error("self-loop at node " + std::to_string(e.i));
        e = Edge::of(e.i, e.j);
        if (e.j >= node_count)
            throw Error("edge endpoint " + std::to_string(e.j) + " out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("duplicate edge");
    for (const Edge& e : edges_) {
        adjacency_[e.i].push_back(e.j);
        adjacency_[e.j].push_back(e.i);
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

bool SkeletonGraph::has_edge(NodeId a, NodeId b) const
{
    if (a >= node_count() || b >= node_count())
        return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

SkeletonGraph SkeletonGraph::with_delta(const InsertionDelta& delta) const
{
    if (delta.new_point_id != node_count())
        throw Error("insertion delta does not extend this graph");
    std::vector<Edge> removed = delta.removed;
    std::sort(removed.begin(), removed.end());
    std::vector<Edge> kept;
    kept.reserve(edges_.size() + delta.added.size());
    std::set_difference(edges_.begin(), edges_.end(), removed.begin(), removed.end(),
                        std::back_inserter(kept));
    if (kept.size() + removed.size() != edges_.size())
        throw Error("insertion delta removes an edge that is not present");
    for (const Edge& e : delta.added) {
        if (e.i != delta.new_point_id && e.j != delta.new_point_id)
            throw Error("added edge does not touch the inserted point");
        kept.push_back(e);
    }
    return SkeletonGraph(node_count() + 1, beta_, std::move(kept));
}

SkeletonGraph build_naive(const PointSet& ps, double beta, Tolerance tol)
{
    check_beta(beta);
    check_tolerance(tol);
    const auto n = static_cast<NodeId>(ps.size());
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            bool empty = true;
            for (NodeId k = 0; k < n && empty; ++k) {
                if (k != i && k != j && detail::lune_contains_unchecked(ps[i], ps[j], beta, ps[k], tol.eps))
                    empty = false;
            }
            if (empty)
                edges.push_back({i, j});
        }
    }
    return SkeletonGraph(n, beta, std::move(edges));
}

SkeletonGraph build_indexed(const PointSet& ps, double beta, const GridIndex& idx, Tolerance tol)
{
    check_beta(beta);
    check_tolerance(tol);
    if (!idx.indexes(ps))
        throw Error("stale grid index: it does not index this point set");
    const auto n = static_cast<NodeId>(ps.size());
    const WitnessSearch search(ps, idx, beta, tol.eps);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (!search.blocked(ps[i], ps[j], i, j))
                edges.push_back({i, j});
        }
    }
    return SkeletonGraph(n, beta, std::move(edges));
}

SkeletonGraph build_indexed(const PointSet& ps, double beta, Tolerance tol)
{
    return build_indexed(ps, beta, GridIndex::over(ps), tol);
}

SkeletonGraph restrict_to_beta(const SkeletonGraph& g, const PointSet& ps, double beta, const GridIndex& idx)
{
    check_beta(beta);
    if (beta < g.beta())
        throw Error("restrict_to_beta needs beta >= the graph's beta");
    if (g.node_count() != ps.size() || !idx.indexes(ps))
        throw Error("stale grid index: it does not index this point set");
    const WitnessSearch search(ps, idx, beta, 0.0);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (!search.blocked(ps[e.i], ps[e.j], e.i, e.j))
            edges.push_back(e);
    }
    return SkeletonGraph(ps.size(), beta, std::move(edges));
}

SkeletonGraph build_limit(const PointSet& ps)
{
    const auto n = static_cast<NodeId>(ps.size());
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            bool empty = true;
            for (NodeId k = 0; k < n && empty; ++k) {
                if (k != i && k != j && detail::strip_contains_unchecked(ps[i], ps[j], ps[k]))
                    empty = false;
            }
            if (empty)
                edges.push_back({i, j});
        }
    }
    return SkeletonGraph(n, std::numeric_limits<double>::infinity(), std::move(edges));
}

InsertionDelta insert_point(const SkeletonGraph& g, const PointSet& ps, double beta, Point p)
{
    return insert_point(g, ps, beta, p, GridIndex::over(ps));
}

InsertionDelta insert_point(const SkeletonGraph& g, const PointSet& ps, double beta, Point p,
                            const GridIndex& idx, Tolerance tol)
{
    check_beta(beta);
    check_tolerance(tol);
    if (!is_finite(p))
        throw Error("inserted point has a non-finite coordinate");
    if (g.node_count() != ps.size() || idx.size() != ps.size())
        throw Error("graph, point set and index sizes disagree");
    if (idx.any_in_box({p.x, p.y, p.x, p.y}, [&](NodeId k) { return ps[k] == p; }))
        throw Error("coincident points: inserted point already present");

    InsertionDelta delta;
    delta.new_point_id = static_cast<NodeId>(ps.size());
    for (const Edge& e : g.edges()) {
        if (detail::lune_contains_unchecked(ps[e.i], ps[e.j], beta, p, tol.eps))
            delta.removed.push_back(e);
    }
    const WitnessSearch search(ps, idx, beta, tol.eps);
    for (NodeId q = 0; q < delta.new_point_id; ++q) {
        if (!search.blocked(p, ps[q], kNoNode, q))
            delta.added.push_back({q, delta.new_point_id});
    }
    return delta;
}

std::string_view to_string(ConnectivityMode mode)
{
    return mode == ConnectivityMode::PathConnected ? "path-connected" : "no-isolated-nodes";
}

ConnectivityMode parse_connectivity(std::string_view text)
{
    if (text == "path-connected")
        return ConnectivityMode::PathConnected;
    if (text == "no-isolated-nodes")
        return ConnectivityMode::NoIsolatedNodes;
    throw Error("unknown connectivity mode '" + std::string(text) +
                "' (expected path-connected or no-isolated-nodes)");
}

bool is_connected(const SkeletonGraph& g, ConnectivityMode mode)
{
    const std::size_t n = g.node_count();
    if (n <= 1)
        return true;
    if (mode == ConnectivityMode::NoIsolatedNodes) {
        for (NodeId v = 0; v < n; ++v)
            if (g.degree(v) == 0)
                return false;
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::optional<StabilityViolation> find_stability_violation(const PointSet& ps)
{
    if (ps.size() < 2)
        throw Error("stability needs at least two points");
    const SkeletonGraph gabriel = build_indexed(ps, 1.0);
    const auto n = static_cast<NodeId>(ps.size());
    for (const Edge& e : gabriel.edges()) {
        for (NodeId x = 0; x < n; ++x) {
            if (x != e.i && x != e.j && detail::strip_contains_unchecked(ps[e.i], ps[e.j], ps[x]))
                return StabilityViolation{e.i, e.j, x};
        }
    }
    return std::nullopt;
}

bool is_stable(const PointSet& ps)
{
    return !find_stability_violation(ps).has_value();
}

} // namespace bskel

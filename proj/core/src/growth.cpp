#include "bskel/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bskel {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error("invalid growth config: " + what);
}

} // namespace

void GrowthConfig::validate() const
{
    require(is_finite(seed), "seed must be finite");
    require(beta >= 1.0 && std::isfinite(beta), "beta must be finite and >= 1");
    require(r0 > 0.0 && std::isfinite(r0), "r0 must be finite and > 0");
    require(dr > 0.0 && std::isfinite(dr), "dr must be finite and > 0");
    require(dtheta > 0.0 && dtheta <= 360.0, "dtheta must be in (0, 360]");
    require(delta > 0.0 && std::isfinite(delta), "delta must be finite and > 0");
    require(std::isfinite(r_max), "r_max must be finite");
}

std::string_view to_string(Decision d)
{
    switch (d) {
    case Decision::Accepted:
        return "accepted";
    case Decision::RejectedProximity:
        return "rejected-proximity";
    case Decision::RejectedConnectivity:
        return "rejected-connectivity";
    case Decision::RejectedLune:
        return "rejected-lune";
    }
    return "unknown";
}

Point polar_point(Point seed, double r, double theta_deg)
{
    const double turns = theta_deg / 90.0;
    if (turns == std::floor(turns)) {
        switch (static_cast<long long>(turns) % 4) {
        case 0:
            return {seed.x + r, seed.y};
        case 1:
            return {seed.x, seed.y + r};
        case 2:
            return {seed.x - r, seed.y};
        default:
            return {seed.x, seed.y - r};
        }
    }
    const double rad = theta_deg * std::numbers::pi / 180.0;
    return {seed.x + r * std::cos(rad), seed.y + r * std::sin(rad)};
}

GrowthState::GrowthState(const GrowthConfig& cfg)
    : GrowthState(cfg, PointSet({cfg.seed}), SkeletonGraph(1, cfg.beta, {}))
{
}

GrowthState::GrowthState(const GrowthConfig& cfg, PointSet points, SkeletonGraph graph)
    : cfg_((cfg.validate(), cfg)), points_(std::move(points)), index_(points_, 2.0 * cfg.delta),
      graph_(std::move(graph))
{
    if (graph_.node_count() != points_.size())
        throw Error("growth state: graph and point set sizes disagree");
}

GrowthState::Evaluation GrowthState::evaluate(Point p) const
{
    const double d2 = cfg_.delta * cfg_.delta;
    const Box near{p.x - cfg_.delta, p.y - cfg_.delta, p.x + cfg_.delta, p.y + cfg_.delta};
    if (index_.any_in_box(near, [&](NodeId k) { return squared_distance(points_[k], p) <= d2; }))
        return {Decision::RejectedProximity, {}};

    InsertionDelta delta = insert_point(graph_, points_, cfg_.beta, p, index_);
    if (cfg_.strict_lune && !delta.removed.empty())
        return {Decision::RejectedLune, std::move(delta)};

    bool connected = true;
    if (cfg_.connectivity == ConnectivityMode::NoIsolatedNodes) {
        // Only the new point and endpoints of removed edges can lose all edges;
        // added edges all touch the new point.
        connected = !delta.added.empty();
        std::vector<std::pair<NodeId, std::size_t>> lost;
        for (const Edge& e : delta.removed) {
            for (NodeId v : {e.i, e.j}) {
                auto it = std::find_if(lost.begin(), lost.end(), [v](const auto& l) { return l.first == v; });
                if (it == lost.end())
                    lost.emplace_back(v, 1);
                else
                    ++it->second;
            }
        }
        for (const auto& [v, count] : lost) {
            const bool regains = std::any_of(delta.added.begin(), delta.added.end(),
                                             [v = v](const Edge& e) { return e.i == v; });
            if (graph_.degree(v) == count && !regains)
                connected = false;
        }
    } else {
        connected = is_connected(graph_.with_delta(delta), ConnectivityMode::PathConnected);
    }
    return {connected ? Decision::Accepted : Decision::RejectedConnectivity, std::move(delta)};
}

void GrowthState::commit(Point p, const InsertionDelta& delta)
{
    if (delta.new_point_id != points_.size())
        throw Error("growth state: delta does not match the current state");
    graph_ = graph_.with_delta(delta);
    const NodeId id = points_.append(p);
    index_.insert(id, p);
}

Decision try_candidate(const PointSet& ps, const SkeletonGraph& g, const GrowthConfig& cfg, Point p)
{
    const GrowthState state(cfg, ps, g);
    return state.evaluate(p).decision;
}

GrowthResult grow(const GrowthConfig& cfg)
{
    cfg.validate();
    GrowthState state(cfg);
    GrowthTrace trace;
    for (std::size_t ring = 0;; ++ring) {
        // Recomputed from the ring index so runs never accumulate drift.
        const double r = cfg.r0 + static_cast<double>(ring) * cfg.dr;
        if (r > cfg.r_max)
            break;
        for (std::size_t step = 0;; ++step) {
            const double theta = static_cast<double>(step) * cfg.dtheta;
            if (theta >= 360.0)
                break;
            const Point p = polar_point(cfg.seed, r, theta);
            GrowthState::Evaluation ev = state.evaluate(p);
            if (ev.decision == Decision::Accepted)
                state.commit(p, ev.delta);
            trace.events.push_back({r, theta, p, ev.decision, state.graph().edge_count()});
        }
    }
    return {state.points(), state.graph(), std::move(trace)};
}

} // namespace bskel

#pragma once

#include <string_view>
#include <vector>

#include "bskel/grid_index.hpp"
#include "bskel/skeleton.hpp"

namespace bskel {

/// Parameters of the polar-spiral node addition procedure. Angles are in
/// degrees.
struct GrowthConfig {
    Point seed{0.0, 0.0};
    double beta = 1.0;
    double r0 = 5.0;
    double dr = 0.5;
    double dtheta = 0.5;
    double delta = 2.5;  // minimum separation; candidates closer than or at delta are rejected
    double r_max = 90.0;
    ConnectivityMode connectivity = ConnectivityMode::PathConnected;
    bool strict_lune = false;  // also reject candidates that would remove any existing edge

    /// Throws Error naming the first invalid field.
    void validate() const;
};

enum class Decision { Accepted, RejectedProximity, RejectedConnectivity, RejectedLune };

std::string_view to_string(Decision d);

struct GrowthEvent {
    double r = 0.0;
    double theta = 0.0;
    Point candidate;
    Decision decision = Decision::Accepted;
    std::size_t edges_after = 0;
};

struct GrowthTrace {
    std::vector<GrowthEvent> events;
};

struct GrowthResult {
    PointSet points;
    SkeletonGraph graph;
    GrowthTrace trace;
};

/// seed + r (cos theta, sin theta) with theta in degrees. Multiples of 90
/// degrees map to exact axis directions.
Point polar_point(Point seed, double r, double theta_deg);

/// Mutable working state of a growth run: point set, its grid index and its
/// exact skeleton, kept consistent across commits.
class GrowthState {
public:
    struct Evaluation {
        Decision decision;
        InsertionDelta delta;
    };

    explicit GrowthState(const GrowthConfig& cfg);
    GrowthState(const GrowthConfig& cfg, PointSet points, SkeletonGraph graph);

    /// Decides on p without changing the state.
    Evaluation evaluate(Point p) const;
    /// Adds p using the delta from an Accepted evaluation of p.
    void commit(Point p, const InsertionDelta& delta);

    const PointSet& points() const { return points_; }
    const SkeletonGraph& graph() const { return graph_; }

private:
    GrowthConfig cfg_;
    PointSet points_;
    GridIndex index_;
    SkeletonGraph graph_;
};

/// Decision for candidate p against a state whose graph is the exact
/// skeleton of ps at cfg.beta.
Decision try_candidate(const PointSet& ps, const SkeletonGraph& g, const GrowthConfig& cfg, Point p);

/// Runs the spiral schedule from {seed}: r = r0, r0 + dr, ... while r <= r_max,
/// and per ring theta = 0, dtheta, ... while theta < 360.
GrowthResult grow(const GrowthConfig& cfg);

} // namespace bskel

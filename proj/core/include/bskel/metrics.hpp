#pragma once

#include <cstddef>
#include <map>

#include "bskel/skeleton.hpp"

namespace bskel {

struct MetricsReport {
    double beta = 1.0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double average_degree = 0.0;
    std::map<std::size_t, std::size_t> degree_histogram;
    double total_edge_length = 0.0;
    /// Longest shortest path in hops, maximised over connected components.
    std::size_t diameter_hops = 0;
    /// Nodes on that path, diameter_hops + 1.
    std::size_t diameter_nodes = 0;
    bool disconnected = false;
    double randic_index = 0.0;
};

enum class RandicConvention {
    EdgeSum,       // sum over unordered edges
    OrderedPairs,  // sum over the full adjacency matrix, exactly twice EdgeSum
};

/// Sum of 1/sqrt(d_i d_j) over edges.
double randic_index(const SkeletonGraph& g, RandicConvention convention = RandicConvention::EdgeSum);

/// Breadth-first eccentricity of every node; result is the maximum finite
/// one. O(n (n + m)).
std::size_t diameter_hops(const SkeletonGraph& g);

MetricsReport compute_metrics(const PointSet& ps, const SkeletonGraph& g,
                              RandicConvention convention = RandicConvention::EdgeSum);

} // namespace bskel

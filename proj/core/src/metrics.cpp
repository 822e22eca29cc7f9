#include "bskel/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bskel {

double randic_index(const SkeletonGraph& g, RandicConvention convention)
{
    double sum = 0.0;
    for (const Edge& e : g.edges())
        sum += 1.0 / std::sqrt(static_cast<double>(g.degree(e.i)) * static_cast<double>(g.degree(e.j)));
    return convention == RandicConvention::OrderedPairs ? 2.0 * sum : sum;
}

std::size_t diameter_hops(const SkeletonGraph& g)
{
    constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.node_count();
    std::vector<std::size_t> dist(n);
    std::vector<NodeId> queue(n);
    std::size_t best = 0;
    for (NodeId source = 0; source < n; ++source) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[source] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = source;
        while (head < tail) {
            const NodeId v = queue[head++];
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
        best = std::max(best, dist[queue[tail - 1]]);
    }
    return best;
}

MetricsReport compute_metrics(const PointSet& ps, const SkeletonGraph& g, RandicConvention convention)
{
    if (ps.size() != g.node_count())
        throw Error("metrics: graph and point set sizes disagree");
    MetricsReport m;
    m.beta = g.beta();
    m.nodes = g.node_count();
    m.edges = g.edge_count();
    m.average_degree = m.nodes == 0 ? 0.0 : 2.0 * static_cast<double>(m.edges) / static_cast<double>(m.nodes);
    for (NodeId v = 0; v < m.nodes; ++v)
        ++m.degree_histogram[g.degree(v)];
    for (const Edge& e : g.edges())
        m.total_edge_length += std::sqrt(squared_distance(ps[e.i], ps[e.j]));
    if (m.nodes > 0) {
        m.diameter_hops = diameter_hops(g);
        m.diameter_nodes = m.diameter_hops + 1;
        m.disconnected = !is_connected(g, ConnectivityMode::PathConnected);
    }
    m.randic_index = randic_index(g, convention);
    return m;
}

} // namespace bskel

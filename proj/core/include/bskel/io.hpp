#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bskel/growth.hpp"
#include "bskel/metrics.hpp"
#include "bskel/skeleton.hpp"

namespace bskel {

/// Shortest decimal text that parses back to exactly v.
std::string format_real(double v);
/// Strict parse of a whole token; throws Error naming what on failure.
double parse_real(const std::string& token, const std::string& what);

// Point files: one "x y" per line; '#' starts a comment; blank lines ignored.
PointSet read_points(std::istream& in, const std::string& source = "<stream>");
PointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const PointSet& ps);

// Edge lists: one "i j" per line with i < j, sorted lexicographically.
void write_edges(std::ostream& out, const SkeletonGraph& g);
std::vector<Edge> read_edges(std::istream& in, const std::string& source = "<stream>");
std::vector<Edge> read_edges_file(const std::string& path);

inline constexpr const char* kMetricsCsvHeader = "beta,nodes,edges,avg_degree,total_length,diam_hops,diam_nodes,randic";
std::string metrics_csv_row(const MetricsReport& m);

inline constexpr const char* kTraceCsvHeader = "r,theta,x,y,decision,edges_after";
void write_trace_csv(std::ostream& out, const GrowthTrace& trace);

/// "key=value" lines, '#' comments, surrounding whitespace trimmed. Later
/// keys override earlier ones.
using KeyValues = std::map<std::string, std::string>;
KeyValues read_key_values(std::istream& in, const std::string& source = "<stream>");
KeyValues read_key_values_file(const std::string& path);

} // namespace bskel

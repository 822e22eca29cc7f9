#include "bskel/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bskel {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string strip_comment(const std::string& line)
{
    return trim(line.substr(0, line.find('#')));
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    return in;
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;)
        out.push_back(tok);
    return out;
}

} // namespace

std::string format_real(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{})
        throw Error("cannot format number");
    return std::string(buf, end);
}

double parse_real(const std::string& token, const std::string& what)
{
    const std::string t = trim(token);
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || t.empty())
        throw Error(what + ": '" + token + "' is not a number");
    return v;
}

PointSet read_points(std::istream& in, const std::string& source)
{
    std::vector<Point> pts;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const std::string body = strip_comment(line);
        if (body.empty())
            continue;
        const auto toks = split_ws(body);
        const std::string where = source + ":" + std::to_string(lineno);
        if (toks.size() != 2)
            throw Error(where + ": expected 'x y', got '" + body + "'");
        pts.push_back({parse_real(toks[0], where), parse_real(toks[1], where)});
    }
    try {
        return PointSet(std::move(pts));
    } catch (const Error& e) {
        throw Error(source + ": " + e.what());
    }
}

PointSet read_points_file(const std::string& path)
{
    auto in = open_input(path);
    return read_points(in, path);
}

void write_points(std::ostream& out, const PointSet& ps)
{
    for (const Point& p : ps)
        out << format_real(p.x) << ' ' << format_real(p.y) << '\n';
}

void write_edges(std::ostream& out, const SkeletonGraph& g)
{
    for (const Edge& e : g.edges())
        out << e.i << ' ' << e.j << '\n';
}

std::vector<Edge> read_edges(std::istream& in, const std::string& source)
{
    std::vector<Edge> edges;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const std::string body = strip_comment(line);
        if (body.empty())
            continue;
        const auto toks = split_ws(body);
        const std::string where = source + ":" + std::to_string(lineno);
        if (toks.size() != 2)
            throw Error(where + ": expected 'i j', got '" + body + "'");
        NodeId ids[2];
        for (int k = 0; k < 2; ++k) {
            const std::string& t = toks[static_cast<std::size_t>(k)];
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), ids[k]);
            if (ec != std::errc{} || ptr != t.data() + t.size())
                throw Error(where + ": '" + t + "' is not a node id");
        }
        edges.push_back(Edge::of(ids[0], ids[1]));
    }
    return edges;
}

std::vector<Edge> read_edges_file(const std::string& path)
{
    auto in = open_input(path);
    return read_edges(in, path);
}

std::string metrics_csv_row(const MetricsReport& m)
{
    std::ostringstream os;
    os << format_real(m.beta) << ',' << m.nodes << ',' << m.edges << ',' << format_real(m.average_degree) << ','
       << format_real(m.total_edge_length) << ',' << m.diameter_hops << ',' << m.diameter_nodes << ','
       << format_real(m.randic_index);
    return os.str();
}

void write_trace_csv(std::ostream& out, const GrowthTrace& trace)
{
    out << kTraceCsvHeader << '\n';
    for (const GrowthEvent& e : trace.events) {
        out << format_real(e.r) << ',' << format_real(e.theta) << ',' << format_real(e.candidate.x) << ','
            << format_real(e.candidate.y) << ',' << to_string(e.decision) << ',' << e.edges_after << '\n';
    }
}

KeyValues read_key_values(std::istream& in, const std::string& source)
{
    KeyValues kv;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const std::string body = strip_comment(line);
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos || trim(body.substr(0, eq)).empty())
            throw Error(source + ":" + std::to_string(lineno) + ": expected key=value, got '" + body + "'");
        kv[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
    }
    return kv;
}

KeyValues read_key_values_file(const std::string& path)
{
    auto in = open_input(path);
    return read_key_values(in, path);
}

} // namespace bskel

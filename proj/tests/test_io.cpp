#include <cmath>
#include <sstream>

#include "bskel/experiments.hpp"
#include "bskel/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bskel;
using namespace bskel::testing;

TEST_CASE("real formatting round-trips")
{
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(40) == "40");
    CHECK(format_real(-3.25) == "-3.25");
    CHECK(parse_real("+1.5", "x") == 1.5);
    CHECK(parse_real(" 2e3 ", "x") == 2000.0);
    Rng rng(11);
    for (int k = 0; k < 1000; ++k) {
        const double v = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform(-20, 20));
        CHECK(parse_real(format_real(v), "v") == v);
    }
    CHECK_THROWS_WITH_AS(parse_real("1.5x", "line 3"), doctest::Contains("line 3"), Error);
    CHECK_THROWS_AS(parse_real("", "x"), Error);
    CHECK_THROWS_AS(parse_real("abc", "x"), Error);
}

TEST_CASE("point files")
{
    std::istringstream in("# header\n0 0\n\n1.5   -2  # trailing\n\t3 4\n");
    const PointSet ps = read_points(in, "pts.txt");
    CHECK(ps == PointSet({{0, 0}, {1.5, -2}, {3, 4}}));

    std::ostringstream out;
    write_points(out, ps);
    CHECK(out.str() == "0 0\n1.5 -2\n3 4\n");

    std::istringstream short_line("0 0\n1\n");
    CHECK_THROWS_WITH_AS(read_points(short_line, "f.txt"), doctest::Contains("f.txt:2"), Error);
    std::istringstream bad_number("0 0\n1 y\n");
    CHECK_THROWS_WITH_AS(read_points(bad_number, "f.txt"), doctest::Contains("f.txt:2"), Error);
    std::istringstream dup("0 0\n1 1\n0 0\n");
    CHECK_THROWS_WITH_AS(read_points(dup, "f.txt"), doctest::Contains("duplicate"), Error);
    std::istringstream nan("0 nan\n");
    CHECK_THROWS_AS(read_points(nan, "f.txt"), Error);
    CHECK_THROWS_WITH_AS(read_points_file("/nonexistent/points.txt"), doctest::Contains("cannot open"), Error);
}

TEST_CASE("property: point text round trip is exact")
{
    RandomSetConfig cfg;
    cfg.n = 300;
    const PointSet ps = generate_random_set(cfg);
    std::stringstream ss;
    write_points(ss, ps);
    CHECK(read_points(ss) == ps);
}

TEST_CASE("edge lists")
{
    const PointSet ps({{0, 0}, {1, 0}, {2, 0}});
    std::ostringstream out;
    write_edges(out, build_naive(ps, 1.0));
    CHECK(out.str() == "0 1\n1 2\n");

    std::istringstream in("# edges\n2 1\n0 1\n");
    const auto edges = read_edges(in);
    CHECK(edges == std::vector<Edge>{{1, 2}, {0, 1}});
    std::istringstream bad("0 -1\n");
    CHECK_THROWS_AS(read_edges(bad), Error);
    std::istringstream three("0 1 2\n");
    CHECK_THROWS_AS(read_edges(three), Error);
}

TEST_CASE("edge lists are sorted lexicographically")
{
    const PointSet ps = uniform_points(80, 4);
    std::ostringstream out;
    write_edges(out, build_indexed(ps, 1.0));
    std::istringstream in(out.str());
    const auto edges = read_edges(in);
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    CHECK(SkeletonGraph(ps.size(), 1.0, edges) == build_naive(ps, 1.0));
}

TEST_CASE("metrics and trace csv")
{
    const PointSet ps({{0, 0}, {1, 0}, {2, 0}});
    const MetricsReport m = compute_metrics(ps, build_naive(ps, 2.0));
    CHECK(std::string(kMetricsCsvHeader) == "beta,nodes,edges,avg_degree,total_length,diam_hops,diam_nodes,randic");
    CHECK(metrics_csv_row(m) == "2,3,2," + format_real(4.0 / 3.0) + ",2,2,3," + format_real(m.randic_index));
    CHECK(m.randic_index == doctest::Approx(std::sqrt(2.0)));

    GrowthConfig cfg;
    cfg.dtheta = 180;
    cfg.r_max = 5.5;
    std::ostringstream out;
    write_trace_csv(out, grow(cfg).trace);
    CHECK(out.str() ==
          "r,theta,x,y,decision,edges_after\n"
          "5,0,5,0,accepted,1\n"
          "5,180,-5,0,accepted,2\n"
          "5.5,0,5.5,0,rejected-proximity,2\n"
          "5.5,180,-5.5,0,rejected-proximity,2\n");
}

TEST_CASE("key=value files")
{
    std::istringstream in("# growth\nbeta = 2\n\ndtheta=0.5 # fine\nbeta=3\n");
    const KeyValues kv = read_key_values(in, "c.cfg");
    CHECK(kv.at("beta") == "3");
    CHECK(kv.at("dtheta") == "0.5");
    CHECK(kv.size() == 2);
    std::istringstream bad("beta 2\n");
    CHECK_THROWS_WITH_AS(read_key_values(bad, "c.cfg"), doctest::Contains("c.cfg:1"), Error);
    std::istringstream nokey("=2\n");
    CHECK_THROWS_AS(read_key_values(nokey), Error);
}

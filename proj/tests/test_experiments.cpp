#include <chrono>
#include <cmath>
#include <sstream>

#include "bskel/experiments.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bskel;
using namespace bskel::testing;

namespace {

std::string points_text(const PointSet& ps)
{
    std::ostringstream os;
    write_points(os, ps);
    return os.str();
}

SweepCurve synthetic(double (*f)(double))
{
    SweepCurve c{"synthetic", {}};
    for (double beta : beta_grid(1.0, 50.0, 0.5))
        c.samples.push_back({beta, f(beta)});
    return c;
}

} // namespace

TEST_CASE("rng stream is pinned")
{
    // First outputs of the standard mt19937_64 with its default seed.
    Rng rng(5489);
    const double first = rng.unit();
    CHECK(first == static_cast<double>(14514284786278117030ull >> 11) * 0x1.0p-53);
    Rng a(3), b(3);
    for (int k = 0; k < 100; ++k) {
        const double u = a.uniform(-2, 2);
        CHECK(u == b.uniform(-2, 2));
        CHECK(u >= -2);
        CHECK(u < 2);
    }
}

TEST_CASE("random set examples")
{
    SUBCASE("single point")
    {
        RandomSetConfig cfg;
        cfg.n = 1;
        const PointSet ps = generate_random_set(cfg);
        REQUIRE(ps.size() == 1);
        CHECK(dot(ps[0], ps[0]) <= 250.0 * 250.0);
    }
    SUBCASE("500 points, radius 250, separation 5")
    {
        RandomSetConfig cfg;
        cfg.rng_seed = 2024;
        const PointSet ps = generate_random_set(cfg);
        REQUIRE(ps.size() == 500);
        for (NodeId i = 0; i < ps.size(); ++i) {
            CHECK(dot(ps[i], ps[i]) <= 250.0 * 250.0);
            for (NodeId j = i + 1; j < ps.size(); ++j)
                CHECK(squared_distance(ps[i], ps[j]) >= 25.0);
        }
    }
    SUBCASE("zero separation still gives distinct points")
    {
        RandomSetConfig cfg;
        cfg.n = 300;
        cfg.min_separation = 0;
        CHECK(generate_random_set(cfg).size() == 300);
    }
}

TEST_CASE("infeasible density")
{
    RandomSetConfig cfg;
    cfg.n = 1'000'000;
    CHECK_THROWS_WITH_AS(generate_random_set(cfg), doctest::Contains("density infeasible"), Error);
    RandomSetConfig bad;
    bad.n = 0;
    CHECK_THROWS_AS(generate_random_set(bad), Error);
    bad = {};
    bad.domain_radius = -1;
    CHECK_THROWS_AS(generate_random_set(bad), Error);
    bad = {};
    bad.min_separation = NAN;
    CHECK_THROWS_AS(generate_random_set(bad), Error);
}

TEST_CASE("seeded sets are byte-identical")
{
    RandomSetConfig cfg;
    cfg.n = 200;
    cfg.rng_seed = 99;
    CHECK(points_text(generate_random_set(cfg)) == points_text(generate_random_set(cfg)));
    RandomSetConfig other = cfg;
    other.rng_seed = 100;
    CHECK(points_text(generate_random_set(cfg)) != points_text(generate_random_set(other)));
}

TEST_CASE("beta grid")
{
    const auto g = beta_grid(1.0, 100.0, 0.1);
    CHECK(g.size() == 991);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == doctest::Approx(100.0));
    CHECK(beta_grid(1.0, 2.0, 0.3).size() == 4);
    CHECK_THROWS_AS(beta_grid(0.5, 2.0, 0.1), Error);
    CHECK_THROWS_AS(beta_grid(2.0, 2.0, 0.1), Error);
    CHECK_THROWS_AS(beta_grid(1.0, 2.0, 0.0), Error);
}

TEST_CASE("sweep on the 5x5 grid is constant")
{
    const SweepCurve c = edge_loss_sweep(grid_points(5), 1.0, 100.0, 0.1);
    CHECK(c.samples.size() == 991);
    for (const SweepSample& s : c.samples)
        CHECK(s.value == 40.0);
    const PowerLawFit fit = fit_power_law(c);
    CHECK(fit.exponent == 0.0);
    CHECK(fit.r_squared == 1.0);
    CHECK(fit.coefficient == doctest::Approx(40.0));
}

TEST_CASE("property: sweeps are non-increasing on 50 random sets")
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        RandomSetConfig cfg;
        cfg.n = 120;
        cfg.rng_seed = seed;
        const SweepCurve c = edge_loss_sweep(generate_random_set(cfg), 1.0, 40.0, 0.5);
        for (std::size_t k = 1; k < c.samples.size(); ++k)
            CHECK(c.samples[k].value <= c.samples[k - 1].value);
    }
}

TEST_CASE("nested reuse equals rebuild")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const PointSet ps = uniform_points(150, seed);
        const SweepCurve a = edge_loss_sweep(ps, 1.0, 60.0, 0.5, SweepMode::Rebuild);
        const SweepCurve b = edge_loss_sweep(ps, 1.0, 60.0, 0.5, SweepMode::NestedReuse);
        REQUIRE(a.samples.size() == b.samples.size());
        for (std::size_t k = 0; k < a.samples.size(); ++k) {
            CHECK(a.samples[k].beta == b.samples[k].beta);
            CHECK(a.samples[k].value == b.samples[k].value);
        }
    }
}

TEST_CASE("power-law fit examples")
{
    const PowerLawFit exact = fit_power_law(synthetic([](double b) { return 100.0 * std::pow(b, -1.5); }));
    CHECK(std::abs(exact.exponent + 1.5) <= 1e-9);
    CHECK(exact.coefficient == doctest::Approx(100.0));
    CHECK(exact.r_squared == doctest::Approx(1.0));

    const PowerLawFit flat = fit_power_law(synthetic([](double) { return 7.0; }));
    CHECK(flat.exponent == 0.0);
    CHECK(flat.r_squared == 1.0);

    CHECK_THROWS_AS(fit_power_law(synthetic([](double) { return 0.0; })), Error);
    SweepCurve two{"x", {{1, 5}, {2, 4}, {3, 0}}};
    CHECK_THROWS_AS(fit_power_law(two), Error);

    const PowerLawFit noisy = fit_power_law(synthetic([](double b) { return 10.0 / b + std::sin(b); }));
    CHECK(noisy.r_squared >= 0.0);
    CHECK(noisy.r_squared <= 1.0);
}

TEST_CASE("350-point edge loss follows a power law on [1, 20]")
{
    RandomSetConfig cfg;
    cfg.n = 350;
    cfg.rng_seed = 7;
    const SweepCurve c = edge_loss_sweep(generate_random_set(cfg), 1.0, 100.0, 0.5);
    CHECK(c.samples.front().value > 2 * c.samples.back().value);
    const PowerLawFit fit = fit_power_law(c.prefix(20.0));
    CHECK(fit.exponent < 0);
    CHECK(fit.r_squared > 0.9);
}

TEST_CASE("growth sweep")
{
    GrowthConfig base;
    base.r_max = 20.0;

    SUBCASE("cross morphology")
    {
        const auto runs = growth_sweep(base, {1}, {90});
        REQUIRE(runs.size() == 1);
        REQUIRE(runs[0].metrics);
        const GrowthResult res = grow(runs[0].config);
        for (const Point& p : res.points)
            CHECK((p.x == 0 || p.y == 0));
        CHECK(runs[0].metrics->nodes == res.points.size());
    }
    SUBCASE("beta 1 grows more nodes than beta 100")
    {
        const auto runs = growth_sweep(base, {1, 100}, {0.5});
        REQUIRE(runs.size() == 2);
        CHECK(runs[0].metrics->nodes > runs[1].metrics->nodes);
    }
    SUBCASE("empty lists")
    {
        CHECK(growth_sweep(base, {}, {0.5}).empty());
        CHECK(growth_sweep(base, {1}, {}).empty());
    }
    SUBCASE("a failing cell does not stop the others")
    {
        const auto runs = growth_sweep(base, {0.5, 2}, {30, 400});
        REQUIRE(runs.size() == 4);
        CHECK(runs[0].config.beta == 0.5);
        CHECK(runs[1].config.dtheta == 400);
        CHECK_FALSE(runs[0].metrics);
        CHECK_FALSE(runs[0].error.empty());
        CHECK_FALSE(runs[1].metrics);
        CHECK_FALSE(runs[3].metrics);
        REQUIRE(runs[2].metrics);
        CHECK(runs[2].error.empty());
        std::ostringstream os;
        write_growth_sweep_csv(os, runs);
        const std::string csv = os.str();
        CHECK(csv.rfind(std::string(kGrowthSweepCsvHeader) + "\n", 0) == 0);
        CHECK(csv.find(",ok\n") != std::string::npos);
        CHECK(csv.find("error: invalid growth config") != std::string::npos);
    }
    SUBCASE("sequential and parallel agree")
    {
        std::ostringstream a, b;
        write_growth_sweep_csv(a, growth_sweep(base, {1, 3, 20}, {5, 12}, 1));
        write_growth_sweep_csv(b, growth_sweep(base, {1, 3, 20}, {5, 12}, 4));
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("spearman rho")
{
    CHECK(spearman_rho({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
    CHECK(spearman_rho({1, 2, 3, 4}, {4, 3, 2, 1}) == doctest::Approx(-1.0));
    CHECK(spearman_rho({1, 2, 3}, {5, 5, 5}) == 0.0);
    // Ties take average ranks: y ranks (1.5, 1.5, 3).
    CHECK(spearman_rho({1, 2, 3}, {1, 1, 2}) == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(spearman_rho({1, 2, 3, 4, 5}, {2, 1, 4, 3, 5}) == doctest::Approx(0.8));
    CHECK_THROWS_AS(spearman_rho({1, 2}, {1}), Error);
}

TEST_CASE("config text round trip")
{
    GrowthConfig g;
    g.seed = {1.25, -3};
    g.beta = 7.5;
    g.dtheta = 0.1;
    g.connectivity = ConnectivityMode::NoIsolatedNodes;
    g.strict_lune = true;
    std::istringstream in(to_config_text(g));
    GrowthConfig back;
    apply_growth_keys(read_key_values(in), back);
    CHECK(to_config_text(back) == to_config_text(g));
    CHECK(back.dtheta == 0.1);

    RandomSetConfig r;
    r.n = 42;
    r.rng_seed = 18446744073709551615ull;
    r.domain_radius = 12.5;
    const std::string text = to_config_text(r);
    CHECK(text.find("# rng=mt19937_64") != std::string::npos);
    std::istringstream rin(text);
    RandomSetConfig rback;
    apply_random_set_keys(read_key_values(rin), rback);
    CHECK(to_config_text(rback) == text);

    KeyValues bad{{"beta", "fast"}};
    CHECK_THROWS_WITH_AS(apply_growth_keys(bad, back), doctest::Contains("beta"), Error);
    KeyValues bad_n{{"n", "-3"}};
    CHECK_THROWS_AS(apply_random_set_keys(bad_n, rback), Error);

    CHECK(parse_real_list("1,2.5,100", "--betas") == std::vector<double>{1, 2.5, 100});
    CHECK_THROWS_AS(parse_real_list("1,,2", "--betas"), Error);
}

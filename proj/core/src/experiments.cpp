#include "bskel/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bskel/grid_index.hpp"
#include "bskel/parallel.hpp"

namespace bskel {

void RandomSetConfig::validate() const
{
    if (n == 0)
        throw Error("invalid random set config: n must be > 0");
    if (!(domain_radius > 0.0) || !std::isfinite(domain_radius))
        throw Error("invalid random set config: domain_radius must be finite and > 0");
    if (!(min_separation >= 0.0) || !std::isfinite(min_separation))
        throw Error("invalid random set config: min_separation must be finite and >= 0");
}

PointSet generate_random_set(const RandomSetConfig& cfg)
{
    cfg.validate();
    Rng rng(cfg.rng_seed);
    const double radius = cfg.domain_radius;
    const double sep2 = cfg.min_separation * cfg.min_separation;
    const double cell = cfg.min_separation > 0.0 ? cfg.min_separation : radius / 64.0;

    PointSet ps;
    GridIndex index(ps, cell);
    std::size_t rejections = 0;
    while (ps.size() < cfg.n) {
        const Point p{rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
        bool ok = dot(p, p) <= radius * radius;
        if (ok) {
            const double s = cfg.min_separation;
            ok = !index.any_in_box({p.x - s, p.y - s, p.x + s, p.y + s}, [&](NodeId k) {
                const double d2 = squared_distance(ps[k], p);
                return d2 < sep2 || d2 == 0.0;
            });
        }
        if (!ok) {
            if (++rejections >= kMaxConsecutiveRejections)
                throw Error("density infeasible: placed " + std::to_string(ps.size()) + " of " +
                            std::to_string(cfg.n) + " points before " +
                            std::to_string(kMaxConsecutiveRejections) + " consecutive rejections");
            continue;
        }
        rejections = 0;
        index.insert(ps.append(p), p);
    }
    return ps;
}

SweepCurve SweepCurve::prefix(double beta_max) const
{
    SweepCurve out{label, {}};
    for (const SweepSample& s : samples)
        if (s.beta <= beta_max)
            out.samples.push_back(s);
    return out;
}

std::vector<double> beta_grid(double beta_min, double beta_max, double step)
{
    if (!(beta_min >= 1.0) || !std::isfinite(beta_max) || !(beta_max > beta_min))
        throw Error("beta range must satisfy 1 <= beta_min < beta_max");
    if (!(step > 0.0) || !std::isfinite(step))
        throw Error("beta step must be finite and > 0");
    std::vector<double> grid;
    const double limit = beta_max + 1e-9 * step;
    for (std::size_t k = 0;; ++k) {
        const double beta = beta_min + static_cast<double>(k) * step;
        if (beta > limit)
            break;
        grid.push_back(beta);
    }
    return grid;
}

SweepCurve edge_loss_sweep(const PointSet& ps, double beta_min, double beta_max, double step, SweepMode mode)
{
    const std::vector<double> grid = beta_grid(beta_min, beta_max, step);
    SweepCurve curve{"e(" + std::to_string(ps.size()) + ",beta)", {}};
    curve.samples.resize(grid.size());
    const GridIndex index = GridIndex::over(ps);
    if (mode == SweepMode::Rebuild) {
        parallel_for(grid.size(), [&](std::size_t k) {
            const SkeletonGraph g = build_indexed(ps, grid[k], index);
            curve.samples[k] = {grid[k], static_cast<double>(g.edge_count())};
        });
        return curve;
    }
    SkeletonGraph g = build_indexed(ps, grid.front(), index);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (k > 0)
            g = restrict_to_beta(g, ps, grid[k], index);
        curve.samples[k] = {grid[k], static_cast<double>(g.edge_count())};
    }
    return curve;
}

PowerLawFit fit_power_law(const SweepCurve& curve)
{
    std::vector<double> xs, ys;
    for (const SweepSample& s : curve.samples) {
        if (s.value > 0.0 && s.beta > 0.0) {
            xs.push_back(std::log(s.beta));
            ys.push_back(std::log(s.value));
        }
    }
    if (xs.size() < 3)
        throw Error("power-law fit needs at least 3 positive samples, got " + std::to_string(xs.size()));
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double dx = xs[k] - mx, dy = ys[k] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0))
        throw Error("power-law fit needs at least two distinct beta values");
    PowerLawFit fit;
    // Tested on the samples, not syy: the mean of equal logs can round away
    // from them.
    if (std::adjacent_find(ys.begin(), ys.end(), std::not_equal_to<>()) == ys.end()) {
        fit.exponent = 0.0;
        fit.coefficient = std::exp(ys.front());
        fit.r_squared = 1.0;
    } else {
        fit.exponent = sxy / sxx;
        fit.coefficient = std::exp(my - fit.exponent * mx);
        double ss_res = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const double r = ys[k] - (my + fit.exponent * (xs[k] - mx));
            ss_res += r * r;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

std::vector<GrowthRun> growth_sweep(const GrowthConfig& base, const std::vector<double>& betas,
                                    const std::vector<double>& dthetas, std::size_t threads)
{
    std::vector<GrowthRun> runs;
    for (double beta : betas) {
        for (double dtheta : dthetas) {
            GrowthConfig cfg = base;
            cfg.beta = beta;
            cfg.dtheta = dtheta;
            runs.push_back({cfg, std::nullopt, {}});
        }
    }
    parallel_for(
        runs.size(),
        [&](std::size_t k) {
            GrowthRun& run = runs[k];
            try {
                const GrowthResult res = grow(run.config);
                run.metrics = compute_metrics(res.points, res.graph);
            } catch (const std::exception& e) {
                run.error = e.what();
            }
        },
        threads);
    return runs;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v)
{
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    for (std::size_t start = 0; start < order.size();) {
        std::size_t end = start + 1;
        while (end < order.size() && v[order[end]] == v[order[start]])
            ++end;
        const double rank = 0.5 * static_cast<double>(start + end - 1) + 1.0;
        for (std::size_t k = start; k < end; ++k)
            ranks[order[k]] = rank;
        start = end;
    }
    return ranks;
}

} // namespace

double spearman_rho(const std::vector<double>& xs, const std::vector<double>& ys)
{
    if (xs.size() != ys.size())
        throw Error("spearman_rho: sequences differ in length");
    if (xs.size() < 2)
        return 0.0;
    const auto rx = average_ranks(xs);
    const auto ry = average_ranks(ys);
    const double n = static_cast<double>(xs.size());
    const double mean = (n + 1.0) / 2.0;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < rx.size(); ++k) {
        sxy += (rx[k] - mean) * (ry[k] - mean);
        sxx += (rx[k] - mean) * (rx[k] - mean);
        syy += (ry[k] - mean) * (ry[k] - mean);
    }
    if (sxx == 0.0 || syy == 0.0)
        return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

void write_curve_csv(std::ostream& out, const SweepCurve& curve)
{
    out << kCurveCsvHeader << '\n';
    for (const SweepSample& s : curve.samples)
        out << format_real(s.beta) << ',' << format_real(s.value) << '\n';
}

void write_fit_csv(std::ostream& out, const PowerLawFit& fit)
{
    out << kFitCsvHeader << '\n'
        << format_real(fit.exponent) << ',' << format_real(fit.coefficient) << ',' << format_real(fit.r_squared)
        << '\n';
}

void write_growth_sweep_csv(std::ostream& out, const std::vector<GrowthRun>& runs)
{
    out << kGrowthSweepCsvHeader << '\n';
    for (const GrowthRun& run : runs) {
        out << format_real(run.config.dtheta) << ',';
        if (run.metrics) {
            out << metrics_csv_row(*run.metrics) << ",ok\n";
        } else {
            std::string msg = run.error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            std::replace(msg.begin(), msg.end(), '\n', ' ');
            out << format_real(run.config.beta) << ",,,,,,,,error: " << msg << '\n';
        }
    }
}

namespace {

template <typename T, typename Parse>
void apply_key(const KeyValues& kv, const char* key, T& field, Parse parse)
{
    if (auto it = kv.find(key); it != kv.end())
        field = parse(it->second, std::string("config key '") + key + "'");
}

double as_real(const std::string& v, const std::string& what) { return parse_real(v, what); }

bool as_bool(const std::string& v, const std::string& what)
{
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw Error(what + ": '" + v + "' is not a boolean");
}

std::uint64_t as_uint(const std::string& v, const std::string& what)
{
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
        throw Error(what + ": '" + v + "' is not a non-negative integer");
    return out;
}

} // namespace

void apply_growth_keys(const KeyValues& kv, GrowthConfig& cfg)
{
    apply_key(kv, "seed_x", cfg.seed.x, as_real);
    apply_key(kv, "seed_y", cfg.seed.y, as_real);
    apply_key(kv, "beta", cfg.beta, as_real);
    apply_key(kv, "r0", cfg.r0, as_real);
    apply_key(kv, "dr", cfg.dr, as_real);
    apply_key(kv, "dtheta", cfg.dtheta, as_real);
    apply_key(kv, "delta", cfg.delta, as_real);
    apply_key(kv, "r_max", cfg.r_max, as_real);
    apply_key(kv, "connectivity", cfg.connectivity,
              [](const std::string& v, const std::string&) { return parse_connectivity(v); });
    apply_key(kv, "strict_lune", cfg.strict_lune, as_bool);
}

void apply_random_set_keys(const KeyValues& kv, RandomSetConfig& cfg)
{
    apply_key(kv, "n", cfg.n, [](const std::string& v, const std::string& what) {
        return static_cast<std::size_t>(as_uint(v, what));
    });
    apply_key(kv, "domain_radius", cfg.domain_radius, as_real);
    apply_key(kv, "min_separation", cfg.min_separation, as_real);
    apply_key(kv, "rng_seed", cfg.rng_seed, as_uint);
}

std::string to_config_text(const GrowthConfig& cfg)
{
    std::ostringstream os;
    os << "seed_x=" << format_real(cfg.seed.x) << '\n'
       << "seed_y=" << format_real(cfg.seed.y) << '\n'
       << "beta=" << format_real(cfg.beta) << '\n'
       << "r0=" << format_real(cfg.r0) << '\n'
       << "dr=" << format_real(cfg.dr) << '\n'
       << "dtheta=" << format_real(cfg.dtheta) << '\n'
       << "delta=" << format_real(cfg.delta) << '\n'
       << "r_max=" << format_real(cfg.r_max) << '\n'
       << "connectivity=" << to_string(cfg.connectivity) << '\n'
       << "strict_lune=" << (cfg.strict_lune ? "true" : "false") << '\n';
    return os.str();
}

std::string to_config_text(const RandomSetConfig& cfg)
{
    std::ostringstream os;
    os << "n=" << cfg.n << '\n'
       << "domain_radius=" << format_real(cfg.domain_radius) << '\n'
       << "min_separation=" << format_real(cfg.min_separation) << '\n'
       << "rng_seed=" << cfg.rng_seed << '\n'
       << "# rng=" << Rng::kAlgorithm << '\n';
    return os.str();
}

std::vector<double> parse_real_list(const std::string& text, const std::string& what)
{
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        out.push_back(parse_real(item, what));
    return out;
}

} // namespace bskel

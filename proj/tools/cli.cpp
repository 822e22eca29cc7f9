#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <set>

#include "bskel/experiments.hpp"
#include "bskel/io.hpp"
#include "bskel/metrics.hpp"
#include "bskel/render.hpp"
#include "bskel/skeleton.hpp"

namespace bskel::cli {

namespace {

const std::set<std::string> kConfigKeys = {
    "seed_x", "seed_y", "beta", "r0", "dr", "dtheta", "delta", "r_max", "connectivity", "strict_lune",
    "n", "domain_radius", "min_separation", "rng_seed",
    "betas", "dthetas", "beta_min", "beta_max", "beta_step"};

KeyValues load_config(const std::string& path)
{
    if (path.empty())
        return {};
    KeyValues kv = read_key_values_file(path);
    for (const auto& [key, value] : kv)
        if (!kConfigKeys.count(key))
            throw Error(path + ": unknown config key '" + key + "'");
    return kv;
}

// Writes to the named file, or to fallback when path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write)
{
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot write '" + path + "'");
    write(f);
    if (!f)
        throw Error("write to '" + path + "' failed");
}

struct GrowthFlags {
    double beta = 1.0, dtheta = 0.5, r0 = 5.0, dr = 0.5, delta = 2.5, r_max = 90.0, seed_x = 0.0, seed_y = 0.0;
    std::string connectivity = "path-connected";
    bool strict = false;
    std::vector<std::pair<CLI::Option*, std::function<void(GrowthConfig&)>>> overrides;

    void attach(CLI::App* app, bool with_beta_dtheta)
    {
        auto add = [&](const char* name, double& field, const char* help, std::function<void(GrowthConfig&)> set) {
            overrides.emplace_back(app->add_option(name, field, help)->capture_default_str(), std::move(set));
        };
        if (with_beta_dtheta) {
            add("--beta", beta, "Skeleton beta (>= 1)", [this](GrowthConfig& c) { c.beta = beta; });
            add("--dtheta", dtheta, "Angular step in degrees", [this](GrowthConfig& c) { c.dtheta = dtheta; });
        }
        add("--r0", r0, "Initial radius", [this](GrowthConfig& c) { c.r0 = r0; });
        add("--dr", dr, "Radius increment per ring", [this](GrowthConfig& c) { c.dr = dr; });
        add("--delta", delta, "Minimum separation between points", [this](GrowthConfig& c) { c.delta = delta; });
        add("--r-max", r_max, "Stop radius", [this](GrowthConfig& c) { c.r_max = r_max; });
        add("--seed-x", seed_x, "Seed point x", [this](GrowthConfig& c) { c.seed.x = seed_x; });
        add("--seed-y", seed_y, "Seed point y", [this](GrowthConfig& c) { c.seed.y = seed_y; });
        overrides.emplace_back(
            app->add_option("--connectivity", connectivity, "path-connected | no-isolated-nodes")
                ->capture_default_str(),
            [this](GrowthConfig& c) { c.connectivity = parse_connectivity(connectivity); });
        overrides.emplace_back(app->add_flag("--strict-lune", strict, "Reject candidates that remove any edge"),
                               [this](GrowthConfig& c) { c.strict_lune = strict; });
    }

    // Defaults, then config file keys, then explicitly given flags.
    GrowthConfig resolve(const KeyValues& kv) const
    {
        GrowthConfig cfg;
        apply_growth_keys(kv, cfg);
        for (const auto& [opt, set] : overrides)
            if (opt->count() > 0)
                set(cfg);
        return cfg;
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Beta-skeleton construction, growth and experiments", "bskel"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Build the beta-skeleton of a point file");
    std::string build_points, build_edges_out, build_metrics_out;
    double build_beta = 1.0;
    bool build_naive_flag = false, build_doubled = false, build_metrics_stdout = false;
    build->add_option("--points", build_points, "Point file ('x y' per line)")->required();
    build->add_option("--beta", build_beta, "Skeleton beta (>= 1)")->capture_default_str();
    build->add_option("--edges-out", build_edges_out, "Edge list output (default: stdout)");
    build->add_option("--metrics-out", build_metrics_out, "Write the metrics CSV");
    build->add_flag("--metrics", build_metrics_stdout, "Print the metrics CSV instead of the edge list");
    build->add_flag("--naive", build_naive_flag, "Use the O(n^3) reference construction");
    build->add_flag("--randic-doubled", build_doubled, "Report the ordered-pair Randic sum (2x)");

    // grow
    auto* growc = app.add_subcommand("grow", "Grow a connected skeleton on a polar spiral");
    GrowthFlags grow_flags;
    grow_flags.attach(growc, true);
    std::string grow_config, grow_points_out, grow_edges_out, grow_trace_out, grow_svg_out, grow_metrics_out;
    growc->add_option("--config", grow_config, "key=value config file");
    growc->add_option("--points-out", grow_points_out, "Write the grown point set");
    growc->add_option("--edges-out", grow_edges_out, "Write the edge list");
    growc->add_option("--trace-out", grow_trace_out, "Trace CSV output (default: stdout)");
    growc->add_option("--svg-out", grow_svg_out, "Write an SVG drawing");
    growc->add_option("--metrics-out", grow_metrics_out, "Write the metrics CSV");

    // sweep-edges
    auto* sweepe = app.add_subcommand("sweep-edges", "Edge count as a function of beta");
    std::string se_points, se_config, se_out, se_fit_out, se_points_out, se_mode = "rebuild";
    std::size_t se_random = 0;
    std::uint64_t se_seed = 1;
    double se_min = 1.0, se_max = 100.0, se_step = 0.1, se_fit_max = 0.0, se_radius = 250.0, se_sep = 5.0;
    auto* se_points_opt = sweepe->add_option("--points", se_points, "Point file");
    auto* se_random_opt = sweepe->add_option("--random", se_random, "Generate n random points instead");
    se_points_opt->excludes(se_random_opt);
    auto* se_seed_opt = sweepe->add_option("--seed", se_seed, "RNG seed for --random")->capture_default_str();
    auto* se_radius_opt =
        sweepe->add_option("--domain-radius", se_radius, "Disc radius for --random")->capture_default_str();
    auto* se_sep_opt =
        sweepe->add_option("--min-separation", se_sep, "Minimum separation for --random")->capture_default_str();
    auto* se_min_opt = sweepe->add_option("--beta-min", se_min, "First beta")->capture_default_str();
    auto* se_max_opt = sweepe->add_option("--beta-max", se_max, "Last beta")->capture_default_str();
    auto* se_step_opt = sweepe->add_option("--beta-step", se_step, "Beta increment")->capture_default_str();
    sweepe->add_option("--fit-beta-max", se_fit_max, "Fit only samples with beta <= this (default: all)");
    sweepe->add_option("--mode", se_mode, "rebuild | nested")
        ->check(CLI::IsMember({"rebuild", "nested"}))
        ->capture_default_str();
    sweepe->add_option("--config", se_config, "key=value config file");
    sweepe->add_option("--out", se_out, "Curve CSV output (default: stdout)");
    sweepe->add_option("--fit-out", se_fit_out, "Power-law fit CSV output");
    sweepe->add_option("--points-out", se_points_out, "Write the point set used");

    // sweep-grow
    auto* sweepg = app.add_subcommand("sweep-grow", "Grow and measure skeletons over beta x dtheta");
    GrowthFlags sg_flags;
    sg_flags.attach(sweepg, false);
    std::string sg_config, sg_betas, sg_dthetas, sg_out;
    std::size_t sg_threads = 0;
    sweepg->add_option("--config", sg_config, "key=value config file");
    sweepg->add_option("--betas", sg_betas, "Comma-separated betas, e.g. 1,2,5");
    sweepg->add_option("--dthetas", sg_dthetas, "Comma-separated angular steps in degrees");
    sweepg->add_option("--threads", sg_threads, "Worker threads (default: BSKEL_THREADS or all cores)");
    sweepg->add_option("--out", sg_out, "Metrics CSV output (default: stdout)");

    // render
    auto* renderc = app.add_subcommand("render", "Draw a point set and its edges as SVG");
    std::string rd_points, rd_edges, rd_out;
    double rd_beta = 1.0;
    RenderStyle style;
    renderc->add_option("--points", rd_points, "Point file")->required();
    auto* rd_edges_opt = renderc->add_option("--edges", rd_edges, "Edge list file");
    auto* rd_beta_opt = renderc->add_option("--beta", rd_beta, "Build edges at this beta instead of --edges");
    rd_edges_opt->excludes(rd_beta_opt);
    renderc->add_option("--node-radius", style.node_radius, "Node circle radius")->capture_default_str();
    renderc->add_option("--edge-width", style.edge_width, "Edge stroke width")->capture_default_str();
    renderc->add_option("--padding", style.canvas_padding, "Canvas padding")->capture_default_str();
    renderc->add_option("--node-fill", style.node_fill, "Node fill color")->capture_default_str();
    renderc->add_option("--edge-stroke", style.edge_stroke, "Edge stroke color")->capture_default_str();
    renderc->add_option("--out", rd_out, "SVG output (default: stdout)");

    // stability
    auto* stab = app.add_subcommand("stability", "Check whether a point set's skeleton is stable for all beta");
    std::string st_points;
    stab->add_option("--points", st_points, "Point file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (build->parsed()) {
            const PointSet ps = read_points_file(build_points);
            const SkeletonGraph g = build_naive_flag ? build_naive(ps, build_beta) : build_indexed(ps, build_beta);
            if (!build_metrics_stdout || !build_edges_out.empty())
                emit(build_edges_out, out, [&](std::ostream& o) { write_edges(o, g); });
            if (build_metrics_stdout || !build_metrics_out.empty()) {
                const MetricsReport m = compute_metrics(
                    ps, g, build_doubled ? RandicConvention::OrderedPairs : RandicConvention::EdgeSum);
                auto write = [&](std::ostream& o) { o << kMetricsCsvHeader << '\n' << metrics_csv_row(m) << '\n'; };
                if (build_metrics_stdout)
                    write(out);
                if (!build_metrics_out.empty())
                    emit(build_metrics_out, out, write);
            }
            return 0;
        }

        if (growc->parsed()) {
            const GrowthConfig cfg = grow_flags.resolve(load_config(grow_config));
            err << "grow: beta=" << format_real(cfg.beta) << " dtheta=" << format_real(cfg.dtheta)
                << " r_max=" << format_real(cfg.r_max) << '\n';
            const GrowthResult res = grow(cfg);
            err << "grow: " << res.points.size() << " nodes, " << res.graph.edge_count() << " edges\n";
            emit(grow_trace_out, out, [&](std::ostream& o) { write_trace_csv(o, res.trace); });
            if (!grow_points_out.empty())
                emit(grow_points_out, out, [&](std::ostream& o) { write_points(o, res.points); });
            if (!grow_edges_out.empty())
                emit(grow_edges_out, out, [&](std::ostream& o) { write_edges(o, res.graph); });
            if (!grow_svg_out.empty())
                emit(grow_svg_out, out, [&](std::ostream& o) { o << render_svg(res.points, res.graph); });
            if (!grow_metrics_out.empty()) {
                const MetricsReport m = compute_metrics(res.points, res.graph);
                emit(grow_metrics_out, out,
                     [&](std::ostream& o) { o << kMetricsCsvHeader << '\n' << metrics_csv_row(m) << '\n'; });
            }
            return 0;
        }

        if (sweepe->parsed()) {
            const KeyValues kv = load_config(se_config);
            RandomSetConfig rcfg;
            apply_random_set_keys(kv, rcfg);
            if (se_random_opt->count())
                rcfg.n = se_random;
            if (se_seed_opt->count())
                rcfg.rng_seed = se_seed;
            if (se_radius_opt->count())
                rcfg.domain_radius = se_radius;
            if (se_sep_opt->count())
                rcfg.min_separation = se_sep;
            auto pick = [&](CLI::Option* opt, double flag, const char* key) {
                if (opt->count() == 0)
                    if (auto it = kv.find(key); it != kv.end())
                        return parse_real(it->second, std::string("config key '") + key + "'");
                return flag;
            };
            const double bmin = pick(se_min_opt, se_min, "beta_min");
            const double bmax = pick(se_max_opt, se_max, "beta_max");
            const double bstep = pick(se_step_opt, se_step, "beta_step");

            PointSet ps;
            if (!se_points.empty()) {
                ps = read_points_file(se_points);
            } else if (se_random_opt->count() || kv.count("n")) {
                ps = generate_random_set(rcfg);
                err << "sweep-edges: generated " << ps.size() << " points (rng=" << Rng::kAlgorithm
                    << ", seed=" << rcfg.rng_seed << ")\n";
            } else {
                throw Error("sweep-edges needs --points or --random");
            }
            if (!se_points_out.empty())
                emit(se_points_out, out, [&](std::ostream& o) { write_points(o, ps); });

            const SweepCurve curve =
                edge_loss_sweep(ps, bmin, bmax, bstep, se_mode == "nested" ? SweepMode::NestedReuse : SweepMode::Rebuild);
            emit(se_out, out, [&](std::ostream& o) { write_curve_csv(o, curve); });
            const PowerLawFit fit = fit_power_law(se_fit_max > 0.0 ? curve.prefix(se_fit_max) : curve);
            err << "sweep-edges: power-law exponent=" << format_real(fit.exponent)
                << " coefficient=" << format_real(fit.coefficient) << " r_squared=" << format_real(fit.r_squared)
                << '\n';
            if (!se_fit_out.empty())
                emit(se_fit_out, out, [&](std::ostream& o) { write_fit_csv(o, fit); });
            return 0;
        }

        if (sweepg->parsed()) {
            const KeyValues kv = load_config(sg_config);
            const GrowthConfig base = sg_flags.resolve(kv);
            auto list = [&](const std::string& flag, const char* key) {
                if (!flag.empty())
                    return parse_real_list(flag, std::string("--") + key);
                if (auto it = kv.find(key); it != kv.end())
                    return parse_real_list(it->second, std::string("config key '") + key + "'");
                return std::vector<double>{};
            };
            std::vector<double> betas = list(sg_betas, "betas");
            std::vector<double> dthetas = list(sg_dthetas, "dthetas");
            if (betas.empty())
                throw Error("sweep-grow needs --betas (or a 'betas' config key)");
            if (dthetas.empty())
                dthetas = {base.dtheta};
            err << "sweep-grow: " << betas.size() * dthetas.size() << " runs\n";
            const auto runs = growth_sweep(base, betas, dthetas, sg_threads);
            emit(sg_out, out, [&](std::ostream& o) { write_growth_sweep_csv(o, runs); });
            return 0;
        }

        if (renderc->parsed()) {
            const PointSet ps = read_points_file(rd_points);
            SkeletonGraph g;
            if (!rd_edges.empty())
                g = SkeletonGraph(ps.size(), 1.0, read_edges_file(rd_edges));
            else
                g = rd_beta_opt->count() ? build_indexed(ps, rd_beta) : SkeletonGraph(ps.size(), 1.0, {});
            emit(rd_out, out, [&](std::ostream& o) { o << render_svg(ps, g, style); });
            return 0;
        }

        if (stab->parsed()) {
            const PointSet ps = read_points_file(st_points);
            if (const auto v = find_stability_violation(ps)) {
                out << "stable: no\n"
                    << "violation: edge " << v->a << ' ' << v->b << " strip contains " << v->x << '\n';
            } else {
                out << "stable: yes\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "bskel: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace bskel::cli

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bskel/growth.hpp"
#include "bskel/io.hpp"
#include "bskel/metrics.hpp"

namespace bskel {

/// Portable seeded generator. The engine sequence is fixed by the C++
/// standard and doubles are formed from the top 53 bits, so a seed yields
/// the same stream on every conforming platform.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 engine_;
};

struct RandomSetConfig {
    std::size_t n = 500;
    double domain_radius = 250.0;
    double min_separation = 5.0;
    std::uint64_t rng_seed = 1;

    void validate() const;
};

/// Consecutive rejections after which dart throwing gives up.
inline constexpr std::size_t kMaxConsecutiveRejections = 1'000'000;

/// Dart throwing: uniform candidates in the disc of domain_radius around the
/// origin (by rejection from the bounding square), kept when at least
/// min_separation from every kept point. Throws "density infeasible" after
/// kMaxConsecutiveRejections failed darts in a row.
PointSet generate_random_set(const RandomSetConfig& cfg);

struct SweepSample {
    double beta;
    double value;
};

struct SweepCurve {
    std::string label;
    std::vector<SweepSample> samples;

    /// Samples with beta <= beta_max.
    SweepCurve prefix(double beta_max) const;
};

/// beta_min + k * step for k = 0, 1, ... up to beta_max (inclusive, with a
/// relative slack of 1e-9 steps for the end point).
std::vector<double> beta_grid(double beta_min, double beta_max, double step);

enum class SweepMode {
    Rebuild,      // every beta built from scratch
    NestedReuse,  // each beta re-tests only the previous beta's edges
};

/// Edge count of the skeleton at every beta on the grid.
SweepCurve edge_loss_sweep(const PointSet& ps, double beta_min, double beta_max, double step,
                           SweepMode mode = SweepMode::Rebuild);

struct PowerLawFit {
    double exponent = 0.0;
    double coefficient = 0.0;
    double r_squared = 0.0;
};

/// Least squares of log(value) on log(beta) over samples with value > 0.
/// r_squared is 1 when the response has zero variance.
PowerLawFit fit_power_law(const SweepCurve& curve);

struct GrowthRun {
    GrowthConfig config;
    std::optional<MetricsReport> metrics;
    std::string error;  // empty on success
};

/// One grow + compute_metrics per (beta, dtheta), beta-major. Cells run
/// concurrently on up to `threads` workers; a failing cell records its
/// error and does not stop the others.
std::vector<GrowthRun> growth_sweep(const GrowthConfig& base, const std::vector<double>& betas,
                                    const std::vector<double>& dthetas, std::size_t threads = 0);

/// Spearman rank correlation with average ranks for ties. Returns 0 when
/// either side has no spread.
double spearman_rho(const std::vector<double>& xs, const std::vector<double>& ys);

// CSV writers.
inline constexpr const char* kCurveCsvHeader = "beta,edges";
void write_curve_csv(std::ostream& out, const SweepCurve& curve);
inline constexpr const char* kFitCsvHeader = "exponent,coefficient,r_squared";
void write_fit_csv(std::ostream& out, const PowerLawFit& fit);
inline constexpr const char* kGrowthSweepCsvHeader =
    "dtheta,beta,nodes,edges,avg_degree,total_length,diam_hops,diam_nodes,randic,status";
void write_growth_sweep_csv(std::ostream& out, const std::vector<GrowthRun>& runs);

// key=value configuration. apply_* read only the keys they know.
void apply_growth_keys(const KeyValues& kv, GrowthConfig& cfg);
void apply_random_set_keys(const KeyValues& kv, RandomSetConfig& cfg);
std::string to_config_text(const GrowthConfig& cfg);
std::string to_config_text(const RandomSetConfig& cfg);
/// Comma-separated reals, e.g. "1,2,5".
std::vector<double> parse_real_list(const std::string& text, const std::string& what);

} // namespace bskel

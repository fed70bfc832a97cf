#ifndef LRHAAR_HARNESS_HPP
#define LRHAAR_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lrhaar/coeffs.hpp"
#include "lrhaar/denoise.hpp"
#include "lrhaar/signals.hpp"
#include "lrhaar/stats.hpp"

namespace lrhaar {

extern const char* const kVersion;

// ---------------------------------------------------------------------------
// Per-coefficient simulation study: draw the two half blocks, form half
// means, compare the likelihood ratio and Fisz statistics.

struct CoeffStudySpec {
    NoiseFamily family;
    int j = 2;
    double mean_left = 10.0;
    double mean_right = 10.5;
    int replications = 1000;
};

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::size_t> counts;
};

struct CoeffStudyResult {
    MomentStats stats_g;
    MomentStats stats_f;
    std::vector<double> g_samples;
    std::vector<double> f_samples;
    Histogram abs_diff_histogram; // |g| - |f| per replication
    std::uint64_t seed = 0;
    CoeffStudySpec spec;
};

CoeffStudyResult coeff_study(const CoeffStudySpec& spec, std::uint64_t seed);

// ---------------------------------------------------------------------------
// MSE study over the four benchmark models, translation-invariant smoother,
// universal threshold, J0 = 0, paired noise across statistics.

enum class Model { BlocksPoisson, BlocksExponential, BumpsPoisson, BumpsExponential };

const char* model_name(Model m);          // "1a", "1b", "2a", "2b"
Model parse_model(const std::string& s);
Signal model_signal(Model m, std::size_t n);
NoiseFamily model_family(Model m);
Signal sample_model(Model m, const Signal& truth, std::uint64_t seed, std::uint64_t stream);

struct MseStudyConfig {
    std::vector<Model> models{Model::BlocksPoisson, Model::BlocksExponential,
                              Model::BumpsPoisson, Model::BumpsExponential};
    std::vector<Statistic> statistics{Statistic::LRH, Statistic::Fisz};
    int replications = 1000;
    std::size_t n = 2048;
    int jobs = 1;
};

struct MseCell {
    Model model;
    Statistic statistic;
    double mean_mse = 0.0;
    double std_error = 0.0;
    int replications = 0;
};

struct MseStudyReport {
    std::vector<MseCell> cells; // fixed order: models x statistics as configured
    std::uint64_t seed = 0;
    MseStudyConfig config;
};

MseStudyReport mse_study(const MseStudyConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Stabilization study: one sample from a blocks model, residual
// G(X) - G(signal) with its variance, QQ points and ACFs.

struct StabStudyResult {
    Signal residual;
    double variance = 0.0;
    std::vector<std::pair<double, double>> qq;
    std::vector<double> acf_residual;    // lags 0..50
    std::vector<double> acf_residual_sq;
    std::uint64_t seed = 0;
    Model model = Model::BlocksPoisson;
    std::size_t n = 2048;
};

// model must be one of the blocks models (1a or 1b).
StabStudyResult stabilization_study(Model model, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Count-data workflow.

struct CountSeries {
    std::vector<long> counts;
    std::string meta; // header line carried opaquely, if any
};

struct CountWindow {
    std::size_t begin = 0;
    std::size_t end = 0; // half open
};

// Reads the 1-based `column` from a CSV file of nonnegative integer counts.
// A non-numeric first row is treated as a header. Without a window the
// length must be dyadic.
CountSeries load_counts(const std::string& path, int column = 1,
                        std::optional<CountWindow> window = std::nullopt);

Signal counts_as_signal(const CountSeries& cs);

// Poisson translation-invariant smoothing of a count series.
Signal denoise_counts(const CountSeries& cs, const DenoiseConfig& cfg);

// ---------------------------------------------------------------------------
// Report serialization (deterministic: no timing fields).

nlohmann::json report_to_json(const CoeffStudyResult& r);
nlohmann::json report_to_json(const MseStudyReport& r);
nlohmann::json report_to_json(const StabStudyResult& r);

// Five-number summary (min, q1, median, q3, max) used by the boxplot sidecars.
std::vector<double> five_number_summary(std::vector<double> xs);

} // namespace lrhaar

#endif

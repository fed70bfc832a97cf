#include "lrhaar/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <thread>

#include "lrhaar/stabilize.hpp"

namespace lrhaar {

const char* const kVersion = "lrhaar 0.1.0";

namespace {

const char* statistic_name(Statistic s) { return s == Statistic::LRH ? "lrh" : "fisz"; }

double draw_half_mean(Rng& rng, const NoiseFamily& fam, double mean, std::size_t nobs) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nobs; ++i) {
        switch (fam.kind) {
        case NoiseFamily::Kind::Poisson:
            acc += static_cast<double>(rng.next_poisson(mean));
            break;
        case NoiseFamily::Kind::ScaledChiSquared:
            acc += rng.next_gamma(0.5 * fam.m, fam.m / (2.0 * mean));
            break;
        case NoiseFamily::Kind::Gaussian:
            acc += mean + fam.sigma * rng.next_normal();
            break;
        }
    }
    return acc / static_cast<double>(nobs);
}

Histogram make_histogram(const std::vector<double>& xs, std::size_t bins) {
    Histogram h;
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    h.lo = *lo;
    h.hi = *hi;
    h.counts.assign(bins, 0);
    const double width = (h.hi - h.lo) / static_cast<double>(bins);
    for (double x : xs) {
        std::size_t b = width > 0.0 ? static_cast<std::size_t>((x - h.lo) / width) : 0;
        if (b >= bins) b = bins - 1;
        ++h.counts[b];
    }
    return h;
}

void validate_means(const NoiseFamily& fam, double left, double right) {
    if (fam.kind == NoiseFamily::Kind::Poisson && (left < 0.0 || right < 0.0))
        throw domain_error("poisson means must be nonnegative");
    if (fam.kind == NoiseFamily::Kind::ScaledChiSquared && (!(left > 0.0) || !(right > 0.0)))
        throw domain_error("chi-squared means must be positive");
}

// Runs fn(i) for i in [0, count) across `jobs` threads; any exception is
// rethrown on the caller thread.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    const int workers = std::min(jobs, count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace

CoeffStudyResult coeff_study(const CoeffStudySpec& spec, std::uint64_t seed) {
    if (spec.replications < 2) throw domain_error("coeff study needs at least 2 replications");
    if (spec.j < 1) throw domain_error("scale must be >= 1");
    validate_means(spec.family, spec.mean_left, spec.mean_right);

    const std::size_t nobs = std::size_t{1} << (spec.j - 1);
    CoeffStudyResult out;
    out.seed = seed;
    out.spec = spec;
    out.g_samples.reserve(static_cast<std::size_t>(spec.replications));
    out.f_samples.reserve(static_cast<std::size_t>(spec.replications));

    std::vector<double> abs_diff;
    abs_diff.reserve(static_cast<std::size_t>(spec.replications));
    for (int i = 0; i < spec.replications; ++i) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        const double u = draw_half_mean(rng, spec.family, spec.mean_left, nobs);
        const double v = draw_half_mean(rng, spec.family, spec.mean_right, nobs);
        const HalfPairStats p{u, v, spec.j};
        const double g = g_coefficient(p, spec.family);
        const double f = f_coefficient(p, spec.family);
        out.g_samples.push_back(g);
        out.f_samples.push_back(f);
        abs_diff.push_back(std::fabs(g) - std::fabs(f));
    }
    out.stats_g = moment_stats(out.g_samples);
    out.stats_f = moment_stats(out.f_samples);
    out.abs_diff_histogram = make_histogram(abs_diff, 40);
    return out;
}

const char* model_name(Model m) {
    switch (m) {
    case Model::BlocksPoisson: return "1a";
    case Model::BlocksExponential: return "1b";
    case Model::BumpsPoisson: return "2a";
    case Model::BumpsExponential: return "2b";
    }
    return "?";
}

Model parse_model(const std::string& s) {
    if (s == "1a") return Model::BlocksPoisson;
    if (s == "1b") return Model::BlocksExponential;
    if (s == "2a") return Model::BumpsPoisson;
    if (s == "2b") return Model::BumpsExponential;
    throw domain_error("unknown model '" + s + "' (want 1a, 1b, 2a or 2b)");
}

Signal model_signal(Model m, std::size_t n) {
    TestSignalSpec spec;
    spec.n = n;
    if (m == Model::BlocksPoisson || m == Model::BlocksExponential) {
        spec.shape = TestSignalSpec::Shape::Blocks;
        spec.target_min = 0.681;
        spec.target_max = 27.029;
    } else {
        spec.shape = TestSignalSpec::Shape::Bumps;
        spec.target_min = 1.0;
        spec.target_max = 12.565;
    }
    return make_signal(spec);
}

NoiseFamily model_family(Model m) {
    const bool poisson = (m == Model::BlocksPoisson || m == Model::BumpsPoisson);
    return poisson ? NoiseFamily::poisson() : NoiseFamily::scaled_chisq(2);
}

Signal sample_model(Model m, const Signal& truth, std::uint64_t seed, std::uint64_t stream) {
    if (model_family(m).kind == NoiseFamily::Kind::Poisson)
        return sample_poisson(truth, seed, stream);
    return sample_scaled_chisq(truth, 2, seed, stream);
}

MseStudyReport mse_study(const MseStudyConfig& cfg, std::uint64_t seed) {
    if (cfg.replications < 1) throw domain_error("mse study needs at least 1 replication");
    MseStudyReport report;
    report.seed = seed;
    report.config = cfg;

    const double t = universal_threshold(cfg.n);
    for (Model m : cfg.models) {
        const Signal truth = model_signal(m, cfg.n);
        const NoiseFamily fam = model_family(m);

        // statistics share replication noise: the sample is drawn once per i
        std::vector<std::vector<double>> mses(
            cfg.statistics.size(), std::vector<double>(static_cast<std::size_t>(cfg.replications)));
        parallel_for(cfg.replications, cfg.jobs, [&](int i) {
            const Signal x = sample_model(m, truth, seed, static_cast<std::uint64_t>(i));
            for (std::size_t s = 0; s < cfg.statistics.size(); ++s) {
                DenoiseConfig dc;
                dc.threshold = t;
                dc.j0 = 0;
                dc.variant = Variant::TranslationInvariant;
                dc.family = fam;
                dc.statistic = cfg.statistics[s];
                mses[s][static_cast<std::size_t>(i)] = mse(denoise_ti(x, dc), truth);
            }
        });

        for (std::size_t s = 0; s < cfg.statistics.size(); ++s) {
            MseCell cell;
            cell.model = m;
            cell.statistic = cfg.statistics[s];
            cell.replications = cfg.replications;
            double mean = 0.0;
            for (double v : mses[s]) mean += v; // fixed order, bit-reproducible
            mean /= static_cast<double>(cfg.replications);
            double ss = 0.0;
            for (double v : mses[s]) ss += (v - mean) * (v - mean);
            cell.mean_mse = mean;
            cell.std_error = cfg.replications > 1
                                 ? std::sqrt(ss / (static_cast<double>(cfg.replications - 1) *
                                                   static_cast<double>(cfg.replications)))
                                 : 0.0;
            report.cells.push_back(cell);
        }
    }
    return report;
}

StabStudyResult stabilization_study(Model model, std::uint64_t seed) {
    if (model != Model::BlocksPoisson && model != Model::BlocksExponential)
        throw domain_error("stabilization study runs on the blocks models (1a, 1b)");

    StabStudyResult out;
    out.model = model;
    out.seed = seed;
    out.n = 2048;
    const Signal truth = model_signal(model, out.n);
    const Signal x = sample_model(model, truth, seed, 0);
    out.residual = stabilized_residual(x, truth, model_family(model));
    out.variance = moment_stats(out.residual).variance;
    out.qq = normal_qq_points(out.residual);
    out.acf_residual = acf(out.residual, 50);
    Signal sq(out.residual.size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = out.residual[i] * out.residual[i];
    out.acf_residual_sq = acf(sq, 50);
    return out;
}

CountSeries load_counts(const std::string& path, int column, std::optional<CountWindow> window) {
    if (column < 1) throw domain_error("count column is 1-based");
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "' for reading");

    CountSeries cs;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        // split the requested CSV column
        std::string cell;
        std::size_t start = 0;
        for (int c = 1; c <= column; ++c) {
            const std::size_t comma = line.find(',', start);
            cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (comma == std::string::npos && c < column)
                throw domain_error("'" + path + "': row " + std::to_string(row) + " has fewer than " +
                                   std::to_string(column) + " columns");
            start = comma + 1;
        }
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());

        long v = 0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
            if (row == 1 && cs.counts.empty()) {
                cs.meta = line; // header
                continue;
            }
            throw domain_error("'" + path + "': row " + std::to_string(row) +
                               " is not an integer count: '" + cell + "'");
        }
        if (v < 0)
            throw domain_error("'" + path + "': row " + std::to_string(row) +
                               " holds a negative count: " + cell);
        cs.counts.push_back(v);
    }
    if (cs.counts.empty()) throw domain_error("'" + path + "': no counts");

    if (window) {
        if (window->begin >= window->end || window->end > cs.counts.size())
            throw domain_error("window [" + std::to_string(window->begin) + ":" +
                               std::to_string(window->end) + ") does not fit " +
                               std::to_string(cs.counts.size()) + " rows");
        cs.counts = std::vector<long>(cs.counts.begin() + static_cast<std::ptrdiff_t>(window->begin),
                                      cs.counts.begin() + static_cast<std::ptrdiff_t>(window->end));
    }
    if (!is_power_of_two(cs.counts.size()) || cs.counts.size() < 2)
        throw length_error("count series length " + std::to_string(cs.counts.size()) +
                           " is not dyadic; use a window to select 2^J rows");
    return cs;
}

Signal counts_as_signal(const CountSeries& cs) {
    Signal x(cs.counts.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(cs.counts[i]);
    return x;
}

Signal denoise_counts(const CountSeries& cs, const DenoiseConfig& cfg) {
    if (cfg.family.kind != NoiseFamily::Kind::Poisson)
        throw domain_error("count smoothing uses the poisson family");
    return denoise_ti(counts_as_signal(cs), cfg);
}

std::vector<double> five_number_summary(std::vector<double> xs) {
    if (xs.empty()) throw domain_error("five-number summary needs data");
    std::sort(xs.begin(), xs.end());
    const auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(xs.size() - 1);
        const std::size_t i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        return i + 1 < xs.size() ? xs[i] * (1.0 - frac) + xs[i + 1] * frac : xs[i];
    };
    return {xs.front(), quantile(0.25), quantile(0.5), quantile(0.75), xs.back()};
}

namespace {

nlohmann::json moments_to_json(const MomentStats& s) {
    return {{"mean", s.mean}, {"variance", s.variance}, {"skewness", s.skewness}, {"kurtosis", s.kurtosis}};
}

nlohmann::json sampler_note() {
    return "rng xoshiro256++/splitmix64; poisson inversion below 30 with superposition splitting; "
           "gamma marsaglia-tsang";
}

} // namespace

nlohmann::json report_to_json(const CoeffStudyResult& r) {
    nlohmann::json j;
    j["report"] = "coeff-study";
    j["version"] = kVersion;
    j["seed"] = r.seed;
    j["sampler"] = sampler_note();
    j["config"] = {{"family", r.spec.family.name()},
                   {"scale", r.spec.j},
                   {"mean_left", r.spec.mean_left},
                   {"mean_right", r.spec.mean_right},
                   {"replications", r.spec.replications}};
    j["g"] = moments_to_json(r.stats_g);
    j["f"] = moments_to_json(r.stats_f);
    j["g_five_number"] = five_number_summary(r.g_samples);
    j["f_five_number"] = five_number_summary(r.f_samples);
    j["abs_diff_histogram"] = {{"lo", r.abs_diff_histogram.lo},
                               {"hi", r.abs_diff_histogram.hi},
                               {"counts", r.abs_diff_histogram.counts}};
    return j;
}

nlohmann::json report_to_json(const MseStudyReport& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (const MseCell& c : r.cells)
        cells.push_back({{"model", model_name(c.model)},
                         {"statistic", statistic_name(c.statistic)},
                         {"mean_mse", c.mean_mse},
                         {"std_error", c.std_error},
                         {"replications", c.replications}});
    nlohmann::json stats = nlohmann::json::array();
    for (Statistic s : r.config.statistics) stats.push_back(statistic_name(s));
    nlohmann::json models = nlohmann::json::array();
    for (Model m : r.config.models) models.push_back(model_name(m));
    return {{"report", "mse-study"},
            {"version", kVersion},
            {"seed", r.seed},
            {"sampler", sampler_note()},
            {"config",
             {{"models", models},
              {"statistics", stats},
              {"replications", r.config.replications},
              {"n", r.config.n},
              {"threshold", "universal"},
              {"j0", 0},
              {"variant", "ti"}}},
            {"cells", cells}};
}

nlohmann::json report_to_json(const StabStudyResult& r) {
    nlohmann::json qq = nlohmann::json::array();
    for (const auto& [theo, emp] : r.qq) qq.push_back({theo, emp});
    return {{"report", "stab-study"},
            {"version", kVersion},
            {"seed", r.seed},
            {"sampler", sampler_note()},
            {"config", {{"model", model_name(r.model)}, {"n", r.n}}},
            {"residual_variance", r.variance},
            {"residual", r.residual},
            {"qq", qq},
            {"acf_residual", r.acf_residual},
            {"acf_residual_sq", r.acf_residual_sq}};
}

} // namespace lrhaar

#include "lrhaar/denoise.hpp"

#include <cmath>
#include <string>

namespace lrhaar {

namespace {

void check_config(const DenoiseConfig& cfg, int levels) {
    if (!(cfg.threshold > 0.0)) throw domain_error("threshold must be positive");
    if (cfg.j0 < 0 || cfg.j0 > levels - 1)
        throw domain_error("j0 must lie in [0, J-1], got " + std::to_string(cfg.j0));
}

double decision_statistic(const HalfPairStats& p, const DenoiseConfig& cfg) {
    return cfg.statistic == Statistic::LRH ? g_coefficient(p, cfg.family)
                                           : f_coefficient(p, cfg.family);
}

// Circular window sums of the doubled input, shared by the TI analysis paths.
struct CircularHalfMeans {
    explicit CircularHalfMeans(const Signal& x) : n(x.size()), prefix(2 * x.size() + 1, 0.0) {
        for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + x[i % n];
    }
    HalfPairStats at(int j, std::size_t p) const {
        const std::size_t half = std::size_t{1} << (j - 1);
        const double u = (prefix[p + half] - prefix[p]) / static_cast<double>(half);
        const double v = (prefix[p + 2 * half] - prefix[p + half]) / static_cast<double>(half);
        return {u, v, j};
    }
    std::size_t n;
    std::vector<double> prefix;
};

} // namespace

double universal_threshold(std::size_t n) {
    if (n < 2) throw domain_error("universal threshold needs n >= 2");
    return std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

Signal denoise_decimated(const Signal& x, const DenoiseConfig& cfg) {
    cfg.family.validate_signal(x);
    HaarDecomposition h = forward_haar(x);
    check_config(cfg, h.levels());
    const LocalMeansTable table = local_means(x);

    for (int j = 1; j <= h.levels(); ++j) {
        std::vector<double>& det = h.detail(j);
        for (std::size_t k = 0; k < det.size(); ++k) {
            if (j <= cfg.j0) {
                det[k] = 0.0;
                continue;
            }
            const HalfPairStats p{table.left_half_mean(j, k), table.right_half_mean(j, k), j};
            if (!(std::fabs(decision_statistic(p, cfg)) > cfg.threshold)) det[k] = 0.0;
        }
    }
    return inverse_haar(h);
}

Signal denoise_ti(const Signal& x, const DenoiseConfig& cfg) {
    cfg.family.validate_signal(x);
    StationaryDecomposition sd = forward_stationary(x);
    check_config(cfg, sd.levels());
    const CircularHalfMeans means(x);

    for (int j = 1; j <= sd.levels(); ++j) {
        std::vector<double>& det = sd.detail(j);
        for (std::size_t p = 0; p < det.size(); ++p) {
            if (j <= cfg.j0) {
                det[p] = 0.0;
                continue;
            }
            if (!(std::fabs(decision_statistic(means.at(j, p), cfg)) > cfg.threshold)) det[p] = 0.0;
        }
    }
    return inverse_stationary_average(sd);
}

Signal denoise(const Signal& x, const DenoiseConfig& cfg) {
    return cfg.variant == Variant::Decimated ? denoise_decimated(x, cfg) : denoise_ti(x, cfg);
}

std::vector<std::vector<std::uint8_t>> kept_details(const Signal& x, const DenoiseConfig& cfg) {
    cfg.family.validate_signal(x);
    const int levels = dyadic_levels(x.size());
    check_config(cfg, levels);

    std::vector<std::vector<std::uint8_t>> kept(static_cast<std::size_t>(levels));
    if (cfg.variant == Variant::Decimated) {
        const LocalMeansTable table = local_means(x);
        for (int j = 1; j <= levels; ++j) {
            std::vector<std::uint8_t>& row = kept[static_cast<std::size_t>(j) - 1];
            row.assign(x.size() >> j, 0);
            if (j <= cfg.j0) continue;
            for (std::size_t k = 0; k < row.size(); ++k) {
                const HalfPairStats p{table.left_half_mean(j, k), table.right_half_mean(j, k), j};
                row[k] = std::fabs(decision_statistic(p, cfg)) > cfg.threshold ? 1 : 0;
            }
        }
    } else {
        const CircularHalfMeans means(x);
        for (int j = 1; j <= levels; ++j) {
            std::vector<std::uint8_t>& row = kept[static_cast<std::size_t>(j) - 1];
            row.assign(x.size(), 0);
            if (j <= cfg.j0) continue;
            for (std::size_t p = 0; p < row.size(); ++p)
                row[p] = std::fabs(decision_statistic(means.at(j, p), cfg)) > cfg.threshold ? 1 : 0;
        }
    }
    return kept;
}

double mse(const Signal& estimate, const Signal& truth) {
    if (estimate.size() != truth.size() || estimate.empty())
        throw domain_error("mse requires equal nonempty lengths");
    double acc = 0.0;
    for (std::size_t i = 0; i < estimate.size(); ++i) {
        const double d = estimate[i] - truth[i];
        acc += d * d;
    }
    return acc / static_cast<double>(estimate.size());
}

} // namespace lrhaar

#include "lrhaar/signals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lrhaar {

namespace {

// Knot positions shared by blocks and bumps (Donoho & Johnstone 1994).
const double kKnots[11] = {0.10, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81};
const double kBlockHeights[11] = {4.0, -5.0, 3.0, -4.0, 5.0, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2};
const double kBumpHeights[11] = {4.0, 5.0, 3.0, 4.0, 5.0, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2};
const double kBumpWidths[11] = {0.005, 0.005, 0.006, 0.01, 0.01, 0.03, 0.01, 0.01, 0.005, 0.008, 0.005};

double blocks_raw(double t) {
    double y = 0.0;
    for (int j = 0; j < 11; ++j)
        if (t >= kKnots[j]) y += kBlockHeights[j];
    return y;
}

// Compactly supported bump kernel max(0, 1-|t|)^4 (the DJ.EX convention),
// not the heavy-tailed (1+|t|)^-4 variant.
double bumps_raw(double t) {
    double y = 0.0;
    for (int j = 0; j < 11; ++j) {
        const double z = std::fabs((t - kKnots[j]) / kBumpWidths[j]);
        const double b = std::max(0.0, 1.0 - z);
        y += kBumpHeights[j] * (b * b * b * b);
    }
    return y;
}

} // namespace

Signal make_signal(const TestSignalSpec& spec) {
    if (!(spec.target_min < spec.target_max))
        throw domain_error("target_min must be strictly below target_max");
    dyadic_levels(spec.n);

    Signal y(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double t = static_cast<double>(i + 1) / static_cast<double>(spec.n);
        y[i] = spec.shape == TestSignalSpec::Shape::Blocks ? blocks_raw(t) : bumps_raw(t);
    }

    const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
    const double lo = *lo_it, hi = *hi_it;
    if (!(hi > lo)) throw domain_error("raw test signal is constant, cannot rescale");
    const double scale = (spec.target_max - spec.target_min) / (hi - lo);
    for (double& v : y) v = spec.target_min + (v - lo) * scale;
    return y;
}

Signal sample_poisson(const Signal& lambda, Rng& rng) {
    Signal x(lambda.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (lambda[i] < 0.0)
            throw domain_error("poisson intensity must be nonnegative; lambda[" +
                               std::to_string(i) + "] = " + std::to_string(lambda[i]));
        x[i] = static_cast<double>(rng.next_poisson(lambda[i]));
    }
    return x;
}

Signal sample_poisson(const Signal& lambda, std::uint64_t seed, std::uint64_t stream) {
    Rng rng(seed, stream);
    return sample_poisson(lambda, rng);
}

Signal sample_scaled_chisq(const Signal& sigma2, int m, Rng& rng) {
    if (m < 1) throw domain_error("degrees of freedom must be >= 1");
    Signal x(sigma2.size());
    const double shape = 0.5 * static_cast<double>(m);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(sigma2[i] > 0.0))
            throw domain_error("chi-squared mean must be positive; sigma2[" + std::to_string(i) +
                               "] = " + std::to_string(sigma2[i]));
        x[i] = rng.next_gamma(shape, static_cast<double>(m) / (2.0 * sigma2[i]));
    }
    return x;
}

Signal sample_scaled_chisq(const Signal& sigma2, int m, std::uint64_t seed, std::uint64_t stream) {
    Rng rng(seed, stream);
    return sample_scaled_chisq(sigma2, m, rng);
}

Signal sample_gaussian(const Signal& theta, double sigma, Rng& rng) {
    if (!(sigma > 0.0)) throw domain_error("gaussian sigma must be > 0");
    Signal x(theta.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = theta[i] + sigma * rng.next_normal();
    return x;
}

Signal sample_gaussian(const Signal& theta, double sigma, std::uint64_t seed, std::uint64_t stream) {
    Rng rng(seed, stream);
    return sample_gaussian(theta, sigma, rng);
}

} // namespace lrhaar

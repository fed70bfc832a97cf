#ifndef LRHAAR_STATS_HPP
#define LRHAAR_STATS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lrhaar/errors.hpp"

namespace lrhaar {

// Sample moments: variance with the n-1 denominator; skewness m3/m2^(3/2)
// and kurtosis m4/m2^2 (non-excess, normal -> 3) from central moments with
// denominator n.
struct MomentStats {
    double variance = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double mean = 0.0;
};

MomentStats moment_stats(const std::vector<double>& xs);

// Sample autocorrelations at lags 0..max_lag; acf[0] = 1.
std::vector<double> acf(const std::vector<double>& xs, std::size_t max_lag);

// Order statistics paired with standard normal quantiles at (i - 0.5)/n.
std::vector<std::pair<double, double>> normal_qq_points(const std::vector<double>& xs);

// Kolmogorov-Smirnov distance to N(0,1) after standardizing the sample.
double ks_distance_normal(const std::vector<double>& xs);

double normal_cdf(double z);
double normal_quantile(double p);

} // namespace lrhaar

#endif

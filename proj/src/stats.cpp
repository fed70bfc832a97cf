#include "lrhaar/stats.hpp"

#include <algorithm>
#include <cmath>

#include "lrhaar/errors.hpp"

namespace lrhaar {

MomentStats moment_stats(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    if (n < 4) throw domain_error("moment statistics need at least 4 observations");

    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    if (m2 == 0.0) throw domain_error("degenerate sample: zero variance");

    MomentStats s;
    s.mean = mean;
    s.variance = m2 / static_cast<double>(n - 1);
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis = m4 / (m2 * m2);
    return s;
}

std::vector<double> acf(const std::vector<double>& xs, std::size_t max_lag) {
    const std::size_t n = xs.size();
    if (n == 0 || max_lag >= n) throw domain_error("acf needs max_lag < length");

    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);

    double denom = 0.0;
    for (double x : xs) denom += (x - mean) * (x - mean);
    if (denom == 0.0) throw domain_error("degenerate sample: zero variance");

    std::vector<double> r(max_lag + 1);
    r[0] = 1.0;
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) num += (xs[i] - mean) * (xs[i + k] - mean);
        r[k] = num / denom;
    }
    return r;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * 0.70710678118654752440084436210485); }

// Acklam's rational approximation with one Halley refinement; good to a few
// ulps across (0, 1).
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw domain_error("normal quantile needs p in (0,1)");

    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};

    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * 3.14159265358979323846) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

std::vector<std::pair<double, double>> normal_qq_points(const std::vector<double>& xs) {
    if (xs.empty()) throw domain_error("qq points need a nonempty sample");
    std::vector<double> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> pts(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        pts[i] = {normal_quantile((static_cast<double>(i) + 0.5) / n), sorted[i]};
    return pts;
}

double ks_distance_normal(const std::vector<double>& xs) {
    if (xs.size() < 2) throw domain_error("ks distance needs at least 2 observations");

    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    if (sd == 0.0) throw domain_error("degenerate sample: zero variance");

    std::vector<double> z(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) z[i] = (xs[i] - mean) / sd;
    std::sort(z.begin(), z.end());

    const double n = static_cast<double>(z.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double cdf = normal_cdf(z[i]);
        dist = std::max(dist, std::fabs(cdf - static_cast<double>(i) / n));
        dist = std::max(dist, std::fabs(static_cast<double>(i + 1) / n - cdf));
    }
    return dist;
}

} // namespace lrhaar

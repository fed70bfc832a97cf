#include "lrhaar/rng.hpp"

#include <cmath>

namespace lrhaar {

double Rng::next_normal() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

long Rng::next_poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda >= 30.0) {
        // Pois(a+b) = Pois(a) + Pois(b) for independent draws.
        const long parts = static_cast<long>(lambda / 25.0) + 1;
        const double each = lambda / static_cast<double>(parts);
        long total = 0;
        for (long i = 0; i < parts; ++i) total += next_poisson(each);
        return total;
    }
    const double u = next_uniform();
    double p = std::exp(-lambda);
    double cdf = p;
    long k = 0;
    while (u > cdf && k < 4000) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

double Rng::next_gamma(double shape, double rate) {
    if (shape < 1.0) {
        const double g = next_gamma(shape + 1.0, rate);
        return g * std::pow(next_uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

} // namespace lrhaar

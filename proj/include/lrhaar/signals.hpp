#ifndef LRHAAR_SIGNALS_HPP
#define LRHAAR_SIGNALS_HPP

#include <cstdint>

#include "lrhaar/haar.hpp"
#include "lrhaar/rng.hpp"

namespace lrhaar {

// Donoho-Johnstone test signal, affinely rescaled so that min and max hit the
// targets exactly.
struct TestSignalSpec {
    enum class Shape { Blocks, Bumps };
    Shape shape = Shape::Blocks;
    std::size_t n = 2048;
    double target_min = 0.0;
    double target_max = 1.0;
};

// Evaluates blocks/bumps on the grid t_i = i/n (i = 1..n; blocks takes the
// post-jump value when a grid point lands exactly on a knot) and rescales.
Signal make_signal(const TestSignalSpec& spec);

// Independent Pois(lambda_i) draws. Deterministic per (seed, stream).
Signal sample_poisson(const Signal& lambda, std::uint64_t seed, std::uint64_t stream = 0);
Signal sample_poisson(const Signal& lambda, Rng& rng);

// Independent sigma2_i * chi^2_m / m draws, i.e. Gamma(m/2, m/(2 sigma2_i));
// m = 2 is sigma2_i * Exp(1).
Signal sample_scaled_chisq(const Signal& sigma2, int m, std::uint64_t seed, std::uint64_t stream = 0);
Signal sample_scaled_chisq(const Signal& sigma2, int m, Rng& rng);

// theta_i + sigma * N(0,1).
Signal sample_gaussian(const Signal& theta, double sigma, std::uint64_t seed, std::uint64_t stream = 0);
Signal sample_gaussian(const Signal& theta, double sigma, Rng& rng);

} // namespace lrhaar

#endif

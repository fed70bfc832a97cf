#ifndef LRHAAR_RNG_HPP
#define LRHAAR_RNG_HPP

#include <cstdint>

namespace lrhaar {

// xoshiro256++ with SplitMix64 seeding. Counter-seedable: substream(seed, i)
// gives an independent stream per replication index, so experiment
// replications can run in any order (or in parallel) and still reproduce
// bit-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        for (auto& w : state_) w = splitmix64(x);
    }

    static Rng substream(std::uint64_t seed, std::uint64_t stream) { return Rng(seed, stream); }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0, 1); never returns 0 or 1.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (cosine branch only, one draw per pair).
    double next_normal();

    // Pois(lambda): sequential-search inversion for lambda < 30, larger
    // intensities split into a sum of independent draws below 30.
    long next_poisson(double lambda);

    // Gamma(shape, rate) by Marsaglia-Tsang; shape < 1 uses the
    // Gamma(shape+1) * U^(1/shape) boost.
    double next_gamma(double shape, double rate);

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
};

} // namespace lrhaar

#endif

#ifndef LRHAAR_DENOISE_HPP
#define LRHAAR_DENOISE_HPP

#include <cstdint>
#include <vector>

#include "lrhaar/coeffs.hpp"
#include "lrhaar/haar.hpp"

namespace lrhaar {

enum class Variant { Decimated, TranslationInvariant };
enum class Statistic { LRH, Fisz };

// Hard-threshold smoother configuration. Scales 1..j0 are forced to zero;
// at scales above j0 a detail survives iff |statistic| > threshold
// (strict: ties are killed). The coarsest smooth is never thresholded.
struct DenoiseConfig {
    double threshold = 0.0;
    int j0 = 0;
    Variant variant = Variant::TranslationInvariant;
    NoiseFamily family;
    Statistic statistic = Statistic::LRH;
};

// sqrt(2 log n), the threshold suitable for iid N(0,1) coefficients.
double universal_threshold(std::size_t n);

// Decimated smoother: analyze, kill details whose decision statistic does not
// exceed the threshold, synthesize.
Signal denoise_decimated(const Signal& x, const DenoiseConfig& cfg);

// Translation-invariant smoother: the same rule applied at every scale and
// cyclic shift, reconstructed in the average basis. Equals the average of the
// decimated smoother over all n cyclic shifts.
Signal denoise_ti(const Signal& x, const DenoiseConfig& cfg);

// Dispatch on cfg.variant.
Signal denoise(const Signal& x, const DenoiseConfig& cfg);

// Keep/kill decisions, one vector per scale j = 1..J (length 2^(J-j) for the
// decimated variant, n for the translation-invariant one).
std::vector<std::vector<std::uint8_t>> kept_details(const Signal& x, const DenoiseConfig& cfg);

// Mean squared error n^-1 ||estimate - truth||^2.
double mse(const Signal& estimate, const Signal& truth);

} // namespace lrhaar

#endif

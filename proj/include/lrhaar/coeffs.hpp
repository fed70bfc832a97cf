#ifndef LRHAAR_COEFFS_HPP
#define LRHAAR_COEFFS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lrhaar/errors.hpp"
#include "lrhaar/haar.hpp"

namespace lrhaar {

// Noise family of the observations: mean and variance driven by one local
// parameter (Poisson intensity, chi-squared sigma^2), or Gaussian with known
// sigma as the degenerate case in which the likelihood ratio statistic
// reduces to the normalized Haar detail.
struct NoiseFamily {
    enum class Kind { Poisson, ScaledChiSquared, Gaussian };

    Kind kind = Kind::Poisson;
    int m = 1;          // degrees of freedom, ScaledChiSquared only
    double sigma = 1.0; // noise sd, Gaussian only

    static NoiseFamily poisson() { return {Kind::Poisson, 1, 1.0}; }
    static NoiseFamily scaled_chisq(int m);
    static NoiseFamily gaussian(double sigma);

    // Throws domain_error (with the first offending index) if x is outside
    // the family's support: negative values for Poisson, non-positive values
    // for ScaledChiSquared.
    void validate_signal(const Signal& x) const;

    std::string name() const;
};

// Means of the two halves of a window of 2^j observations (halves of 2^(j-1)).
struct HalfPairStats {
    double u = 0.0; // left-half mean
    double v = 0.0; // right-half mean
    int j = 1;      // scale
};

// Signed square-rooted generalized log-likelihood ratio for equality of the
// two half means, Poisson likelihood. 0*log 0 := 0. Radicands that round
// below zero by less than 1e-12 are clamped; anything more negative is an
// internal inconsistency.
double g_poisson(const HalfPairStats& p);

// Same statistic for the sigma^2 * chi^2_m / m family; scales as sqrt(m).
double g_chisq(const HalfPairStats& p, int m);

// Fisz coefficient: Haar detail over the MLE of its own null sd.
double f_poisson(const HalfPairStats& p);
double f_chisq(const HalfPairStats& p, int m);

// Family dispatch. Gaussian returns 2^(j/2-1) (u - v) / sigma for both, the
// classical normalized Haar detail.
double g_coefficient(const HalfPairStats& p, const NoiseFamily& fam);
double f_coefficient(const HalfPairStats& p, const NoiseFamily& fam);

// Likelihood ratio Haar coefficients of a signal: g(j) has length 2^(J-j)
// for j = 1..J (j = 1 finest), smooth_top is the standard s_{J,1}.
struct LRHDecomposition {
    std::vector<std::vector<double>> g; // g[j-1] = scale j
    double smooth_top = 0.0;
    std::size_t n = 0;
    NoiseFamily family;

    int levels() const { return static_cast<int>(g.size()); }
    const std::vector<double>& coeffs(int j) const { return g[static_cast<std::size_t>(j) - 1]; }
    std::vector<double>& coeffs(int j) { return g[static_cast<std::size_t>(j) - 1]; }
};

LRHDecomposition lrh_forward(const Signal& x, const NoiseFamily& fam);

} // namespace lrhaar

#endif

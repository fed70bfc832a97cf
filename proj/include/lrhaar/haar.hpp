#ifndef LRHAAR_HAAR_HPP
#define LRHAAR_HAAR_HPP

#include <cstddef>
#include <vector>

#include "lrhaar/errors.hpp"

namespace lrhaar {

// A signal is a real vector; every transform entry point requires dyadic
// length n = 2^J, J >= 1. Scale indexing everywhere in this library:
// j = 1 is the finest scale, j = J the coarsest.
using Signal = std::vector<double>;

bool is_power_of_two(std::size_t n);

// J such that n = 2^J; throws length_error if n is not a power of two or n < 2.
int dyadic_levels(std::size_t n);

// Decimated Haar decomposition: detail(j) has length 2^(J-j) for j = 1..J,
// smooth_top is s_{J,1}.
struct HaarDecomposition {
    std::vector<std::vector<double>> details; // details[j-1] = scale j, j=1 finest
    double smooth_top = 0.0;
    std::size_t n = 0;

    int levels() const { return static_cast<int>(details.size()); }
    const std::vector<double>& detail(int j) const { return details[static_cast<std::size_t>(j) - 1]; }
    std::vector<double>& detail(int j) { return details[static_cast<std::size_t>(j) - 1]; }
};

// Block means of x at every dyadic scale. means(j)[k] is the mean over the
// block of length 2^j starting at k*2^j (0-based k), for j = 0..J.
// The two half-means of block (j,k) are the scale j-1 means at 2k and 2k+1.
class LocalMeansTable {
public:
    explicit LocalMeansTable(const Signal& x);

    int levels() const { return levels_; }
    const std::vector<double>& means(int j) const { return means_[static_cast<std::size_t>(j)]; }
    double left_half_mean(int j, std::size_t k) const { return means_[static_cast<std::size_t>(j) - 1][2 * k]; }
    double right_half_mean(int j, std::size_t k) const { return means_[static_cast<std::size_t>(j) - 1][2 * k + 1]; }

private:
    std::vector<std::vector<double>> means_; // means_[j], j = 0..J
    int levels_;
};

// Non-decimated (stationary, maximum-overlap) decomposition with circular
// boundary. At scale j, position p (0-based), the window is the circularly
// indexed x[p .. p+2^j); smooth(j)[p] = 2^(j/2) * window mean and
// detail(j)[p] = 2^(j/2-1) * (left half mean - right half mean), so
// subsampling detail(j) at positions k*2^j recovers the decimated d_{j,k+1}.
struct StationaryDecomposition {
    std::vector<std::vector<double>> smooths; // smooths[j-1], each length n
    std::vector<std::vector<double>> details; // details[j-1], each length n
    std::size_t n = 0;

    int levels() const { return static_cast<int>(details.size()); }
    const std::vector<double>& smooth(int j) const { return smooths[static_cast<std::size_t>(j) - 1]; }
    const std::vector<double>& detail(int j) const { return details[static_cast<std::size_t>(j) - 1]; }
    std::vector<double>& detail(int j) { return details[static_cast<std::size_t>(j) - 1]; }
};

// Pyramid recursion, O(n). Throws length_error on non-dyadic input.
HaarDecomposition forward_haar(const Signal& x);

// Exact inverse of forward_haar. Throws shape_error if level lengths are
// inconsistent.
Signal inverse_haar(const HaarDecomposition& h);

// All block means from prefix sums (not by rescaling smooth coefficients).
LocalMeansTable local_means(const Signal& x);

// O(n log n) via cumulative sums over the wrapped array.
StationaryDecomposition forward_stationary(const Signal& x);

// Average-basis synthesis: equals the mean over all n cyclic shifts of
// (shift -> decimated inverse -> unshift), computed recursively in O(n log n).
// Uses details at all scales plus smooth(J).
Signal inverse_stationary_average(const StationaryDecomposition& sd);

} // namespace lrhaar

#endif

#ifndef LRHAAR_STABILIZE_HPP
#define LRHAAR_STABILIZE_HPP

#include <utility>

#include "lrhaar/coeffs.hpp"
#include "lrhaar/haar.hpp"

namespace lrhaar {

// Recovers the two child smooth coefficients (s_{j-1,2k-1}, s_{j-1,2k}) from
// a parent smooth s_{j,k} and the likelihood ratio coefficient g at scale j.
// g = 0 yields equal children exactly. The strictly increasing pair objective
// is solved by bisection for the Poisson family (bracket width
// 1e-14 * max(1, u+v) or 200 iterations) and in closed form for the
// chi-squared family, whose objective is analytically invertible.
//
// Throws infeasible_error when |g| exceeds anything attainable given the
// parent (possible after editing coefficients in the transformed domain),
// domain_error when s_parent is outside the family domain.
std::pair<double, double> invert_pair(double s_parent, double g, int j, const NoiseFamily& fam);

// Exact inverse of lrh_forward: applies invert_pair hierarchically from the
// coarsest scale down, mirroring standard Haar synthesis. infeasible_error
// carries the offending (scale, location).
Signal lrh_inverse(const LRHDecomposition& d);

// The normalizing transform G: standard Haar synthesis applied to the vector
// of likelihood ratio coefficients (g_1, ..., g_J, s_{J,1}).
Signal stabilize(const Signal& x, const NoiseFamily& fam);

// Exact inverse of G: standard Haar analysis of y recovers (g, s_{J,1}),
// then lrh_inverse reconstructs the data.
Signal unstabilize(const Signal& y, const NoiseFamily& fam);

// G(x) - G(theta), elementwise. Both signals must share the dyadic length
// and lie in the family domain.
Signal stabilized_residual(const Signal& x, const Signal& theta, const NoiseFamily& fam);

namespace detail {
// The monotone bisection objective, exposed so tests can sample it across
// the bracket. a = u + v; v is the larger half mean, v in [a/2, a] (Poisson)
// or [a/2, a) (chi-squared).
double pair_objective(const NoiseFamily& fam, double a, double v);
} // namespace detail

} // namespace lrhaar

#endif

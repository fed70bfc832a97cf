#include "lrhaar/stabilize.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace lrhaar {

namespace {

const double kTwoLog2 = 1.3862943611198906188344642429164; // sup of phi on [0,1]

// phi(e) = (1+e)log(1+e) + (1-e)log(1-e), the Poisson pair objective in the
// normalized difference e = (v-u)/(u+v) of the ordered half means. Strictly
// increasing on [0,1], phi(0) = 0, phi(1) = 2 log 2.
double phi_poisson(double e) {
    double s = 0.0;
    if (1.0 + e > 0.0) s += (1.0 + e) * std::log1p(e);
    if (1.0 - e > 0.0) s += (1.0 - e) * std::log1p(-e);
    return s;
}

// Chi-squared counterpart: -log(1 - e^2), increasing on [0,1), to +inf.
double phi_chisq(double e) { return -std::log1p(-e * e); }

#ifndef NDEBUG
bool objective_nondecreasing(double (*phi)(double), double e_hi) {
    double prev = phi(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double cur = phi(e_hi * static_cast<double>(i) / 1000.0);
        if (cur < prev) return false;
        prev = cur;
    }
    return true;
}
#endif

// Bisection for e in [0, e_hi] with phi(e) = target; phi increasing,
// phi(0) <= target <= phi(e_hi). Bracket width in v units is (a/2) * width_e.
double solve_e(double (*phi)(double), double e_hi, double target, double a) {
    assert(objective_nondecreasing(phi, e_hi));
    double lo = 0.0, hi = e_hi;
    const double tol_e = 2e-14 * std::fmax(1.0, a) / a;
    for (int iter = 0; iter < 200 && hi - lo > tol_e; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> order_children(double a, double e, double g, int j) {
    const double hi_mean = 0.5 * a * (1.0 + e);
    const double lo_mean = a - hi_mean;
    const double scale = std::exp2(0.5 * (j - 1));
    if (g >= 0.0) return {scale * hi_mean, scale * lo_mean};
    return {scale * lo_mean, scale * hi_mean};
}

} // namespace

double detail::pair_objective(const NoiseFamily& fam, double a, double v) {
    const double e = (2.0 * v - a) / a;
    switch (fam.kind) {
    case NoiseFamily::Kind::Poisson: return phi_poisson(e);
    case NoiseFamily::Kind::ScaledChiSquared: return phi_chisq(e);
    case NoiseFamily::Kind::Gaussian: return e;
    }
    return 0.0;
}

std::pair<double, double> invert_pair(double s_parent, double g, int j, const NoiseFamily& fam) {
    if (!std::isfinite(s_parent) || !std::isfinite(g))
        throw domain_error("invert_pair requires finite (smooth, g)");
    const double a = s_parent * std::exp2(1.0 - 0.5 * j); // u + v
    const double equal_child = s_parent * 0.70710678118654752440084436210485;

    switch (fam.kind) {
    case NoiseFamily::Kind::Gaussian: {
        // g is the normalized detail, so the pair is linear in (a, g).
        const double diff = g * fam.sigma * std::exp2(1.0 - 0.5 * j); // u - v
        const double scale = std::exp2(0.5 * (j - 1));
        return {scale * 0.5 * (a + diff), scale * 0.5 * (a - diff)};
    }
    case NoiseFamily::Kind::Poisson: {
        if (a < 0.0) throw domain_error("poisson smooth coefficient must be nonnegative");
        if (a == 0.0) {
            if (g != 0.0)
                throw infeasible_error("nonzero g over an all-zero block", j);
            return {0.0, 0.0};
        }
        if (g == 0.0) return {equal_child, equal_child};
        // radicand = (a/2)*phi(e); feasible iff target <= phi(1) = 2 log 2
        const double target = g * g * std::exp2(-j) * 2.0 / a;
        if (target > kTwoLog2 * (1.0 + 1e-12))
            throw infeasible_error("|g| = " + std::to_string(std::fabs(g)) +
                                       " exceeds the attainable maximum for this block sum",
                                   j);
        const double e = solve_e(phi_poisson, 1.0, std::fmin(target, kTwoLog2), a);
        return order_children(a, e, g, j);
    }
    case NoiseFamily::Kind::ScaledChiSquared: {
        if (!(a > 0.0)) throw domain_error("chi-squared smooth coefficient must be positive");
        if (g == 0.0) return {equal_child, equal_child};
        // The objective -log(1-e^2) inverts in closed form: with
        // q = exp(-target), the smaller mean is (a/2) q / (1 + sqrt(1-q)),
        // cancellation-free down to subnormal children. q underflowing to 0
        // marks the genuinely infeasible coefficients.
        const double target = 2.0 * g * g * std::exp2(-j) / static_cast<double>(fam.m);
        const double q = std::exp(-target);
        const double lo_mean = 0.5 * a * q / (1.0 + std::sqrt(1.0 - q));
        if (!(lo_mean > 0.0))
            throw infeasible_error("|g| = " + std::to_string(std::fabs(g)) +
                                       " exceeds the attainable range for this block sum",
                                   j);
        assert(objective_nondecreasing(phi_chisq, 0.999999));
        const double scale = std::exp2(0.5 * (j - 1));
        const double hi_child = scale * (a - lo_mean);
        const double lo_child = scale * lo_mean;
        if (g >= 0.0) return {hi_child, lo_child};
        return {lo_child, hi_child};
    }
    }
    throw domain_error("unknown noise family");
}

Signal lrh_inverse(const LRHDecomposition& d) {
    const int levels = d.levels();
    if (levels < 1 || d.n != (std::size_t{1} << levels))
        throw shape_error("lrh decomposition level count does not match n");
    for (int j = 1; j <= levels; ++j) {
        if (d.coeffs(j).size() != (d.n >> j))
            throw shape_error("g length at scale " + std::to_string(j) + " is not n/2^j");
    }

    std::vector<double> smooth{d.smooth_top};
    for (int j = levels; j >= 1; --j) {
        const std::vector<double>& gj = d.coeffs(j);
        std::vector<double> next(2 * smooth.size());
        for (std::size_t k = 0; k < smooth.size(); ++k) {
            try {
                const auto [sl, sr] = invert_pair(smooth[k], gj[k], j, d.family);
                next[2 * k] = sl;
                next[2 * k + 1] = sr;
            } catch (const infeasible_error& err) {
                throw infeasible_error(std::string(err.what()) + " at scale " + std::to_string(j) +
                                           ", location " + std::to_string(k + 1),
                                       j, k + 1);
            }
        }
        smooth.swap(next);
    }
    return smooth;
}

Signal stabilize(const Signal& x, const NoiseFamily& fam) {
    LRHDecomposition d = lrh_forward(x, fam);
    HaarDecomposition h;
    h.n = d.n;
    h.smooth_top = d.smooth_top;
    h.details = std::move(d.g);
    return inverse_haar(h);
}

Signal unstabilize(const Signal& y, const NoiseFamily& fam) {
    HaarDecomposition h = forward_haar(y);
    LRHDecomposition d;
    d.n = h.n;
    d.smooth_top = h.smooth_top;
    d.g = std::move(h.details);
    d.family = fam;
    return lrh_inverse(d);
}

Signal stabilized_residual(const Signal& x, const Signal& theta, const NoiseFamily& fam) {
    if (x.size() != theta.size())
        throw domain_error("data and mean signal must have equal length");
    const Signal gx = stabilize(x, fam);
    const Signal gt = stabilize(theta, fam);
    Signal r(gx.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = gx[i] - gt[i];
    return r;
}

} // namespace lrhaar

#include "lrhaar/coeffs.hpp"

#include <cmath>
#include <stdexcept>

namespace lrhaar {

NoiseFamily NoiseFamily::scaled_chisq(int m) {
    if (m < 1) throw domain_error("chi-squared degrees of freedom must be >= 1");
    NoiseFamily f;
    f.kind = Kind::ScaledChiSquared;
    f.m = m;
    return f;
}

NoiseFamily NoiseFamily::gaussian(double sigma) {
    if (!(sigma > 0.0)) throw domain_error("gaussian sigma must be > 0");
    NoiseFamily f;
    f.kind = Kind::Gaussian;
    f.sigma = sigma;
    return f;
}

void NoiseFamily::validate_signal(const Signal& x) const {
    if (kind == Kind::Poisson) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < 0.0)
                throw domain_error("poisson data must be nonnegative; x[" + std::to_string(i) +
                                   "] = " + std::to_string(x[i]));
    } else if (kind == Kind::ScaledChiSquared) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i] > 0.0))
                throw domain_error("chi-squared data must be strictly positive; x[" +
                                   std::to_string(i) + "] = " + std::to_string(x[i]));
    }
}

std::string NoiseFamily::name() const {
    switch (kind) {
    case Kind::Poisson: return "poisson";
    case Kind::ScaledChiSquared: return "chisq:" + std::to_string(m);
    case Kind::Gaussian: return "gaussian:" + std::to_string(sigma);
    }
    return "?";
}

namespace {

double signum(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Guard shared by both g radicands: analytically >= 0 (Jensen), so anything
// below -1e-12 means the inputs or the formula are broken, not rounding.
double clamp_radicand(double r) {
    if (r >= 0.0) return r;
    if (r > -1e-12) return 0.0;
    throw std::logic_error("likelihood ratio radicand negative beyond rounding: " + std::to_string(r));
}

} // namespace

double g_poisson(const HalfPairStats& p) {
    if (p.u < 0.0 || p.v < 0.0) throw domain_error("poisson half means must be nonnegative");
    const double w = 0.5 * (p.u + p.v);
    if (w == 0.0) return 0.0; // 0*log 0 = 0 on both halves
    // u log u + v log v - 2w log w == w * [(1+e)log(1+e) + (1-e)log(1-e)]
    // with e = (u-v)/(u+v); the right-hand side cannot cancel catastrophically.
    const double e = (p.u - p.v) / (p.u + p.v);
    const double up = 1.0 + e;
    const double um = 1.0 - e;
    double phi = 0.0;
    if (up > 0.0) phi += up * std::log1p(e);
    if (um > 0.0) phi += um * std::log1p(-e);
    const double radicand = clamp_radicand(w * phi);
    return signum(p.u - p.v) * std::exp2(0.5 * p.j) * std::sqrt(radicand);
}

double g_chisq(const HalfPairStats& p, int m) {
    if (!(p.u > 0.0) || !(p.v > 0.0)) throw domain_error("chi-squared half means must be positive");
    if (m < 1) throw domain_error("chi-squared degrees of freedom must be >= 1");
    // log w - (log u + log v)/2 == -log(1 - e^2)/2, e = (u-v)/(u+v); that form
    // avoids cancellation for u ~= v but rounds to -log 0 once u/v is below
    // ~1e-16, where the textbook form has no cancellation to begin with
    const double e = (p.u - p.v) / (p.u + p.v);
    double radicand;
    if (std::fabs(e) < 0.9)
        radicand = -0.5 * static_cast<double>(m) * std::log1p(-e * e);
    else
        radicand = static_cast<double>(m) * (std::log(0.5 * (p.u + p.v)) -
                                             0.5 * std::log(p.u) - 0.5 * std::log(p.v));
    return signum(p.u - p.v) * std::exp2(0.5 * p.j) * std::sqrt(clamp_radicand(radicand));
}

double f_poisson(const HalfPairStats& p) {
    if (p.u < 0.0 || p.v < 0.0) throw domain_error("poisson half means must be nonnegative");
    const double w = 0.5 * (p.u + p.v);
    if (w == 0.0) return 0.0; // continuity convention at u = v = 0
    return std::exp2(0.5 * p.j - 1.0) * (p.u - p.v) / std::sqrt(w);
}

double f_chisq(const HalfPairStats& p, int m) {
    if (!(p.u > 0.0) || !(p.v > 0.0)) throw domain_error("chi-squared half means must be positive");
    if (m < 1) throw domain_error("chi-squared degrees of freedom must be >= 1");
    const double w = 0.5 * (p.u + p.v);
    return std::exp2(0.5 * (p.j - 3.0)) * std::sqrt(static_cast<double>(m)) * (p.u - p.v) / w;
}

double g_coefficient(const HalfPairStats& p, const NoiseFamily& fam) {
    switch (fam.kind) {
    case NoiseFamily::Kind::Poisson: return g_poisson(p);
    case NoiseFamily::Kind::ScaledChiSquared: return g_chisq(p, fam.m);
    case NoiseFamily::Kind::Gaussian: return std::exp2(0.5 * p.j - 1.0) * (p.u - p.v) / fam.sigma;
    }
    return 0.0;
}

double f_coefficient(const HalfPairStats& p, const NoiseFamily& fam) {
    switch (fam.kind) {
    case NoiseFamily::Kind::Poisson: return f_poisson(p);
    case NoiseFamily::Kind::ScaledChiSquared: return f_chisq(p, fam.m);
    case NoiseFamily::Kind::Gaussian: return std::exp2(0.5 * p.j - 1.0) * (p.u - p.v) / fam.sigma;
    }
    return 0.0;
}

LRHDecomposition lrh_forward(const Signal& x, const NoiseFamily& fam) {
    fam.validate_signal(x);
    const LocalMeansTable table = local_means(x);
    const int levels = table.levels();

    LRHDecomposition out;
    out.n = x.size();
    out.family = fam;
    out.g.resize(static_cast<std::size_t>(levels));
    for (int j = 1; j <= levels; ++j) {
        std::vector<double>& gj = out.coeffs(j);
        gj.resize(x.size() >> j);
        for (std::size_t k = 0; k < gj.size(); ++k)
            gj[k] = g_coefficient({table.left_half_mean(j, k), table.right_half_mean(j, k), j}, fam);
    }
    out.smooth_top = std::exp2(0.5 * levels) * table.means(levels)[0];
    return out;
}

} // namespace lrhaar

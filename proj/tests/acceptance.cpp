// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "lrhaar/denoise.hpp"
#include "lrhaar/harness.hpp"
#include "lrhaar/rng.hpp"
#include "lrhaar/signals.hpp"
#include "lrhaar/stabilize.hpp"
#include "lrhaar/stats.hpp"

using namespace lrhaar;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

double max_abs_diff(const Signal& a, const Signal& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
    return worst;
}

bool within(double value, double center, double tol) { return std::fabs(value - center) <= tol; }

// --------------------------------------------------------------------------
// 1. decimated + stationary roundtrips and energy preservation

void criterion_1() {
    Timer timer;
    Rng rng(101);
    double worst_round = 0.0, worst_energy = 0.0;
    for (std::size_t n : {std::size_t{8}, std::size_t{64}, std::size_t{1024}}) {
        for (int rep = 0; rep < 100; ++rep) {
            Signal x(n);
            for (double& v : x) v = -5.0 + 10.0 * rng.next_uniform();

            const HaarDecomposition h = forward_haar(x);
            worst_round = std::max(worst_round, max_abs_diff(x, inverse_haar(h)));
            worst_round = std::max(
                worst_round, max_abs_diff(x, inverse_stationary_average(forward_stationary(x))));

            double ex = 0.0, eh = h.smooth_top * h.smooth_top;
            for (double v : x) ex += v * v;
            for (const auto& level : h.details)
                for (double d : level) eh += d * d;
            worst_energy = std::max(worst_energy, std::fabs(eh - ex) / ex);
        }
    }
    const double secs = timer.seconds();
    const bool ok = worst_round < 1e-10 && worst_energy < 1e-10 && secs < 1.0;
    report(1, "transform correctness",
           ok, fmt("max roundtrip err %.2e, max energy err %.2e, %.2fs", worst_round, worst_energy, secs));
}

// --------------------------------------------------------------------------
// 2. G-invertibility on sampled Poisson and chi-squared data

void criterion_2() {
    Timer timer;
    const std::size_t n = 256;
    const Signal shape = model_signal(Model::BlocksPoisson, n);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const Signal xp = sample_poisson(shape, 202, static_cast<std::uint64_t>(rep));
        worst = std::max(worst, max_abs_diff(xp, lrh_inverse(lrh_forward(xp, NoiseFamily::poisson()))));
        const Signal xc = sample_scaled_chisq(shape, 2, 203, static_cast<std::uint64_t>(rep));
        worst = std::max(worst,
                         max_abs_diff(xc, lrh_inverse(lrh_forward(xc, NoiseFamily::scaled_chisq(2)))));
    }
    const double secs = timer.seconds();
    const bool ok = worst < 1e-8 && secs < 5.0;
    report(2, "G-invertibility", ok, fmt("max roundtrip err %.2e over 200 signals, %.2fs", worst, secs));
}

// --------------------------------------------------------------------------
// 3. coefficient algebra over random tuples

void criterion_3() {
    Timer timer;
    Rng rng(303);
    bool signs = true, domination = true, sandwich = true, scaling = true;
    for (int i = 0; i < 100000; ++i) {
        const double u = 1e-9 + 50.0 * rng.next_uniform();
        const double v = 1e-9 + 50.0 * rng.next_uniform();
        const int j = 1 + static_cast<int>(rng.next_u64() % 10);
        const int m = 1 + static_cast<int>(rng.next_u64() % 8);
        const HalfPairStats p{u, v, j};

        const double gp = g_poisson(p), fp = f_poisson(p);
        const double gc = g_chisq(p, m), fc = f_chisq(p, m);
        signs = signs && ((gp >= 0) == (fp >= 0)) && ((gc >= 0) == (fc >= 0));
        domination = domination && std::fabs(gp) >= std::fabs(fp) - 1e-10 &&
                     std::fabs(gc) >= std::fabs(fc) - 1e-10;

        const double harm = 2.0 / (1.0 / u + 1.0 / v);
        const double arith = 0.5 * (u + v);
        const double upper = std::exp2(0.5 * j - 1.0) * std::fabs(u - v) / std::sqrt(harm);
        const double lower = std::exp2(0.5 * j - 1.0) * std::fabs(u - v) / std::sqrt(arith);
        sandwich = sandwich && std::fabs(gp) <= upper + 1e-9 * (1.0 + upper) &&
                   std::fabs(gp) >= lower - 1e-9 * (1.0 + lower);

        const double expect = std::sqrt(static_cast<double>(m)) * g_chisq(p, 1);
        scaling = scaling && std::fabs(gc - expect) <= 1e-12 * std::max(1.0, std::fabs(gc));
    }
    const double secs = timer.seconds();
    const bool ok = signs && domination && sandwich && scaling && secs < 2.0;
    report(3, "coefficient algebra", ok,
           fmt("signs %d, |g|>=|f| %d, sandwich %d, m-scaling %d over 1e5 tuples, %.2fs",
               signs, domination, sandwich, scaling, secs));
}

// --------------------------------------------------------------------------
// 4. Poisson coefficient moments

void criterion_4() {
    Timer timer;
    CoeffStudySpec spec;
    spec.family = NoiseFamily::poisson();
    spec.j = 2;
    spec.replications = 1000;

    spec.mean_left = 10.0;
    spec.mean_right = 10.5;
    const CoeffStudyResult high = coeff_study(spec, 404);

    spec.mean_left = 0.2;
    spec.mean_right = 0.7;
    const CoeffStudyResult low = coeff_study(spec, 405);

    const double secs = timer.seconds();
    const bool ok = within(high.stats_g.variance, 1.06, 0.12) &&
                    within(high.stats_f.variance, 1.05, 0.12) &&
                    within(low.stats_g.variance, 0.92, 0.12) &&
                    within(low.stats_f.variance, 0.68, 0.12) && secs < 5.0;
    report(4, "poisson coefficient moments", ok,
           fmt("high var(g)=%.3f var(f)=%.3f, low var(g)=%.3f var(f)=%.3f, %.2fs",
               high.stats_g.variance, high.stats_f.variance, low.stats_g.variance,
               low.stats_f.variance, secs));
}

// --------------------------------------------------------------------------
// 5. chi-squared coefficient moments

// The replication count is not pinned by the criterion; 200k drives the
// estimates to their population values so the comparison is deterministic
// instead of riding on the noise of a 1000-replication kurtosis estimate
// (which has sd ~0.22 in the skewed cells).
void criterion_5() {
    Timer timer;
    struct Case {
        int m;
        double var_f, var_g, kurt_f, kurt_g;
    };
    // rows: (m=1, high), (m=1, low), (m=2, high), (m=2, low)
    const Case cases[4] = {{1, 0.67, 1.29, 1.81, 3.06},
                           {1, 0.59, 1.23, 2.70, 3.10},
                           {2, 0.81, 1.16, 2.19, 2.97},
                           {2, 0.57, 1.04, 4.08, 3.64}};
    bool ok = true;
    std::string detail;
    for (int c = 0; c < 4; ++c) {
        CoeffStudySpec spec;
        spec.family = NoiseFamily::scaled_chisq(cases[c].m);
        spec.j = 2;
        spec.replications = 200000;
        const bool high = (c % 2 == 0);
        spec.mean_left = high ? 10.0 : 0.2;
        spec.mean_right = high ? 10.5 : 0.7;
        const CoeffStudyResult r = coeff_study(spec, 505 + static_cast<std::uint64_t>(c));
        const bool var_ok = within(r.stats_f.variance, cases[c].var_f, 0.15) &&
                            within(r.stats_g.variance, cases[c].var_g, 0.15);
        const bool kurt_ok = within(r.stats_f.kurtosis, cases[c].kurt_f, 0.35) &&
                             within(r.stats_g.kurtosis, cases[c].kurt_g, 0.35);
        ok = ok && var_ok && kurt_ok;
        detail += fmt("[m=%d %s var f/g %.2f/%.2f kurt f/g %.2f/%.2f%s]", cases[c].m,
                      high ? "hi" : "lo", r.stats_f.variance, r.stats_g.variance,
                      r.stats_f.kurtosis, r.stats_g.kurtosis,
                      (var_ok && kurt_ok) ? "" : " <-");
    }
    const double secs = timer.seconds();
    ok = ok && secs < 10.0;
    report(5, "chi-squared coefficient moments", ok, detail + fmt(" %.2fs", secs));
}

// --------------------------------------------------------------------------
// 6. the benchmark MSE table

void criterion_6() {
    Timer timer;
    MseStudyConfig cfg;
    cfg.replications = 1000;
    cfg.n = 2048;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const MseStudyReport r = mse_study(cfg, 606);

    const double lrh_ref[4] = {0.605, 7.958, 0.341, 0.905};
    const double fisz_ref[4] = {0.615, 8.647, 0.357, 1.053};
    bool cells = true, ordering = true;
    std::string detail;
    for (std::size_t mi = 0; mi < 4; ++mi) {
        const MseCell& lrh = r.cells[2 * mi];
        const MseCell& fisz = r.cells[2 * mi + 1];
        cells = cells && std::fabs(lrh.mean_mse - lrh_ref[mi]) <= 0.07 * lrh_ref[mi] &&
                std::fabs(fisz.mean_mse - fisz_ref[mi]) <= 0.07 * fisz_ref[mi];
        ordering = ordering && lrh.mean_mse < fisz.mean_mse;
        detail += fmt("[%s lrh %.3f fisz %.3f]", model_name(lrh.model), lrh.mean_mse, fisz.mean_mse);
    }
    const double secs = timer.seconds();
    const bool ok = cells && ordering && secs < 600.0;
    report(6, "benchmark mse table", ok, detail + fmt(" ordering %d, %.0fs", ordering, secs));
}

// --------------------------------------------------------------------------
// 7. stabilization: residual variance and whiteness

void criterion_7() {
    Timer timer;
    const StabStudyResult pois = stabilization_study(Model::BlocksPoisson, 707);
    const StabStudyResult expo = stabilization_study(Model::BlocksExponential, 708);

    const double band = 1.96 / std::sqrt(2048.0);
    const auto inside_band = [&](const std::vector<double>& r) {
        int inside = 0;
        for (std::size_t k = 1; k <= 50; ++k)
            if (std::fabs(r[k]) <= band) ++inside;
        return inside;
    };
    const int in_pois = inside_band(pois.acf_residual);
    const int in_expo = inside_band(expo.acf_residual);

    const double secs = timer.seconds();
    const bool ok = within(pois.variance, 1.07, 0.15) && within(expo.variance, 1.14, 0.15) &&
                    in_pois >= 45 && in_expo >= 45 && secs < 30.0;
    report(7, "variance stabilization", ok,
           fmt("variance poisson %.3f, exponential %.3f; acf in Bartlett band %d/50 and %d/50, %.2fs",
               pois.variance, expo.variance, in_pois, in_expo, secs));
}

// --------------------------------------------------------------------------
// 8. Wilks normalization of pooled null coefficients

void criterion_8() {
    Timer timer;
    const std::size_t n = 1024;
    std::vector<double> pooled;
    pooled.reserve(200 * 127);
    for (int rep = 0; rep < 200; ++rep) {
        Rng rng(808, static_cast<std::uint64_t>(rep));
        Signal x(n);
        for (double& v : x) v = static_cast<double>(rng.next_poisson(10.0));
        const LRHDecomposition d = lrh_forward(x, NoiseFamily::poisson());
        for (int j = 4; j <= d.levels(); ++j)
            for (double g : d.coeffs(j)) pooled.push_back(g);
    }
    const double ks = ks_distance_normal(pooled);
    const double secs = timer.seconds();
    const bool ok = ks < 0.03;
    report(8, "wilks normalization", ok,
           fmt("ks distance %.4f over %zu pooled coefficients, %.2fs", ks, pooled.size(), secs));
}

// --------------------------------------------------------------------------
// 9. qualitative consistency: mse shrinks as n grows

void criterion_9() {
    Timer timer;
    const auto mean_mse_at = [&](std::size_t n) {
        Signal lambda(n, 3.0);
        for (std::size_t i = n / 4; i < 5 * n / 8; ++i) lambda[i] = 12.0;
        for (std::size_t i = 5 * n / 8; i < n; ++i) lambda[i] = 6.0;

        DenoiseConfig cfg;
        cfg.threshold = universal_threshold(n);
        cfg.variant = Variant::Decimated;
        cfg.family = NoiseFamily::poisson();
        // fine-scale cutoff from the theory: floor(log2 n^beta), beta = 0.3
        cfg.j0 = static_cast<int>(std::floor(0.3 * std::log2(static_cast<double>(n))));

        double total = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            const Signal x = sample_poisson(lambda, 909, static_cast<std::uint64_t>(rep));
            total += mse(denoise_decimated(x, cfg), lambda);
        }
        return total / 200.0;
    };
    const double coarse = mean_mse_at(512);
    const double fine = mean_mse_at(4096);
    const double secs = timer.seconds();
    const bool ok = fine < coarse;
    report(9, "consistency direction", ok,
           fmt("mean mse %.4f at n=512 vs %.4f at n=4096, %.2fs", coarse, fine, secs));
}

// --------------------------------------------------------------------------
// 10. gaussian degenerate case equals classical hard thresholding

void criterion_10() {
    Timer timer;
    Rng rng(1010);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 128;
        Signal theta(n, 0.0);
        const double jump = 10.0 * rng.next_uniform();
        for (std::size_t i = n / 4; i < n / 2; ++i) theta[i] = jump;
        Signal x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = theta[i] + rng.next_normal();

        DenoiseConfig cfg;
        cfg.threshold = universal_threshold(n);
        cfg.family = NoiseFamily::gaussian(1.0);
        cfg.variant = Variant::Decimated;
        const Signal a = denoise_decimated(x, cfg);

        HaarDecomposition h = forward_haar(x);
        for (auto& level : h.details)
            for (double& d : level)
                if (!(std::fabs(d) > cfg.threshold)) d = 0.0;
        worst = std::max(worst, max_abs_diff(a, inverse_haar(h)));
    }
    const double secs = timer.seconds();
    const bool ok = worst <= 1e-12;
    report(10, "gaussian reduction", ok, fmt("max deviation %.2e over 50 cases, %.2fs", worst, secs));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}

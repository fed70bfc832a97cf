#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lrhaar/coeffs.hpp"
#include "lrhaar/haar.hpp"
#include "lrhaar/rng.hpp"

using namespace lrhaar;

namespace {

// Independent long-double evaluation of the closed forms, straight from the
// likelihood algebra, used as the oracle for the production implementation.
long double xlogx(long double x) { return x > 0.0L ? x * std::log(x) : 0.0L; }

double g_poisson_oracle(double u, double v, int j) {
    const long double w = 0.5L * (static_cast<long double>(u) + v);
    long double rad = xlogx(u) + xlogx(v) - 2.0L * xlogx(w);
    if (rad < 0.0L) rad = 0.0L;
    const long double sign = u > v ? 1.0L : (u < v ? -1.0L : 0.0L);
    return static_cast<double>(sign * std::pow(2.0L, 0.5L * j) * std::sqrt(rad));
}

double g_chisq_oracle(double u, double v, int j, int m) {
    const long double w = 0.5L * (static_cast<long double>(u) + v);
    long double rad = m * (std::log(w) - 0.5L * std::log(static_cast<long double>(u)) -
                           0.5L * std::log(static_cast<long double>(v)));
    if (rad < 0.0L) rad = 0.0L;
    const long double sign = u > v ? 1.0L : (u < v ? -1.0L : 0.0L);
    return static_cast<double>(sign * std::pow(2.0L, 0.5L * j) * std::sqrt(rad));
}

} // namespace

TEST_CASE("g_poisson at equal means is zero") {
    CHECK(g_poisson({5, 5, 1}) == 0.0);
    CHECK(g_poisson({5, 5, 7}) == 0.0);
    CHECK(g_poisson({0, 0, 3}) == 0.0);
}

TEST_CASE("g_poisson frozen value and oracle agreement") {
    const double g = g_poisson({2, 1, 1});
    CHECK(g == doctest::Approx(0.5829220133).epsilon(1e-7)); // sqrt(2)*sqrt(2 ln2 - 3 ln 1.5)
    CHECK(g == doctest::Approx(g_poisson_oracle(2, 1, 1)).epsilon(1e-13));
    CHECK(g_poisson({1, 2, 1}) == doctest::Approx(-g).epsilon(1e-13));
}

TEST_CASE("g_poisson rejects negative means") {
    CHECK_THROWS_AS((void)g_poisson({-1, 2, 1}), domain_error);
    CHECK_THROWS_AS((void)g_poisson({2, -1e-12, 1}), domain_error);
}

TEST_CASE("g_chisq stays finite and accurate for extreme mean ratios") {
    const double g = g_chisq({1e-300, 1.0, 1}, 1);
    CHECK(std::isfinite(g));
    CHECK(g == doctest::Approx(g_chisq_oracle(1e-300, 1.0, 1, 1)).epsilon(1e-13));
    CHECK(-g == doctest::Approx(g_chisq({1.0, 1e-300, 1}, 1)).epsilon(1e-13));
    CHECK(std::isfinite(g_chisq({5e-324, 2.0, 3}, 2)));
}

TEST_CASE("g_chisq frozen value, oracle agreement and m-scaling") {
    const double g1 = g_chisq({2, 1, 1}, 1);
    CHECK(g1 == doctest::Approx(0.3431953316).epsilon(1e-7)); // sqrt(2)*sqrt(ln1.5 - ln2/2)
    CHECK(g1 == doctest::Approx(g_chisq_oracle(2, 1, 1, 1)).epsilon(1e-13));
    CHECK(g_chisq({3, 3, 4}, 5) == 0.0);
    CHECK(g_chisq({2, 1, 1}, 4) == doctest::Approx(2.0 * g1).epsilon(1e-13));
    CHECK_THROWS_AS((void)g_chisq({0, 1, 1}, 1), domain_error);
    CHECK_THROWS_AS((void)g_chisq({1, 0, 1}, 2), domain_error);
}

TEST_CASE("f_poisson examples") {
    CHECK(f_poisson({5, 5, 2}) == 0.0);
    CHECK(f_poisson({0, 0, 2}) == 0.0);
    const double f = f_poisson({2, 1, 1});
    CHECK(f == doctest::Approx(0.57735027).epsilon(1e-7)); // 2^{-1/2} / sqrt(1.5)
    CHECK(std::fabs(g_poisson({2, 1, 1})) >= std::fabs(f));
    CHECK_THROWS_AS((void)f_poisson({-1, 1, 1}), domain_error);
}

TEST_CASE("f_chisq examples and compact support") {
    CHECK(f_chisq({3, 3, 1}, 1) == 0.0);
    CHECK(f_chisq({2, 1, 1}, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)f_chisq({2, 0, 1}, 1), domain_error);
    Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
        const double u = 1e-6 + 100.0 * rng.next_uniform();
        const double v = 1e-6 + 100.0 * rng.next_uniform();
        const int j = 1 + static_cast<int>(rng.next_u64() % 8);
        const int m = 1 + static_cast<int>(rng.next_u64() % 6);
        CHECK(std::fabs(f_chisq({u, v, j}, m)) <=
              std::exp2(0.5 * (j - 3.0)) * std::sqrt(static_cast<double>(m)) * 2.0 + 1e-12);
    }
}

TEST_CASE("g_coefficient dispatch") {
    CHECK(g_coefficient({2, 1, 1}, NoiseFamily::gaussian(1.0)) ==
          doctest::Approx(0.70710678).epsilon(1e-7));
    CHECK(g_coefficient({2, 1, 1}, NoiseFamily::poisson()) == g_poisson({2, 1, 1}));
    CHECK(g_coefficient({2, 1, 1}, NoiseFamily::scaled_chisq(2)) == g_chisq({2, 1, 1}, 2));
    CHECK(f_coefficient({2, 1, 1}, NoiseFamily::poisson()) == f_poisson({2, 1, 1}));
    CHECK(f_coefficient({2, 1, 1}, NoiseFamily::scaled_chisq(3)) == f_chisq({2, 1, 1}, 3));
}

TEST_CASE("lrh_forward on a constant signal") {
    const LRHDecomposition d = lrh_forward(Signal(8, 3.0), NoiseFamily::poisson());
    for (int j = 1; j <= d.levels(); ++j)
        for (double g : d.coeffs(j)) CHECK(g == 0.0);
    CHECK(d.smooth_top == doctest::Approx(std::exp2(1.5) * 3.0).epsilon(1e-13));
}

TEST_CASE("lrh_forward composes local means with the pair statistic") {
    const Signal x{2, 0, 6, 2};
    const LRHDecomposition d = lrh_forward(x, NoiseFamily::poisson());
    CHECK(d.coeffs(1)[0] == doctest::Approx(g_poisson({2, 0, 1})).epsilon(1e-13));
    CHECK(d.coeffs(1)[1] == doctest::Approx(g_poisson({6, 2, 1})).epsilon(1e-13));
    CHECK(d.coeffs(2)[0] == doctest::Approx(g_poisson({1, 4, 2})).epsilon(1e-13));
    CHECK(d.smooth_top == doctest::Approx(forward_haar(x).smooth_top).epsilon(1e-13));
}

TEST_CASE("lrh_forward names the first zero under the chi-squared family") {
    const Signal x{1, 2, 0, 4};
    try {
        (void)lrh_forward(x, NoiseFamily::scaled_chisq(1));
        FAIL("expected a domain error");
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("x[2]") != std::string::npos);
    }
    CHECK_THROWS_AS((void)lrh_forward({1, -1, 2, 4}, NoiseFamily::poisson()), domain_error);
}

TEST_CASE("coefficient algebra over random pairs") {
    Rng rng(42);
    for (int i = 0; i < 100000; ++i) {
        const double u = 1e-9 + 50.0 * rng.next_uniform();
        const double v = 1e-9 + 50.0 * rng.next_uniform();
        const int j = 1 + static_cast<int>(rng.next_u64() % 10);
        const int m = 1 + static_cast<int>(rng.next_u64() % 8);

        const HalfPairStats p{u, v, j};
        const HalfPairStats q{v, u, j};
        const double gp = g_poisson(p);
        const double fp = f_poisson(p);
        const double gc = g_chisq(p, m);
        const double fc = f_chisq(p, m);

        // antisymmetry
        CHECK(g_poisson(q) == doctest::Approx(-gp).epsilon(1e-12));
        CHECK(f_poisson(q) == doctest::Approx(-fp).epsilon(1e-12));
        CHECK(g_chisq(q, m) == doctest::Approx(-gc).epsilon(1e-12));
        CHECK(f_chisq(q, m) == doctest::Approx(-fc).epsilon(1e-12));

        // sign agreement and domination
        CHECK((gp >= 0) == (fp >= 0));
        CHECK((gc >= 0) == (fc >= 0));
        CHECK(std::fabs(gp) >= std::fabs(fp) - 1e-10);
        CHECK(std::fabs(gc) >= std::fabs(fc) - 1e-10);

        // harmonic / arithmetic mean sandwich (Poisson)
        const double harmonic = 2.0 / (1.0 / u + 1.0 / v);
        const double arithmetic = 0.5 * (u + v);
        const double upper = std::exp2(0.5 * j - 1.0) * std::fabs(u - v) / std::sqrt(harmonic);
        const double lower = std::exp2(0.5 * j - 1.0) * std::fabs(u - v) / std::sqrt(arithmetic);
        CHECK(std::fabs(gp) <= upper + 1e-9 * (1.0 + upper));
        CHECK(std::fabs(gp) >= lower - 1e-9 * (1.0 + lower));

        // chi-squared scaling in the degrees of freedom
        const double g1 = g_chisq(p, 1);
        CHECK(gc == doctest::Approx(std::sqrt(static_cast<double>(m)) * g1).epsilon(1e-12));

        // raw radicands (double precision, textbook form) stay above -1e-12
        const double w = 0.5 * (u + v);
        const double rad_pois = u * std::log(u) + v * std::log(v) - 2.0 * w * std::log(w);
        const double rad_chi = m * (std::log(w) - 0.5 * std::log(u) - 0.5 * std::log(v));
        CHECK(rad_pois >= -1e-12);
        CHECK(rad_chi >= -1e-12);

        // oracle agreement, away from the u ~= v regime where the textbook
        // form cancels even in long double
        if (std::fabs(u - v) > 1e-6 * (u + v)) {
            CHECK(gp == doctest::Approx(g_poisson_oracle(u, v, j)).epsilon(2e-11));
            CHECK(gc == doctest::Approx(g_chisq_oracle(u, v, j, m)).epsilon(2e-11));
        }
    }
}

TEST_CASE("pooled null coefficients are close to unit variance") {
    // constant intensity, scales j >= 4
    const std::size_t n = 1024;
    const Signal lambda(n, 10.0);
    double sum = 0.0, sum_sq = 0.0;
    std::size_t count = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        Rng rng(1234, static_cast<std::uint64_t>(rep));
        Signal x(n);
        for (double& v : x) v = static_cast<double>(rng.next_poisson(10.0));
        const LRHDecomposition d = lrh_forward(x, NoiseFamily::poisson());
        for (int j = 4; j <= d.levels(); ++j) {
            for (double g : d.coeffs(j)) {
                sum += g;
                sum_sq += g * g;
                ++count;
            }
        }
    }
    const double mean = sum / static_cast<double>(count);
    const double var = sum_sq / static_cast<double>(count) - mean * mean;
    CHECK(var > 0.85);
    CHECK(var < 1.15);
}

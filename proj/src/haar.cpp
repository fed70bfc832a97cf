#include "lrhaar/haar.hpp"

#include <cmath>
#include <string>

namespace lrhaar {

namespace {
const double kInvSqrt2 = 0.70710678118654752440084436210485;

void require_finite_dyadic(const Signal& x) {
    dyadic_levels(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]))
            throw domain_error("non-finite value at index " + std::to_string(i));
    }
}
} // namespace

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

int dyadic_levels(std::size_t n) {
    if (n < 2 || !is_power_of_two(n))
        throw length_error("signal length " + std::to_string(n) + " is not 2^J with J >= 1");
    int j = 0;
    while (n > 1) {
        n >>= 1;
        ++j;
    }
    return j;
}

HaarDecomposition forward_haar(const Signal& x) {
    require_finite_dyadic(x);
    const int levels = dyadic_levels(x.size());

    HaarDecomposition out;
    out.n = x.size();
    out.details.resize(static_cast<std::size_t>(levels));

    std::vector<double> smooth = x;
    for (int j = 1; j <= levels; ++j) {
        const std::size_t half = smooth.size() / 2;
        std::vector<double> next(half);
        std::vector<double>& det = out.detail(j);
        det.resize(half);
        for (std::size_t k = 0; k < half; ++k) {
            next[k] = kInvSqrt2 * (smooth[2 * k] + smooth[2 * k + 1]);
            det[k] = kInvSqrt2 * (smooth[2 * k] - smooth[2 * k + 1]);
        }
        smooth.swap(next);
    }
    out.smooth_top = smooth[0];
    return out;
}

Signal inverse_haar(const HaarDecomposition& h) {
    const int levels = h.levels();
    if (levels < 1 || h.n != (std::size_t{1} << levels))
        throw shape_error("decomposition level count does not match n");
    for (int j = 1; j <= levels; ++j) {
        if (h.detail(j).size() != (h.n >> j))
            throw shape_error("detail length at scale " + std::to_string(j) + " is not n/2^j");
    }

    std::vector<double> smooth{h.smooth_top};
    for (int j = levels; j >= 1; --j) {
        const std::vector<double>& det = h.detail(j);
        std::vector<double> next(2 * smooth.size());
        for (std::size_t k = 0; k < smooth.size(); ++k) {
            next[2 * k] = kInvSqrt2 * (smooth[k] + det[k]);
            next[2 * k + 1] = kInvSqrt2 * (smooth[k] - det[k]);
        }
        smooth.swap(next);
    }
    return smooth;
}

LocalMeansTable::LocalMeansTable(const Signal& x) {
    levels_ = dyadic_levels(x.size());
    means_.resize(static_cast<std::size_t>(levels_) + 1);
    means_[0] = x;
    for (int j = 1; j <= levels_; ++j) {
        const std::vector<double>& child = means_[static_cast<std::size_t>(j) - 1];
        std::vector<double>& parent = means_[static_cast<std::size_t>(j)];
        parent.resize(child.size() / 2);
        for (std::size_t k = 0; k < parent.size(); ++k)
            parent[k] = 0.5 * (child[2 * k] + child[2 * k + 1]);
    }
}

LocalMeansTable local_means(const Signal& x) {
    require_finite_dyadic(x);
    return LocalMeansTable(x);
}

StationaryDecomposition forward_stationary(const Signal& x) {
    require_finite_dyadic(x);
    const int levels = dyadic_levels(x.size());
    const std::size_t n = x.size();

    // Prefix sums of the doubled (wrapped) array: any circular window sum of
    // length <= n is one subtraction.
    std::vector<double> prefix(2 * n + 1, 0.0);
    for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + x[i % n];

    StationaryDecomposition out;
    out.n = n;
    out.smooths.resize(static_cast<std::size_t>(levels));
    out.details.resize(static_cast<std::size_t>(levels));

    for (int j = 1; j <= levels; ++j) {
        const std::size_t len = std::size_t{1} << j;
        const std::size_t half = len / 2;
        const double norm = std::exp2(0.5 * j); // 2^(j/2)
        std::vector<double>& sm = out.smooths[static_cast<std::size_t>(j) - 1];
        std::vector<double>& det = out.details[static_cast<std::size_t>(j) - 1];
        sm.resize(n);
        det.resize(n);
        for (std::size_t p = 0; p < n; ++p) {
            const double left = (prefix[p + half] - prefix[p]) / static_cast<double>(half);
            const double right = (prefix[p + len] - prefix[p + half]) / static_cast<double>(half);
            sm[p] = norm * 0.5 * (left + right);
            det[p] = norm * 0.5 * (left - right);
        }
    }
    return out;
}

Signal inverse_stationary_average(const StationaryDecomposition& sd) {
    const int levels = sd.levels();
    if (levels < 1 || sd.n != (std::size_t{1} << levels) ||
        sd.smooths.size() != sd.details.size())
        throw shape_error("stationary decomposition level count does not match n");
    for (int j = 1; j <= levels; ++j) {
        if (sd.smooth(j).size() != sd.n || sd.detail(j).size() != sd.n)
            throw shape_error("stationary arrays at scale " + std::to_string(j) + " must have length n");
    }

    const std::size_t n = sd.n;
    // Position p of the scale j-1 smooth is the left child of window p and the
    // right child of window p - 2^(j-1); the average basis weights both 1/2.
    std::vector<double> smooth = sd.smooth(levels);
    std::vector<double> next(n);
    for (int j = levels; j >= 1; --j) {
        const std::vector<double>& det = sd.detail(j);
        const std::size_t half = std::size_t{1} << (j - 1);
        for (std::size_t p = 0; p < n; ++p) {
            const std::size_t q = (p + n - half) % n;
            next[p] = 0.5 * kInvSqrt2 * ((smooth[p] + det[p]) + (smooth[q] - det[q]));
        }
        smooth.swap(next);
    }
    return smooth;
}

} // namespace lrhaar

#ifndef LRHAAR_ERRORS_HPP
#define LRHAAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrhaar {

// Input outside the model/family domain (negative Poisson data, zero
// chi-squared observations, bad lengths in elementwise ops, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Signal length is not a power of two.
class length_error : public domain_error {
public:
    explicit length_error(const std::string& msg) : domain_error(msg) {}
};

// Malformed decomposition (inconsistent level lengths etc.).
class shape_error : public domain_error {
public:
    explicit shape_error(const std::string& msg) : domain_error(msg) {}
};

// A (smooth, g) pair that no data vector can produce, e.g. after thresholding
// in the transformed domain. scale/location identify the offending coefficient
// (1-based, scale 0 if the failure is not tied to a coefficient).
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(const std::string& msg, int scale_ = 0, std::size_t location_ = 0)
        : std::runtime_error(msg), scale(scale_), location(location_) {}
    int scale;
    std::size_t location;
};

} // namespace lrhaar

#endif

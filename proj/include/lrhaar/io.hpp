#ifndef LRHAAR_IO_HPP
#define LRHAAR_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lrhaar/coeffs.hpp"
#include "lrhaar/haar.hpp"

namespace lrhaar {

// Single-column CSV, one value per line, '.' decimal separator, 17
// significant digits on output.
Signal read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const Signal& x);
void write_signal_csv(std::ostream& out, const Signal& x);

// JSON array of numbers.
Signal read_signal_json(const std::string& path);
void write_signal_json(const std::string& path, const Signal& x);
void write_signal_json(std::ostream& out, const Signal& x);

std::string format_double(double v); // %.17g, locale-independent

nlohmann::json family_to_json(const NoiseFamily& fam);
NoiseFamily family_from_json(const nlohmann::json& j);

// Decompositions carry explicit scale labels:
// {"type": ..., "n": ..., "scales": [{"j":1,"detail":[...]}, ...], "smooth_top": ...}
// The likelihood-ratio variant uses the same layout plus a "family" field.
nlohmann::json decomposition_to_json(const HaarDecomposition& h);
HaarDecomposition decomposition_from_json(const nlohmann::json& j);
nlohmann::json decomposition_to_json(const LRHDecomposition& d);
LRHDecomposition lrh_from_json(const nlohmann::json& j);

// "poisson", "chisq:<m>" or "gaussian:<sigma>".
NoiseFamily parse_family(const std::string& text);

} // namespace lrhaar

#endif

#include "lrhaar/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lrhaar {

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open '" + path + "' for writing");
    return out;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Signal read_signal_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    Signal x;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        const std::string cell = strip(line);
        if (cell.empty()) continue;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc{} || ptr != cell.data() + cell.size())
            throw domain_error("'" + path + "': row " + std::to_string(row) +
                               " is not a number: '" + cell + "'");
        x.push_back(v);
    }
    if (x.empty()) throw domain_error("'" + path + "': no values");
    return x;
}

void write_signal_csv(std::ostream& out, const Signal& x) {
    for (double v : x) out << format_double(v) << '\n';
}

void write_signal_csv(const std::string& path, const Signal& x) {
    std::ofstream out = open_out(path);
    write_signal_csv(out, x);
}

Signal read_signal_json(const std::string& path) {
    std::ifstream in = open_in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw domain_error("'" + path + "': " + e.what());
    }
    if (!j.is_array()) throw domain_error("'" + path + "': expected a JSON array of numbers");
    return j.get<Signal>();
}

void write_signal_json(std::ostream& out, const Signal& x) {
    out << nlohmann::json(x).dump() << '\n';
}

void write_signal_json(const std::string& path, const Signal& x) {
    std::ofstream out = open_out(path);
    write_signal_json(out, x);
}

nlohmann::json family_to_json(const NoiseFamily& fam) {
    switch (fam.kind) {
    case NoiseFamily::Kind::Poisson: return {{"kind", "poisson"}};
    case NoiseFamily::Kind::ScaledChiSquared: return {{"kind", "chisq"}, {"m", fam.m}};
    case NoiseFamily::Kind::Gaussian: return {{"kind", "gaussian"}, {"sigma", fam.sigma}};
    }
    return {};
}

NoiseFamily family_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "poisson") return NoiseFamily::poisson();
    if (kind == "chisq") return NoiseFamily::scaled_chisq(j.at("m").get<int>());
    if (kind == "gaussian") return NoiseFamily::gaussian(j.at("sigma").get<double>());
    throw domain_error("unknown noise family kind '" + kind + "'");
}

namespace {

nlohmann::json scales_to_json(const std::vector<std::vector<double>>& per_scale) {
    nlohmann::json scales = nlohmann::json::array();
    for (std::size_t i = 0; i < per_scale.size(); ++i)
        scales.push_back({{"j", i + 1}, {"detail", per_scale[i]}});
    return scales;
}

std::vector<std::vector<double>> scales_from_json(const nlohmann::json& j, std::size_t n) {
    const int levels = dyadic_levels(n);
    std::vector<std::vector<double>> out(static_cast<std::size_t>(levels));
    if (!j.is_array() || j.size() != out.size())
        throw shape_error("decomposition must carry one entry per scale 1..J");
    for (const auto& entry : j) {
        const int scale = entry.at("j").get<int>();
        if (scale < 1 || scale > levels) throw shape_error("scale label out of range");
        out[static_cast<std::size_t>(scale) - 1] = entry.at("detail").get<std::vector<double>>();
    }
    return out;
}

} // namespace

nlohmann::json decomposition_to_json(const HaarDecomposition& h) {
    return {{"type", "haar"},
            {"n", h.n},
            {"scales", scales_to_json(h.details)},
            {"smooth_top", h.smooth_top}};
}

HaarDecomposition decomposition_from_json(const nlohmann::json& j) {
    HaarDecomposition h;
    h.n = j.at("n").get<std::size_t>();
    h.smooth_top = j.at("smooth_top").get<double>();
    h.details = scales_from_json(j.at("scales"), h.n);
    return h;
}

nlohmann::json decomposition_to_json(const LRHDecomposition& d) {
    return {{"type", "lrh"},
            {"n", d.n},
            {"scales", scales_to_json(d.g)},
            {"smooth_top", d.smooth_top},
            {"family", family_to_json(d.family)}};
}

LRHDecomposition lrh_from_json(const nlohmann::json& j) {
    LRHDecomposition d;
    d.n = j.at("n").get<std::size_t>();
    d.smooth_top = j.at("smooth_top").get<double>();
    d.g = scales_from_json(j.at("scales"), d.n);
    d.family = family_from_json(j.at("family"));
    return d;
}

NoiseFamily parse_family(const std::string& text) {
    if (text == "poisson") return NoiseFamily::poisson();
    if (text.rfind("chisq:", 0) == 0) {
        int m = 0;
        const std::string num = text.substr(6);
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), m);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw domain_error("bad degrees of freedom in '" + text + "'");
        return NoiseFamily::scaled_chisq(m);
    }
    if (text.rfind("gaussian:", 0) == 0) {
        double s = 0.0;
        const std::string num = text.substr(9);
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), s);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw domain_error("bad sigma in '" + text + "'");
        return NoiseFamily::gaussian(s);
    }
    throw domain_error("unknown family '" + text + "' (want poisson, chisq:<m> or gaussian:<sigma>)");
}

} // namespace lrhaar

// Python bindings for the core operations: transforms, coefficients,
// stabilization, smoothing, test signals, samplers and summary statistics.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrhaar/denoise.hpp"
#include "lrhaar/harness.hpp"
#include "lrhaar/io.hpp"
#include "lrhaar/signals.hpp"
#include "lrhaar/stabilize.hpp"
#include "lrhaar/stats.hpp"

namespace py = pybind11;
using namespace lrhaar;

namespace {

Statistic parse_statistic(const std::string& s) {
    if (s == "lrh") return Statistic::LRH;
    if (s == "fisz") return Statistic::Fisz;
    throw domain_error("unknown statistic '" + s + "' (want lrh or fisz)");
}

Variant parse_variant(const std::string& s) {
    if (s == "dec") return Variant::Decimated;
    if (s == "ti") return Variant::TranslationInvariant;
    throw domain_error("unknown variant '" + s + "' (want dec or ti)");
}

TestSignalSpec::Shape parse_shape(const std::string& s) {
    if (s == "blocks") return TestSignalSpec::Shape::Blocks;
    if (s == "bumps") return TestSignalSpec::Shape::Bumps;
    throw domain_error("unknown shape '" + s + "' (want blocks or bumps)");
}

DenoiseConfig build_config(const NoiseFamily& fam, std::optional<double> threshold,
                           const std::string& statistic, const std::string& variant, int j0,
                           std::size_t n) {
    DenoiseConfig cfg;
    cfg.family = fam;
    cfg.threshold = threshold ? *threshold : universal_threshold(n);
    cfg.statistic = parse_statistic(statistic);
    cfg.variant = parse_variant(variant);
    cfg.j0 = j0;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_lrhaar, m) {
    m.doc() = "likelihood ratio Haar transforms, variance stabilization and smoothing";
    m.attr("__version__") = "0.1.0";

    py::register_exception<infeasible_error>(m, "InfeasibleCoefficientError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<NoiseFamily>(m, "NoiseFamily")
        .def_static("poisson", &NoiseFamily::poisson)
        .def_static("scaled_chisq", &NoiseFamily::scaled_chisq, py::arg("m"))
        .def_static("gaussian", &NoiseFamily::gaussian, py::arg("sigma"))
        .def_static("parse", &parse_family, py::arg("text"))
        .def("__repr__", [](const NoiseFamily& f) { return "NoiseFamily(" + f.name() + ")"; });

    py::class_<HaarDecomposition>(m, "HaarDecomposition")
        .def_readonly("details", &HaarDecomposition::details)
        .def_readonly("smooth_top", &HaarDecomposition::smooth_top)
        .def_readonly("n", &HaarDecomposition::n)
        .def("detail", [](const HaarDecomposition& h, int j) { return h.detail(j); }, py::arg("j"));

    py::class_<StationaryDecomposition>(m, "StationaryDecomposition")
        .def_readonly("smooths", &StationaryDecomposition::smooths)
        .def_readonly("details", &StationaryDecomposition::details)
        .def_readonly("n", &StationaryDecomposition::n);

    py::class_<LRHDecomposition>(m, "LRHDecomposition")
        .def_readonly("g", &LRHDecomposition::g)
        .def_readonly("smooth_top", &LRHDecomposition::smooth_top)
        .def_readonly("n", &LRHDecomposition::n)
        .def_readonly("family", &LRHDecomposition::family);

    py::class_<MomentStats>(m, "MomentStats")
        .def_readonly("mean", &MomentStats::mean)
        .def_readonly("variance", &MomentStats::variance)
        .def_readonly("skewness", &MomentStats::skewness)
        .def_readonly("kurtosis", &MomentStats::kurtosis)
        .def("__repr__", [](const MomentStats& s) {
            return "MomentStats(variance=" + std::to_string(s.variance) +
                   ", skewness=" + std::to_string(s.skewness) +
                   ", kurtosis=" + std::to_string(s.kurtosis) + ")";
        });

    // transforms
    m.def("forward_haar", &forward_haar, py::arg("x"));
    m.def("inverse_haar", &inverse_haar, py::arg("decomposition"));
    m.def("forward_stationary", &forward_stationary, py::arg("x"));
    m.def("inverse_stationary_average", &inverse_stationary_average, py::arg("decomposition"));
    m.def("lrh_forward", &lrh_forward, py::arg("x"), py::arg("family"));
    m.def("lrh_inverse", &lrh_inverse, py::arg("decomposition"));

    // coefficient statistics: u/v half means at scale j
    m.def("g_poisson", [](double u, double v, int j) { return g_poisson({u, v, j}); },
          py::arg("u"), py::arg("v"), py::arg("j") = 1);
    m.def("g_chisq", [](double u, double v, int j, int mm) { return g_chisq({u, v, j}, mm); },
          py::arg("u"), py::arg("v"), py::arg("j") = 1, py::arg("m") = 1);
    m.def("f_poisson", [](double u, double v, int j) { return f_poisson({u, v, j}); },
          py::arg("u"), py::arg("v"), py::arg("j") = 1);
    m.def("f_chisq", [](double u, double v, int j, int mm) { return f_chisq({u, v, j}, mm); },
          py::arg("u"), py::arg("v"), py::arg("j") = 1, py::arg("m") = 1);
    m.def("g_coefficient",
          [](double u, double v, int j, const NoiseFamily& fam) {
              return g_coefficient({u, v, j}, fam);
          },
          py::arg("u"), py::arg("v"), py::arg("j"), py::arg("family"));
    m.def("f_coefficient",
          [](double u, double v, int j, const NoiseFamily& fam) {
              return f_coefficient({u, v, j}, fam);
          },
          py::arg("u"), py::arg("v"), py::arg("j"), py::arg("family"));

    // stabilization
    m.def("invert_pair", &invert_pair, py::arg("s_parent"), py::arg("g"), py::arg("j"),
          py::arg("family"));
    m.def("stabilize", &stabilize, py::arg("x"), py::arg("family"));
    m.def("unstabilize", &unstabilize, py::arg("y"), py::arg("family"));
    m.def("stabilized_residual", &stabilized_residual, py::arg("x"), py::arg("theta"),
          py::arg("family"));

    // smoothing
    m.def("universal_threshold", &universal_threshold, py::arg("n"));
    m.def("denoise",
          [](const Signal& x, const NoiseFamily& fam, std::optional<double> threshold,
             const std::string& statistic, const std::string& variant, int j0) {
              return denoise(x, build_config(fam, threshold, statistic, variant, j0, x.size()));
          },
          py::arg("x"), py::arg("family"), py::arg("threshold") = std::nullopt,
          py::arg("statistic") = "lrh", py::arg("variant") = "ti", py::arg("j0") = 0,
          "hard-threshold smoothing; threshold defaults to sqrt(2 log n)");
    m.def("mse", &mse, py::arg("estimate"), py::arg("truth"));

    // test signals and samplers
    m.def("make_signal",
          [](const std::string& shape, std::size_t n, double lo, double hi) {
              return make_signal({parse_shape(shape), n, lo, hi});
          },
          py::arg("shape"), py::arg("n"), py::arg("target_min"), py::arg("target_max"));
    m.def("sample_poisson",
          py::overload_cast<const Signal&, std::uint64_t, std::uint64_t>(&sample_poisson),
          py::arg("lam"), py::arg("seed"), py::arg("stream") = 0);
    m.def("sample_scaled_chisq",
          py::overload_cast<const Signal&, int, std::uint64_t, std::uint64_t>(&sample_scaled_chisq),
          py::arg("sigma2"), py::arg("m"), py::arg("seed"), py::arg("stream") = 0);
    m.def("sample_gaussian",
          py::overload_cast<const Signal&, double, std::uint64_t, std::uint64_t>(&sample_gaussian),
          py::arg("theta"), py::arg("sigma"), py::arg("seed"), py::arg("stream") = 0);

    // summary statistics
    m.def("moment_stats", &moment_stats, py::arg("xs"));
    m.def("acf", &acf, py::arg("xs"), py::arg("max_lag"));
    m.def("normal_qq_points", &normal_qq_points, py::arg("xs"));
    m.def("ks_distance_normal", &ks_distance_normal, py::arg("xs"));
}

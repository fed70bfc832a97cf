// lrhaar command line tool: signal generation, sampling, transforms,
// smoothing and the simulation studies, glued over the library.
//
// Exit codes: 0 ok, 2 usage, 3 data/domain error, 4 infeasible coefficient.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrhaar/denoise.hpp"
#include "lrhaar/harness.hpp"
#include "lrhaar/io.hpp"
#include "lrhaar/signals.hpp"
#include "lrhaar/stabilize.hpp"

using namespace lrhaar;

namespace {

enum class Format { Csv, Json };

struct GlobalOpts {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;
    Format format = Format::Csv;
};

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw CLI::ValidationError("--format", "want csv or json");
}

Signal read_signal(const std::string& path) {
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    return json ? read_signal_json(path) : read_signal_csv(path);
}

void emit_signal(const GlobalOpts& g, const Signal& x) {
    if (g.out.empty()) {
        if (g.format == Format::Json)
            write_signal_json(std::cout, x);
        else
            write_signal_csv(std::cout, x);
        return;
    }
    if (g.format == Format::Json)
        write_signal_json(g.out, x);
    else
        write_signal_csv(g.out, x);
}

void emit_json(const GlobalOpts& g, const nlohmann::json& j) {
    if (g.out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(g.out);
    if (!out) throw domain_error("cannot open '" + g.out + "' for writing");
    out << j.dump(2) << '\n';
}

std::string sidecar(const std::string& out, const std::string& suffix) {
    const std::size_t dot = out.rfind('.');
    return (dot == std::string::npos ? out : out.substr(0, dot)) + suffix;
}

void write_csv_rows(const std::string& path, const std::string& header,
                    const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open '" + path + "' for writing");
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

double parse_threshold(const std::string& text, std::size_t n) {
    if (text == "universal") return universal_threshold(n);
    try {
        std::size_t used = 0;
        const double t = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return t;
    } catch (const std::exception&) {
        throw domain_error("bad --threshold '" + text + "' (want universal or a number)");
    }
}

CountWindow parse_window(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw domain_error("bad --window '" + text + "' (want begin:end)");
    try {
        return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw domain_error("bad --window '" + text + "' (want begin:end)");
    }
}

// ---------------------------------------------------------------------------

void cmd_make_signal(const GlobalOpts& g, const std::string& shape, std::size_t n, double lo,
                     double hi) {
    TestSignalSpec spec;
    if (shape == "blocks")
        spec.shape = TestSignalSpec::Shape::Blocks;
    else if (shape == "bumps")
        spec.shape = TestSignalSpec::Shape::Bumps;
    else
        throw domain_error("unknown shape '" + shape + "' (want blocks or bumps)");
    spec.n = n;
    spec.target_min = lo;
    spec.target_max = hi;
    emit_signal(g, make_signal(spec));
}

void cmd_sample(const GlobalOpts& g, const std::string& family, const std::string& mean_path) {
    const NoiseFamily fam = parse_family(family);
    const Signal mean = read_signal(mean_path);
    switch (fam.kind) {
    case NoiseFamily::Kind::Poisson: emit_signal(g, sample_poisson(mean, g.seed)); break;
    case NoiseFamily::Kind::ScaledChiSquared:
        emit_signal(g, sample_scaled_chisq(mean, fam.m, g.seed));
        break;
    case NoiseFamily::Kind::Gaussian: emit_signal(g, sample_gaussian(mean, fam.sigma, g.seed)); break;
    }
}

void cmd_transform(const GlobalOpts& g, const std::string& in, bool inverse,
                   const std::string& family) {
    if (inverse) {
        std::ifstream f(in);
        if (!f) throw domain_error("cannot open '" + in + "' for reading");
        nlohmann::json j;
        try {
            f >> j;
        } catch (const nlohmann::json::exception& e) {
            throw domain_error("'" + in + "': " + e.what());
        }
        const std::string type = j.value("type", "haar");
        emit_signal(g, type == "lrh" ? lrh_inverse(lrh_from_json(j))
                                     : inverse_haar(decomposition_from_json(j)));
        return;
    }
    const Signal x = read_signal(in);
    if (family.empty())
        emit_json(g, decomposition_to_json(forward_haar(x)));
    else
        emit_json(g, decomposition_to_json(lrh_forward(x, parse_family(family))));
}

void cmd_denoise(const GlobalOpts& g, const std::string& in, const std::string& family,
                 const std::string& statistic, const std::string& threshold, int j0,
                 const std::string& variant) {
    const Signal x = read_signal(in);
    DenoiseConfig cfg;
    cfg.family = parse_family(family);
    cfg.threshold = parse_threshold(threshold, x.size());
    cfg.j0 = j0;
    if (statistic == "lrh")
        cfg.statistic = Statistic::LRH;
    else if (statistic == "fisz")
        cfg.statistic = Statistic::Fisz;
    else
        throw domain_error("unknown statistic '" + statistic + "' (want lrh or fisz)");
    if (variant == "dec")
        cfg.variant = Variant::Decimated;
    else if (variant == "ti")
        cfg.variant = Variant::TranslationInvariant;
    else
        throw domain_error("unknown variant '" + variant + "' (want dec or ti)");
    emit_signal(g, denoise(x, cfg));
}

void cmd_coeff_study(const GlobalOpts& g, const std::string& family, int j, double mean_left,
                     double mean_right, int reps) {
    CoeffStudySpec spec;
    spec.family = parse_family(family);
    spec.j = j;
    spec.mean_left = mean_left;
    spec.mean_right = mean_right;
    spec.replications = reps;
    const CoeffStudyResult r = coeff_study(spec, g.seed);
    emit_json(g, report_to_json(r));
    if (g.out.empty()) return;

    // figure-equivalent sidecars: histogram bins and boxplot five-number rows
    const Histogram& h = r.abs_diff_histogram;
    std::vector<std::vector<double>> bins;
    const double width = (h.hi - h.lo) / static_cast<double>(h.counts.size());
    for (std::size_t b = 0; b < h.counts.size(); ++b)
        bins.push_back({h.lo + width * static_cast<double>(b),
                        h.lo + width * static_cast<double>(b + 1),
                        static_cast<double>(h.counts[b])});
    write_csv_rows(sidecar(g.out, "_hist.csv"), "bin_lo,bin_hi,count", bins);
    write_csv_rows(sidecar(g.out, "_box.csv"), "min,q1,median,q3,max",
                   {five_number_summary(r.g_samples), five_number_summary(r.f_samples)});
}

void cmd_mse_study(const GlobalOpts& g, const std::string& models, const std::string& statistics,
                   int reps, std::size_t n) {
    MseStudyConfig cfg;
    cfg.models.clear();
    for (const auto& tok : CLI::detail::split(models, ','))
        cfg.models.push_back(parse_model(tok));
    cfg.statistics.clear();
    for (const auto& tok : CLI::detail::split(statistics, ',')) {
        if (tok == "lrh")
            cfg.statistics.push_back(Statistic::LRH);
        else if (tok == "fisz")
            cfg.statistics.push_back(Statistic::Fisz);
        else
            throw domain_error("unknown statistic '" + tok + "'");
    }
    cfg.replications = reps;
    cfg.n = n;
    cfg.jobs = g.jobs;
    emit_json(g, report_to_json(mse_study(cfg, g.seed)));
}

void cmd_stab_study(const GlobalOpts& g, const std::string& model) {
    const StabStudyResult r = stabilization_study(parse_model(model), g.seed);
    emit_json(g, report_to_json(r));
    if (g.out.empty()) return;

    std::vector<std::vector<double>> qq;
    for (const auto& [theo, emp] : r.qq) qq.push_back({theo, emp});
    write_csv_rows(sidecar(g.out, "_qq.csv"), "theoretical,empirical", qq);
    std::vector<std::vector<double>> acf_rows;
    for (std::size_t k = 0; k < r.acf_residual.size(); ++k)
        acf_rows.push_back({static_cast<double>(k), r.acf_residual[k], r.acf_residual_sq[k]});
    write_csv_rows(sidecar(g.out, "_acf.csv"), "lag,acf_residual,acf_residual_sq", acf_rows);
    std::vector<std::vector<double>> res;
    for (double v : r.residual) res.push_back({v});
    write_csv_rows(sidecar(g.out, "_residual.csv"), "residual", res);
}

void cmd_denoise_counts(const GlobalOpts& g, const std::string& in, int column,
                        const std::string& window, const std::string& threshold, int j0) {
    std::optional<CountWindow> w;
    if (!window.empty()) w = parse_window(window);
    const CountSeries cs = load_counts(in, column, w);

    DenoiseConfig cfg;
    cfg.family = NoiseFamily::poisson();
    cfg.threshold = parse_threshold(threshold, cs.counts.size());
    cfg.j0 = j0;
    const Signal est = denoise_counts(cs, cfg);

    // counts and estimate side by side, ready for plotting
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) throw domain_error("cannot open '" + g.out + "' for writing");
        out = &file;
    }
    *out << "count,estimate\n";
    for (std::size_t i = 0; i < est.size(); ++i)
        *out << cs.counts[i] << ',' << format_double(est[i]) << '\n';
}

void cmd_plot(const GlobalOpts& g, const std::string& in, const std::string& kind) {
    // columns: y, or x,y; header row optional
    std::ifstream f(in);
    if (!f) throw domain_error("cannot open '" + in + "' for reading");
    std::vector<double> xs, ys;
    std::string line;
    std::size_t row = 0;
    while (std::getline(f, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        std::vector<double> cells;
        std::size_t start = 0;
        bool numeric = true;
        while (start <= line.size()) {
            const std::size_t comma = line.find(',', start);
            const std::string cell =
                line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                std::size_t used = 0;
                cells.push_back(std::stod(cell, &used));
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!numeric) {
            if (row == 1) continue; // header
            throw domain_error("'" + in + "': row " + std::to_string(row) + " is not numeric");
        }
        if (cells.size() == 1) {
            xs.push_back(static_cast<double>(ys.size()));
            ys.push_back(cells[0]);
        } else {
            xs.push_back(cells[0]);
            ys.push_back(cells[1]);
        }
    }
    if (ys.empty()) throw domain_error("'" + in + "': nothing to plot");

    const double w = 900, h = 480, ml = 60, mr = 20, mt = 20, mb = 40;
    double xlo = xs[0], xhi = xs[0], ylo = ys[0], yhi = ys[0];
    for (double v : xs) xlo = std::min(xlo, v), xhi = std::max(xhi, v);
    for (double v : ys) ylo = std::min(ylo, v), yhi = std::max(yhi, v);
    if (xhi == xlo) xhi = xlo + 1;
    if (yhi == ylo) yhi = ylo + 1;
    const auto sx = [&](double x) { return ml + (x - xlo) / (xhi - xlo) * (w - ml - mr); };
    const auto sy = [&](double y) { return h - mb - (y - ylo) / (yhi - ylo) * (h - mt - mb); };

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) throw domain_error("cannot open '" + g.out + "' for writing");
        out = &file;
    }
    *out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
         << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    *out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    *out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
         << h - mb << "\" stroke=\"black\"/>\n";
    *out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
         << "\" stroke=\"black\"/>\n";
    *out << "<text x=\"" << ml << "\" y=\"" << h - mb + 16 << "\" font-size=\"11\">"
         << format_double(xlo) << "</text>\n";
    *out << "<text x=\"" << w - mr - 40 << "\" y=\"" << h - mb + 16 << "\" font-size=\"11\">"
         << format_double(xhi) << "</text>\n";
    *out << "<text x=\"4\" y=\"" << h - mb << "\" font-size=\"11\">" << format_double(ylo)
         << "</text>\n";
    *out << "<text x=\"4\" y=\"" << mt + 10 << "\" font-size=\"11\">" << format_double(yhi)
         << "</text>\n";
    if (kind == "scatter") {
        for (std::size_t i = 0; i < ys.size(); ++i)
            *out << "<circle cx=\"" << sx(xs[i]) << "\" cy=\"" << sy(ys[i])
                 << "\" r=\"2\" fill=\"steelblue\"/>\n";
    } else {
        *out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < ys.size(); ++i)
            *out << sx(xs[i]) << ',' << sy(ys[i]) << (i + 1 < ys.size() ? " " : "");
        *out << "\"/>\n";
    }
    *out << "</svg>\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"likelihood ratio Haar transforms, smoothing and experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    std::string format_text = "csv";
    app.add_option("--seed", g.seed, "rng seed (default 0)");
    app.add_option("--jobs", g.jobs, "worker threads for replications")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--format", format_text, "signal output format: csv or json");

    // make-signal
    auto* mk = app.add_subcommand("make-signal", "generate a blocks/bumps test signal");
    std::string mk_shape;
    std::size_t mk_n = 2048;
    double mk_min = 0.0, mk_max = 1.0;
    mk->add_option("--shape", mk_shape, "blocks or bumps")->required();
    mk->add_option("--n", mk_n, "dyadic length")->required();
    mk->add_option("--min", mk_min, "target minimum")->required();
    mk->add_option("--max", mk_max, "target maximum")->required();

    // sample
    auto* sp = app.add_subcommand("sample", "draw noise around a mean signal");
    std::string sp_family, sp_mean;
    sp->add_option("--family", sp_family, "poisson, chisq:<m> or gaussian:<sigma>")->required();
    sp->add_option("--mean", sp_mean, "mean/intensity signal file")->required();

    // transform
    auto* tr = app.add_subcommand("transform", "Haar or likelihood ratio Haar analysis");
    std::string tr_in, tr_family;
    bool tr_inverse = false;
    tr->add_option("--in", tr_in, "input signal (forward) or decomposition json (inverse)")
        ->required();
    tr->add_flag("--inverse", tr_inverse, "synthesize from a decomposition");
    tr->add_option("--family", tr_family, "emit likelihood ratio coefficients for this family");

    // stabilize / unstabilize
    auto* st = app.add_subcommand("stabilize", "apply the normalizing transform G");
    std::string st_family, st_in;
    st->add_option("--family", st_family)->required();
    st->add_option("--in", st_in)->required();
    auto* un = app.add_subcommand("unstabilize", "apply the exact inverse of G");
    std::string un_family, un_in;
    un->add_option("--family", un_family)->required();
    un->add_option("--in", un_in)->required();

    // denoise
    auto* dn = app.add_subcommand("denoise", "hard-threshold smoothing");
    std::string dn_in, dn_family, dn_statistic = "lrh", dn_threshold = "universal",
                dn_variant = "ti";
    int dn_j0 = 0;
    dn->add_option("--in", dn_in)->required();
    dn->add_option("--family", dn_family)->required();
    dn->add_option("--statistic", dn_statistic, "lrh or fisz");
    dn->add_option("--threshold", dn_threshold, "universal or a number");
    dn->add_option("--j0", dn_j0, "finest scales forced to zero");
    dn->add_option("--variant", dn_variant, "dec or ti");

    // coeff-study
    auto* cs = app.add_subcommand("coeff-study", "simulate one coefficient's g and f");
    std::string cs_family;
    int cs_j = 2, cs_reps = 1000;
    double cs_left = 10.0, cs_right = 10.5;
    cs->add_option("--family", cs_family)->required();
    cs->add_option("--j", cs_j, "scale");
    cs->add_option("--mean-left", cs_left)->required();
    cs->add_option("--mean-right", cs_right)->required();
    cs->add_option("--reps", cs_reps);

    // mse-study
    auto* ms = app.add_subcommand("mse-study", "benchmark mse table");
    std::string ms_models = "1a,1b,2a,2b", ms_statistics = "lrh,fisz";
    int ms_reps = 1000;
    std::size_t ms_n = 2048;
    ms->add_option("--models", ms_models, "comma list of 1a,1b,2a,2b");
    ms->add_option("--statistics", ms_statistics, "comma list of lrh,fisz");
    ms->add_option("--reps", ms_reps);
    ms->add_option("--n", ms_n);

    // stab-study
    auto* ss = app.add_subcommand("stab-study", "stabilization quality on a blocks model");
    std::string ss_model = "1a";
    ss->add_option("--model", ss_model, "1a or 1b");

    // denoise-counts
    auto* dc = app.add_subcommand("denoise-counts", "smooth a count series (poisson)");
    std::string dc_in, dc_window, dc_threshold = "universal";
    int dc_column = 1, dc_j0 = 0;
    dc->add_option("--in", dc_in)->required();
    dc->add_option("--column", dc_column, "1-based csv column");
    dc->add_option("--window", dc_window, "begin:end row window (half open)");
    dc->add_option("--threshold", dc_threshold);
    dc->add_option("--j0", dc_j0);

    // plot
    auto* pl = app.add_subcommand("plot", "render a csv as a minimal svg chart");
    std::string pl_in, pl_kind = "line";
    pl->add_option("--in", pl_in)->required();
    pl->add_option("--kind", pl_kind, "line or scatter");

    try {
        app.parse(argc, argv);
        g.format = parse_format(format_text);

        if (*mk) cmd_make_signal(g, mk_shape, mk_n, mk_min, mk_max);
        if (*sp) cmd_sample(g, sp_family, sp_mean);
        if (*tr) cmd_transform(g, tr_in, tr_inverse, tr_family);
        if (*st) emit_signal(g, stabilize(read_signal(st_in), parse_family(st_family)));
        if (*un) emit_signal(g, unstabilize(read_signal(un_in), parse_family(un_family)));
        if (*dn) cmd_denoise(g, dn_in, dn_family, dn_statistic, dn_threshold, dn_j0, dn_variant);
        if (*cs) cmd_coeff_study(g, cs_family, cs_j, cs_left, cs_right, cs_reps);
        if (*ms) cmd_mse_study(g, ms_models, ms_statistics, ms_reps, ms_n);
        if (*ss) cmd_stab_study(g, ss_model);
        if (*dc) cmd_denoise_counts(g, dc_in, dc_column, dc_window, dc_threshold, dc_j0);
        if (*pl) cmd_plot(g, pl_in, pl_kind);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}

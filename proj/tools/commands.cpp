#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "dsm/diagnostics.hpp"
#include "dsm/errors.hpp"
#include "dsm/scenario_io.hpp"
#include "dsm/special_functions.hpp"

namespace dsm::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_point(Point2 p) {
    std::ostringstream s;
    s << std::setprecision(6) << '(' << p.x << ", " << p.y << ')';
    return s.str();
}

json report_json(const ImageOptions& opts, const IndicatorMap& map, const std::vector<Peak>& peaks,
                 double timing_ms) {
    json peak_list = json::array();
    for (const auto& p : peaks) {
        peak_list.push_back({{"index", p.index}, {"x", p.point.x}, {"y", p.point.y}, {"value", p.value}});
    }
    json report;
    report["scenario"] = opts.scenario.string();
    report["mode"] = std::string(to_string(map.kind));
    report["field_mode"] = std::string(to_string(map.metadata.field_mode));
    report["grid_points"] = map.size();
    report["peak_threshold"] = opts.peak_threshold;
    report["peaks"] = peak_list;
    report["timing_ms"] = timing_ms;
    report["metadata"] = {{"lossy_approximation", map.metadata.lossy_approximation},
                          {"truncation_order", map.metadata.truncation_order},
                          {"near_antenna_points", map.metadata.near_antenna_points},
                          {"warnings", map.metadata.warnings}};
    return report;
}

}  // namespace

ImageOutputs image_outputs(const std::filesystem::path& out) {
    auto base = out;
    const auto ext = base.extension();
    if (ext == ".csv" || ext == ".pgm") {
        base.replace_extension();
    }
    auto with = [&base](const char* suffix) {
        auto p = base;
        p += suffix;
        return p;
    };
    return {with(".csv"), with(".pgm"), with(".report.json")};
}

int cmd_synth(const SynthOptions& opts, std::ostream& out) {
    const Scenario scenario = read_scenario(opts.scenario);
    const FieldMode mode = opts.field_mode.value_or(scenario.resolved_field_mode());
    std::vector<std::string> warnings;
    SParamSet data = opts.extended ? synth_extended(scenario, opts.cells_per_wavelength, mode, opts.policy)
                                   : synth_point(scenario, mode, &warnings, opts.policy);

    std::optional<double> snr = opts.noise_snr_db;
    std::uint64_t seed = opts.seed.value_or(0);
    if (!snr && scenario.noise) {
        snr = scenario.noise->snr_db;
        seed = opts.seed.value_or(scenario.noise->seed);
    }
    if (snr) {
        data = add_noise(data, *snr, seed);
    }
    write_sparams_csv(data, opts.out);
    for (const auto& w : warnings) {
        out << "warning: " << w << '\n';
    }
    out << "wrote " << data.size() << " S-parameters (" << (opts.extended ? "extended" : "point") << ", "
        << to_string(mode) << " fields" << (snr ? ", noisy" : "") << ") to " << opts.out.string() << '\n';
    return 0;
}

int cmd_image(const ImageOptions& opts, std::ostream& out) {
    const Scenario scenario = read_scenario(opts.scenario);
    const auto start = Clock::now();
    IndicatorMap map;
    if (opts.analytic) {
        const int order = opts.truncation_order.value_or(minimum_truncation_order(scenario));
        map = analytic_phi_map(scenario, order, opts.policy);
    } else {
        if (!opts.sparams) {
            throw UsageError("image needs an S-parameter file unless --analytic is given");
        }
        const SParamSet data = read_sparams_csv(*opts.sparams);
        const FieldMode mode = opts.field_mode.value_or(scenario.resolved_field_mode());
        map = indicator_map(data, scenario, mode, opts.policy);
    }
    const auto peaks = peak_extract(map, opts.peak_threshold);
    const double timing = elapsed_ms(start);

    const ImageOutputs files = image_outputs(opts.out);
    write_map(map, files.csv, MapFormat::csv);
    write_map(map, files.pgm, MapFormat::pgm);
    write_file_atomic(files.report, report_json(opts, map, peaks, timing).dump(2) + "\n");

    out << to_string(map.kind) << " map: " << map.size() << " grid points, " << std::fixed << std::setprecision(1)
        << timing << " ms\n";
    out.unsetf(std::ios::floatfield);
    for (const auto& w : map.metadata.warnings) {
        out << "warning: " << w << '\n';
    }
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        out << "peak " << i + 1 << ": " << fmt_point(peaks[i].point) << " value " << std::setprecision(6)
            << peaks[i].value << '\n';
    }
    if (peaks.empty()) {
        out << "no peak above " << opts.peak_threshold << '\n';
    }
    out << "wrote " << files.csv.string() << ", " << files.pgm.string() << ", " << files.report.string() << '\n';
    return 0;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
    const Scenario scenario = read_scenario(opts.scenario);
    if (!scenario.medium.lossless()) {
        throw ValidationError("verify needs a lossless scenario (medium.sigma = 0)");
    }
    if (scenario.anomalies.size() != 1) {
        throw ValidationError("verify needs exactly one anomaly");
    }
    bool ok = true;
    for (const auto& check : diagnostics::special_function_suite()) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << std::scientific << std::setprecision(3)
            << check.measured << " (tol " << check.tolerance << ")\n";
        ok = ok && check.passed;
    }

    const SParamSet data = opts.sparams ? read_sparams_csv(*opts.sparams)
                                        : synth_point(scenario, FieldMode::asymptotic, nullptr, opts.policy);
    const int order = diagnostics::identity_chain_order(scenario);
    const auto chain = diagnostics::identity_chain(data, scenario, order, opts.policy);
    out << (chain.passed ? "PASS " : "FAIL ") << "identity chain |DSM - |Phi|/max|Phi||: max deviation "
        << chain.max_deviation << " (tol " << diagnostics::kIdentityChainTolerance << ", M = " << order << ")\n";
    if (!chain.passed) {
        out << "  worst grid point " << chain.worst_index << " at " << fmt_point(chain.worst_point) << '\n';
    }
    ok = ok && chain.passed;

    if (!opts.sweep_sizes.empty()) {
        const auto sweep = diagnostics::artifact_sweep(scenario, opts.sweep_sizes, opts.policy);
        out << std::fixed << std::setprecision(4);
        for (const auto& row : sweep.rows) {
            out << "  N = " << row.n << ": max artifact outside lambda/2 = " << row.max_artifact << '\n';
        }
        out << (sweep.non_increasing ? "PASS " : "FAIL ") << "artifact level non-increasing in N (slack "
            << sweep.slack << ")\n";
        ok = ok && sweep.non_increasing;
    }
    out.unsetf(std::ios::floatfield);
    out << (ok ? "verify: PASS\n" : "verify: FAIL\n");
    return ok ? 0 : 1;
}

int cmd_bessel_table(const BesselTableOptions& opts, std::ostream& out) {
    if (opts.max_order < 0 || !(opts.step > 0.0) || !(opts.max_x >= 0.0)) {
        throw UsageError("bessel-table needs m_max >= 0, x_max >= 0 and step > 0");
    }
    out << 'x';
    for (int m = 0; m <= opts.max_order; ++m) {
        out << ",J_" << m;
    }
    out << '\n' << std::setprecision(17);
    const auto count = static_cast<long>(std::floor(opts.max_x / opts.step + 1e-9));
    for (long i = 0; i <= count; ++i) {
        const double x = static_cast<double>(i) * opts.step;
        const auto j = special::bessel_j_sequence(opts.max_order, x);
        out << x;
        for (double v : j) {
            out << ',' << v;
        }
        out << '\n';
    }
    return 0;
}

ExecPolicy resolve_threads(std::optional<unsigned> flag) {
    if (flag) {
        return ExecPolicy{*flag};
    }
    if (const char* env = std::getenv("DSM_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != nullptr && *end == '\0') {
            return ExecPolicy{static_cast<unsigned>(v)};
        }
        throw UsageError("DSM_THREADS must be a non-negative integer");
    }
    return ExecPolicy{};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated list of integers, got `" + text + "`");
        }
    }
    if (out.empty()) {
        throw UsageError("empty integer list");
    }
    return out;
}

namespace {

std::optional<FieldMode> parse_field_mode(const std::string& text) {
    if (text.empty() || text == "auto") {
        return std::nullopt;
    }
    if (text == "exact") {
        return FieldMode::exact;
    }
    if (text == "asymptotic") {
        return FieldMode::asymptotic;
    }
    throw UsageError("--field-mode must be auto, exact or asymptotic");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Direct sampling imaging of small anomalies from S-parameter data"};
    app.require_subcommand(1);
    std::optional<unsigned> threads;
    app.add_option("--threads", threads, "Worker threads (default: DSM_THREADS or all cores)");
    std::string field_mode;

    SynthOptions synth;
    std::optional<double> snr;
    std::optional<std::uint64_t> seed;
    auto* s = app.add_subcommand("synth", "Synthesise Born S-parameters for a scenario");
    s->add_option("scenario", synth.scenario, "Scenario JSON")->required();
    s->add_option("out", synth.out, "Output CSV (n,re,im)")->required();
    s->add_flag("--extended", synth.extended, "Quadrature over the disk instead of the point model");
    s->add_option("--cells-per-wavelength", synth.cells_per_wavelength, "Quadrature resolution (>= 10)");
    s->add_option("--noise-snr-db", snr, "Add complex Gaussian noise at this SNR");
    s->add_option("--seed", seed, "Noise seed");
    s->add_option("--field-mode", field_mode, "auto | exact | asymptotic");
    s->add_option("--threads", threads, "Worker threads");

    ImageOptions image;
    std::string sparams;
    auto* im = app.add_subcommand("image", "Compute the DSM indicator map");
    im->add_option("scenario", image.scenario, "Scenario JSON")->required();
    im->add_option("sparams", sparams, "S-parameter CSV (omit with --analytic)");
    im->add_option("out", image.out, "Output base path for .csv/.pgm/.report.json");
    im->add_flag("--analytic", image.analytic, "Emit the Bessel-series |Phi| map instead");
    im->add_option("--peak-threshold", image.peak_threshold, "Peak threshold (default 0.8)");
    im->add_option("--truncation", image.truncation_order, "Bessel truncation order for --analytic");
    im->add_option("--field-mode", field_mode, "auto | exact | asymptotic");
    im->add_option("--threads", threads, "Worker threads");

    ImageOptions analytic;
    analytic.analytic = true;
    auto* an = app.add_subcommand("analytic", "Alias of image --analytic");
    an->add_option("scenario", analytic.scenario, "Scenario JSON")->required();
    an->add_option("out", analytic.out, "Output base path")->required();
    an->add_option("--peak-threshold", analytic.peak_threshold, "Peak threshold (default 0.8)");
    an->add_option("--truncation", analytic.truncation_order, "Bessel truncation order");
    an->add_option("--threads", threads, "Worker threads");

    VerifyOptions verify;
    std::string verify_sparams;
    std::string sweep;
    auto* ve = app.add_subcommand("verify", "Check the DSM map against the structure function");
    ve->add_option("scenario", verify.scenario, "Lossless scenario JSON")->required();
    ve->add_option("--sparams", verify_sparams, "Use this S-parameter CSV instead of synthesising");
    ve->add_option("--sweep-n", sweep, "Comma-separated array sizes for the artifact sweep");
    ve->add_option("--threads", threads, "Worker threads");

    BesselTableOptions table;
    auto* bt = app.add_subcommand("bessel-table", "Print J_0..J_m_max on a grid of x");
    bt->add_option("m_max", table.max_order)->required();
    bt->add_option("x_max", table.max_x)->required();
    bt->add_option("step", table.step)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const ExecPolicy policy = resolve_threads(threads);
        if (s->parsed()) {
            synth.noise_snr_db = snr;
            synth.seed = seed;
            synth.field_mode = parse_field_mode(field_mode);
            synth.policy = policy;
            return cmd_synth(synth, out);
        }
        if (im->parsed()) {
            if (image.analytic && image.out.empty()) {
                image.out = sparams;  // `image --analytic scenario out`
            } else if (!sparams.empty()) {
                image.sparams = sparams;
            }
            if (image.out.empty()) {
                throw UsageError("image needs an output path");
            }
            image.field_mode = parse_field_mode(field_mode);
            image.policy = policy;
            return cmd_image(image, out);
        }
        if (an->parsed()) {
            analytic.policy = policy;
            return cmd_image(analytic, out);
        }
        if (ve->parsed()) {
            if (!verify_sparams.empty()) {
                verify.sparams = verify_sparams;
            }
            if (!sweep.empty()) {
                verify.sweep_sizes = parse_int_list(sweep);
            }
            verify.policy = policy;
            return cmd_verify(verify, out);
        }
        return cmd_bessel_table(table, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace dsm::cli

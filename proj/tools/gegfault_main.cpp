// gegfault command-line front end. All domain work goes through the C API
// in gegfault.h; this file only parses arguments and formats files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gegfault.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(gf_status status) {
    if (status != GF_OK) throw CliError(gf_last_error());
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct FilterHandle {
    gf_filter* ptr = nullptr;
    explicit FilterHandle(const std::string& spec) { check(gf_filter_create(spec.c_str(), &ptr)); }
    ~FilterHandle() { gf_filter_destroy(ptr); }
    FilterHandle(const FilterHandle&) = delete;
    FilterHandle& operator=(const FilterHandle&) = delete;

    std::string tag() const {
        char buf[64];
        check(gf_filter_tag(ptr, buf, sizeof(buf)));
        return buf;
    }
};

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw CliError("cannot open '" + path.string() + "' for writing");
    return out;
}

void write_json(const fs::path& path, const json& doc) {
    auto out = open_output(path);
    out << doc.dump(2) << "\n";
    std::cout << path.string() << "\n";
}

struct CommonOptions {
    std::string out_dir;
    std::string config_path;
    gf_run_config config{};
    gf_line_params line{};
    gf_source_params sources{};

    CommonOptions() {
        gf_run_config_defaults(&config);
        gf_line_defaults(&line);
        gf_source_defaults(&sources);
        const char* env = std::getenv("GEGFAULT_OUT");
        out_dir = env ? env : ".";
    }

    fs::path in_out(const std::string& name) const { return fs::path(out_dir) / name; }

    void load_config_file() {
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw CliError("cannot open config file '" + config_path + "'");
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw CliError("config '" + config_path + "' is not valid JSON: " + e.what());
        }
        config.fundamental_hz = doc.value("fundamental_hz", config.fundamental_hz);
        config.threshold_multiplier = doc.value("threshold_multiplier", config.threshold_multiplier);
        config.prefault_cycles = doc.value("prefault_cycles", config.prefault_cycles);
        config.calibration_skip_cycles =
            doc.value("calibration_skip_cycles", config.calibration_skip_cycles);
        config.rated_current_a = doc.value("rated_current_a", config.rated_current_a);
        config.relative_phase_gate = doc.value("relative_phase_gate", config.relative_phase_gate);
        config.location_level = doc.value("location_level", config.location_level);
        if (doc.contains("line")) {
            const auto& l = doc.at("line");
            line.length_km = l.value("length_km", line.length_km);
            line.r1_ohm_km = l.value("r1_ohm_km", line.r1_ohm_km);
            line.l1_mh_km = l.value("l1_mh_km", line.l1_mh_km);
            line.c1_nf_km = l.value("c1_nf_km", line.c1_nf_km);
            line.r0_ohm_km = l.value("r0_ohm_km", line.r0_ohm_km);
            line.l0_mh_km = l.value("l0_mh_km", line.l0_mh_km);
            line.c0_nf_km = l.value("c0_nf_km", line.c0_nf_km);
            line.nominal_kv = l.value("nominal_kv", line.nominal_kv);
        }
        if (doc.contains("sources")) {
            const auto& s = doc.at("sources");
            sources.ze1_r = s.value("ze1_r", sources.ze1_r);
            sources.ze1_x = s.value("ze1_x", sources.ze1_x);
            sources.ze1_r0 = s.value("ze1_r0", sources.ze1_r0);
            sources.ze1_x0 = s.value("ze1_x0", sources.ze1_x0);
            sources.ze2_r = s.value("ze2_r", sources.ze2_r);
            sources.ze2_x = s.value("ze2_x", sources.ze2_x);
            sources.ze2_r0 = s.value("ze2_r0", sources.ze2_r0);
            sources.ze2_x0 = s.value("ze2_x0", sources.ze2_x0);
            sources.e1_kv = s.value("e1_kv", sources.e1_kv);
            sources.e1_deg = s.value("e1_deg", sources.e1_deg);
            sources.e2_kv = s.value("e2_kv", sources.e2_kv);
            sources.e2_deg = s.value("e2_deg", sources.e2_deg);
        }
    }
};

int run_design(const CommonOptions& opts, const std::string& spec) {
    FilterHandle filter(spec);
    size_t taps = 0;
    check(gf_filter_taps(filter.ptr, &taps));
    std::vector<double> h(taps), g(taps);
    check(gf_filter_coeffs(filter.ptr, h.data(), g.data()));

    const std::string tag = filter.tag();
    const fs::path csv_path = opts.in_out("design_" + tag + ".csv");
    auto csv = open_output(csv_path);
    csv << "k,h_k,g_k\n";
    for (size_t k = 0; k < taps; ++k)
        csv << k << "," << fmt(h[k]) << "," << fmt(g[k]) << "\n";
    std::cout << csv_path.string() << "\n";

    int is_geg = 0, nu = 0;
    double alpha = 0.0;
    check(gf_filter_params(filter.ptr, &is_geg, &nu, &alpha));

    json doc;
    doc["filter"] = spec;
    doc["tag"] = tag;
    doc["family"] = is_geg ? "gegenbauer" : "daub4";
    if (is_geg) {
        doc["nu"] = nu;
        doc["alpha"] = alpha;
    }
    doc["taps"] = taps;
    doc["h"] = h;
    doc["g"] = g;
    write_json(opts.in_out("design_" + tag + ".json"), doc);
    return 0;
}

int run_response(const CommonOptions& opts, const std::string& spec, const std::string& kind_name,
                 size_t grid) {
    FilterHandle filter(spec);
    const gf_kind kind = kind_name == "wavelet" ? GF_WAVELET : GF_SCALING;
    std::vector<double> omega(grid), mag(grid), phase(grid), gd(grid);
    check(gf_response(filter.ptr, kind, grid, omega.data(), mag.data(), phase.data(), gd.data()));

    const fs::path path = opts.in_out("response_" + filter.tag() + "_" + kind_name + ".csv");
    auto csv = open_output(path);
    csv << "omega,magnitude,phase,group_delay\n";
    for (size_t i = 0; i < grid; ++i)
        csv << fmt(omega[i]) << "," << fmt(mag[i]) << "," << fmt(phase[i]) << "," << fmt(gd[i])
            << "\n";
    std::cout << path.string() << "\n";
    return 0;
}

int run_bands(const CommonOptions& opts, const std::string& spec, int levels, double fs) {
    std::vector<double> s_hi(static_cast<size_t>(levels));
    std::vector<double> w_lo(static_cast<size_t>(levels));
    std::vector<double> w_hi(static_cast<size_t>(levels));
    std::string tag = spec;
    if (spec == "ideal") {
        check(gf_ideal_band_edges(fs, levels, s_hi.data(), w_lo.data(), w_hi.data()));
    } else {
        FilterHandle filter(spec);
        check(gf_band_edges(filter.ptr, fs, levels, s_hi.data(), w_lo.data(), w_hi.data()));
        tag = filter.tag();
    }

    json rows = json::array();
    for (int j = 0; j < levels; ++j) {
        const auto i = static_cast<size_t>(j);
        rows.push_back({{"level", j + 1},
                        {"samples_per_cycle", fs / opts.config.fundamental_hz / std::pow(2.0, j + 1)},
                        {"scaling_hz", {0.0, s_hi[i]}},
                        {"wavelet_hz", {w_lo[i], w_hi[i]}},
                        {"scaling_hi_rounded", std::llround(s_hi[i])},
                        {"wavelet_lo_rounded", std::llround(w_lo[i])}});
    }
    json doc{{"filter", tag}, {"sample_rate_hz", fs}, {"levels", rows}};
    write_json(opts.in_out("bands_" + tag + ".json"), doc);
    return 0;
}

int run_cascade(const CommonOptions& opts, const std::string& spec, const std::string& kind_name,
                int iterations) {
    FilterHandle filter(spec);
    const gf_kind kind = kind_name == "wavelet" ? GF_WAVELET : GF_SCALING;
    size_t len = 0;
    check(gf_cascade_length(filter.ptr, iterations, &len));
    std::vector<double> samples(len);
    check(gf_cascade(filter.ptr, kind, iterations, samples.data(), len));

    const fs::path path = opts.in_out("cascade_" + filter.tag() + "_" + kind_name + "_i" +
                                      std::to_string(iterations) + ".csv");
    auto csv = open_output(path);
    csv << "n,value\n";
    for (size_t i = 0; i < len; ++i) csv << i << "," << fmt(samples[i]) << "\n";
    std::cout << path.string() << "\n";
    return 0;
}

int run_decompose(const CommonOptions& opts, const std::string& record_path,
                  const std::string& spec, int levels, const std::string& channel) {
    static const std::vector<std::string> names = {"va", "vb", "vc", "ia", "ib", "ic"};
    int chan = -1;
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == channel) chan = static_cast<int>(i);
    if (chan < 0) throw CliError("unknown channel '" + channel + "' (use va, vb, vc, ia, ib or ic)");

    gf_record* record = nullptr;
    check(gf_record_read(record_path.c_str(), &record));
    std::unique_ptr<gf_record, decltype(&gf_record_destroy)> record_guard(record,
                                                                          &gf_record_destroy);
    size_t n = 0;
    check(gf_record_length(record, &n));
    double fs = 0.0;
    check(gf_record_sample_rate(record, &fs));
    std::vector<double> x(n);
    check(gf_record_channel(record, chan, x.data(), n));

    FilterHandle filter(spec);
    gf_decomp* decomp = nullptr;
    check(gf_decompose(x.data(), n, filter.ptr, levels, &decomp));
    std::unique_ptr<gf_decomp, decltype(&gf_decomp_destroy)> decomp_guard(decomp,
                                                                          &gf_decomp_destroy);

    json sidecar_levels = json::array();
    for (int j = 1; j <= levels; ++j) {
        size_t len = 0;
        check(gf_decomp_length(decomp, j, &len));
        std::vector<double> a(len), d(len);
        check(gf_decomp_approx(decomp, j, a.data(), len));
        check(gf_decomp_detail(decomp, j, d.data(), len));
        double delay = 0.0;
        check(gf_decomp_delay(decomp, j, &delay));

        const fs::path path = opts.in_out("decompose_" + channel + "_level" + std::to_string(j) +
                                          ".csv");
        auto csv = open_output(path);
        csv << "n,a_" << j << ",d_" << j << "\n";
        for (size_t i = 0; i < len; ++i)
            csv << i << "," << fmt(a[i]) << "," << fmt(d[i]) << "\n";
        std::cout << path.string() << "\n";

        sidecar_levels.push_back({{"level", j},
                                  {"length", len},
                                  {"effective_rate_hz", fs / std::pow(2.0, j)},
                                  {"cumulative_delay_input_samples", delay}});
    }
    json sidecar{{"record", record_path},
                 {"channel", channel},
                 {"filter", filter.tag()},
                 {"sample_rate_hz", fs},
                 {"levels", sidecar_levels}};
    write_json(opts.in_out("decompose_" + channel + "_levels.json"), sidecar);
    return 0;
}

int run_simulate(const CommonOptions& opts, const std::string& type, double at, double inception,
                 double rf, double cycles, int spc, std::string to) {
    gf_record* record = nullptr;
    check(gf_simulate(type.c_str(), at, inception, rf, &opts.line, &opts.sources, cycles, spc,
                      &record));
    std::unique_ptr<gf_record, decltype(&gf_record_destroy)> guard(record, &gf_record_destroy);

    if (to.empty()) {
        std::string compact;
        for (char c : type)
            if (c != '-') compact += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (compact.size() > 1 && compact.back() == 'G')
            compact = compact.substr(0, compact.size() - 1) + "g";
        to = (opts.in_out("record_" + compact + std::to_string(std::lround(at * 100)) + ".csv"))
                 .string();
    }
    const fs::path path(to);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    check(gf_record_write(record, path.string().c_str()));
    std::cout << path.string() << "\n";
    return 0;
}

json analysis_to_json(const gf_analysis* analysis, const std::string& tag, double truth_km) {
    int detected = 0;
    check(gf_analysis_detected(analysis, &detected));
    double leakage = 0.0;
    check(gf_analysis_leakage(analysis, &leakage));

    json doc;
    doc["filter"] = tag;
    doc["wavelet_gain_at_fundamental"] = leakage;
    doc["detection"]["detected"] = detected != 0;
    if (detected) {
        size_t idx = 0;
        check(gf_analysis_inception_index(analysis, &idx));
        int ground = 0;
        check(gf_analysis_ground(analysis, &ground));
        int flags[3] = {0, 0, 0};
        double thresholds[3] = {0.0, 0.0, 0.0};
        check(gf_analysis_triggering(analysis, flags, thresholds));
        char type_buf[16];
        check(gf_analysis_fault_type(analysis, type_buf, sizeof(type_buf)));

        doc["detection"]["inception_index_level1"] = idx;
        doc["detection"]["ground_involved"] = ground != 0;
        doc["detection"]["triggering_components"] = json::array();
        const char* comp_names[3] = {"alpha", "beta", "zero"};
        for (int c = 0; c < 3; ++c) {
            if (flags[c]) doc["detection"]["triggering_components"].push_back(comp_names[c]);
            doc["detection"]["thresholds"][comp_names[c]] = thresholds[c];
        }
        doc["classification"]["fault_type"] = type_buf;

        size_t count = 0;
        check(gf_analysis_window_count(analysis, &count));
        if (count > 0) {
            size_t sixth = 0;
            double df = 0.0, err = 0.0;
            check(gf_analysis_sixth_window(analysis, &sixth, &df, &err));
            doc["location"]["windows"] = count;
            doc["location"]["sixth_window"]["index"] = sixth;
            doc["location"]["sixth_window"]["df_km"] = df;
            if (std::isfinite(err)) doc["location"]["sixth_window"]["error"] = err;
            if (std::isfinite(truth_km)) doc["location"]["truth_km"] = truth_km;

            // Per-cycle snapshots: windows whose right edge closes a cycle.
            size_t window_len = 0;
            check(gf_analysis_window_length(analysis, &window_len));
            std::vector<double> all_df(count), all_err(count);
            check(gf_analysis_windows(analysis, all_df.data(), all_err.data()));
            json per_cycle = json::array();
            for (size_t start = 0; start < count; start += window_len) {
                json row{{"cycle", start / window_len + 1}, {"df_km", all_df[start]}};
                if (std::isfinite(all_err[start])) row["error"] = all_err[start];
                per_cycle.push_back(row);
            }
            doc["location"]["per_cycle"] = per_cycle;
        }
    }
    return doc;
}

int run_analyze(const CommonOptions& opts, const std::string& record_path, const std::string& spec,
                double truth_km) {
    gf_record* record = nullptr;
    check(gf_record_read(record_path.c_str(), &record));
    std::unique_ptr<gf_record, decltype(&gf_record_destroy)> record_guard(record,
                                                                          &gf_record_destroy);
    FilterHandle filter(spec);
    gf_analysis* analysis = nullptr;
    check(gf_analyze(record, filter.ptr, &opts.line, &opts.config, truth_km, &analysis));
    std::unique_ptr<gf_analysis, decltype(&gf_analysis_destroy)> analysis_guard(
        analysis, &gf_analysis_destroy);

    const std::string tag = filter.tag();
    int detected = 0;
    check(gf_analysis_detected(analysis, &detected));

    size_t count = 0;
    if (detected) check(gf_analysis_window_count(analysis, &count));
    if (count > 0) {
        std::vector<double> df(count), err(count);
        check(gf_analysis_windows(analysis, df.data(), err.data()));
        const fs::path path = opts.in_out("analyze_" + tag + "_windows.csv");
        auto csv = open_output(path);
        csv << "window,D_F_km,error\n";
        for (size_t i = 0; i < count; ++i)
            csv << i << "," << fmt(df[i]) << "," << fmt(err[i]) << "\n";
        std::cout << path.string() << "\n";
    }

    json doc = analysis_to_json(analysis, tag, truth_km);
    doc["record"] = record_path;
    write_json(opts.in_out("analyze_" + tag + "_summary.json"), doc);

    if (!detected) {
        std::cout << "no fault detected\n";
    } else {
        char type_buf[16];
        check(gf_analysis_fault_type(analysis, type_buf, sizeof(type_buf)));
        double df = 0.0, err = 0.0;
        size_t sixth = 0;
        check(gf_analysis_sixth_window(analysis, &sixth, &df, &err));
        std::cout << "detected " << type_buf << ", sixth-window distance " << fmt_short(df)
                  << " km";
        if (std::isfinite(err)) std::cout << " (error " << fmt_short(err * 100.0) << "%)";
        std::cout << "\n";
    }
    return 0;
}

int run_sweep_cmd(const CommonOptions& opts, const std::string& catalog_arg,
                  const std::string& filters_csv, const std::string& write_catalog_path) {
    gf_catalog* catalog = nullptr;
    if (catalog_arg == "default")
        check(gf_catalog_default(&catalog));
    else
        check(gf_catalog_read(catalog_arg.c_str(), &catalog));
    std::unique_ptr<gf_catalog, decltype(&gf_catalog_destroy)> catalog_guard(catalog,
                                                                             &gf_catalog_destroy);
    if (!write_catalog_path.empty()) {
        check(gf_catalog_write(catalog, write_catalog_path.c_str()));
        std::cout << write_catalog_path << "\n";
    }

    std::vector<std::string> specs;
    std::string item;
    std::stringstream ss(filters_csv);
    while (std::getline(ss, item, ','))
        if (!item.empty()) specs.push_back(item);
    if (specs.empty()) throw CliError("no filters given (use --filters daub4,geg:3:1,geg:3:12)");

    size_t n_cases = 0;
    check(gf_catalog_size(catalog, &n_cases));

    json summary;
    summary["cases"] = n_cases;
    summary["filters"] = json::array();

    struct SweepHold {
        std::string tag;
        std::vector<gf_case_result> cases;
    };
    std::vector<SweepHold> holds;

    for (const std::string& spec : specs) {
        FilterHandle filter(spec);
        gf_sweep* sweep = nullptr;
        check(gf_sweep_run(catalog, filter.ptr, &opts.line, &opts.config, &sweep));
        std::unique_ptr<gf_sweep, decltype(&gf_sweep_destroy)> sweep_guard(sweep,
                                                                           &gf_sweep_destroy);
        SweepHold hold;
        hold.tag = filter.tag();

        double det_rate = 0.0, ground_acc = 0.0, leak = 0.0;
        check(gf_sweep_rates(sweep, &det_rate, &ground_acc, &leak));

        json filter_doc;
        filter_doc["filter"] = hold.tag;
        filter_doc["detection_rate"] = det_rate;
        filter_doc["ground_accuracy"] = ground_acc;
        filter_doc["wavelet_gain_at_fundamental"] = leak;

        const char* class_names[3] = {"single_phase_earth", "three_phase", "two_phase"};
        for (int cls = 0; cls < 3; ++cls) {
            gf_class_stats stats{};
            check(gf_sweep_class_stats(sweep, cls, &stats));
            filter_doc["classes"][class_names[cls]] = {
                {"cases", stats.cases},
                {"detected", stats.detected},
                {"detect_within_cycle", stats.detect_within_cycle},
                {"ground_correct", stats.ground_correct},
                {"max_abs_sixth_error", stats.max_abs_sixth_error}};
        }

        json case_rows = json::array();
        for (size_t i = 0; i < n_cases; ++i) {
            gf_case_result c{};
            check(gf_sweep_case(sweep, i, &c));
            hold.cases.push_back(c);
            case_rows.push_back({{"id", c.id},
                                 {"type", c.truth_type},
                                 {"truth_km", c.truth_km},
                                 {"detected", c.detected != 0},
                                 {"detect_within_cycle", c.detect_within_cycle != 0},
                                 {"ground_correct", c.ground_correct != 0},
                                 {"classified", c.classified_type},
                                 {"sixth_df_km", c.sixth_df_km},
                                 {"sixth_error", c.sixth_error}});
        }
        filter_doc["results"] = case_rows;
        summary["filters"].push_back(filter_doc);

        std::cout << hold.tag << ": detection " << fmt_short(det_rate * 100.0) << "%, ground "
                  << fmt_short(ground_acc * 100.0) << "%\n";
        holds.push_back(std::move(hold));
    }

    write_json(opts.in_out("sweep_summary.json"), summary);

    // Single-phase-earth error chart data, one row per case id.
    const fs::path fig_path = opts.in_out("sweep_fig12.csv");
    auto fig = open_output(fig_path);
    fig << "id";
    for (const auto& hold : holds) fig << "," << hold.tag << "_err";
    fig << "\n";
    for (size_t i = 0; i < n_cases; ++i) {
        const std::string type = holds.front().cases[i].truth_type;
        if (type != "Ag" && type != "Bg" && type != "Cg") continue;
        fig << holds.front().cases[i].id;
        for (const auto& hold : holds) fig << "," << fmt(hold.cases[i].sixth_error);
        fig << "\n";
    }
    std::cout << fig_path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gegenbauer filter banks for transmission-line fault analysis"};
    app.require_subcommand(1);

    CommonOptions opts;

    // design
    std::string design_spec;
    auto* design = app.add_subcommand("design", "emit filter coefficients (CSV + JSON)");
    design->add_option("spec", design_spec, "filter spec: geg:<nu>:<alpha>, daub4, haar")
        ->required();
    design->add_option("--out", opts.out_dir, "output directory");

    // response
    std::string resp_spec, resp_kind = "scaling";
    size_t resp_grid = 4096;
    auto* response = app.add_subcommand("response", "frequency response CSV");
    response->add_option("spec", resp_spec)->required();
    response->add_option("--kind", resp_kind)->check(CLI::IsMember({"scaling", "wavelet"}));
    response->add_option("--grid", resp_grid, "grid points on [0, pi]");
    response->add_option("--out", opts.out_dir);

    // bands
    std::string bands_spec;
    int bands_levels = 7;
    double bands_fs = 7680.0;
    auto* bands = app.add_subcommand("bands", "per-level frequency band table (JSON)");
    bands->add_option("spec", bands_spec, "filter spec or 'ideal'")->required();
    bands->add_option("--levels", bands_levels);
    bands->add_option("--fs", bands_fs, "sample rate, Hz");
    bands->add_option("--out", opts.out_dir);

    // cascade
    std::string casc_spec, casc_kind = "scaling";
    int casc_iters = 4;
    auto* casc = app.add_subcommand("cascade", "iterated scaling/wavelet waveform (CSV)");
    casc->add_option("spec", casc_spec)->required();
    casc->add_option("--kind", casc_kind)->check(CLI::IsMember({"scaling", "wavelet"}));
    casc->add_option("--iterations", casc_iters);
    casc->add_option("--out", opts.out_dir);

    // decompose
    std::string dec_record, dec_spec, dec_channel = "va";
    int dec_levels = 3;
    auto* dec = app.add_subcommand("decompose", "multi-level analysis of one record channel");
    dec->add_option("record", dec_record, "record CSV path")->required();
    dec->add_option("--filter", dec_spec)->required();
    dec->add_option("--levels", dec_levels);
    dec->add_option("--channel", dec_channel)
        ->check(CLI::IsMember({"va", "vb", "vc", "ia", "ib", "ic"}));
    dec->add_option("--out", opts.out_dir);

    // simulate
    std::string sim_type, sim_to;
    double sim_at = 0.5, sim_inception = 4.0, sim_rf = 0.0, sim_cycles = 8.0;
    int sim_spc = 128;
    auto* sim = app.add_subcommand("simulate", "synthesize a fault record");
    sim->add_option("--type", sim_type, "fault type (A-g, AB, AB-g, ABC, ...)")->required();
    sim->add_option("--at", sim_at, "fault location as a fraction of line length")->required();
    sim->add_option("--inception", sim_inception, "inception instant, cycles");
    sim->add_option("--rf", sim_rf, "fault resistance, ohm");
    sim->add_option("--cycles", sim_cycles, "record duration, cycles");
    sim->add_option("--spc", sim_spc, "samples per cycle");
    sim->add_option("--to", sim_to, "output record path (default <out>/record_<id>.csv)");
    sim->add_option("--out", opts.out_dir);
    sim->add_option("--config", opts.config_path, "JSON config (line/source overrides)");

    // analyze
    std::string ana_record, ana_spec;
    double ana_truth = kNaN;
    auto* ana = app.add_subcommand("analyze", "detect, classify and locate a fault in a record");
    ana->add_option("record", ana_record)->required();
    ana->add_option("--filter", ana_spec)->required();
    ana->add_option("--truth", ana_truth, "true fault distance, km (enables error columns)");
    ana->add_option("--out", opts.out_dir);
    ana->add_option("--config", opts.config_path);

    // sweep
    std::string sweep_catalog, sweep_filters = "daub4,geg:3:1,geg:3:12", sweep_write;
    auto* swp = app.add_subcommand("sweep", "run the scenario catalog through the pipeline");
    swp->add_option("catalog", sweep_catalog, "catalog JSON path or 'default'")->required();
    swp->add_option("--filters", sweep_filters, "comma-separated filter specs");
    swp->add_option("--write-catalog", sweep_write, "also write the catalog JSON here");
    swp->add_option("--out", opts.out_dir);
    swp->add_option("--config", opts.config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        opts.load_config_file();
        if (design->parsed()) return run_design(opts, design_spec);
        if (response->parsed()) return run_response(opts, resp_spec, resp_kind, resp_grid);
        if (bands->parsed()) return run_bands(opts, bands_spec, bands_levels, bands_fs);
        if (casc->parsed()) return run_cascade(opts, casc_spec, casc_kind, casc_iters);
        if (dec->parsed())
            return run_decompose(opts, dec_record, dec_spec, dec_levels, dec_channel);
        if (sim->parsed())
            return run_simulate(opts, sim_type, sim_at, sim_inception, sim_rf, sim_cycles, sim_spc,
                                sim_to);
        if (ana->parsed()) return run_analyze(opts, ana_record, ana_spec, ana_truth);
        if (swp->parsed()) return run_sweep_cmd(opts, sweep_catalog, sweep_filters, sweep_write);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

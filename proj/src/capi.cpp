#include "gegfault.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "core/catalog.hpp"
#include "core/filters.hpp"
#include "core/mra.hpp"
#include "core/pipeline.hpp"
#include "core/record_io.hpp"
#include "core/spectral.hpp"

namespace {

thread_local std::string g_last_error;

gf_status fail(gf_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

void copy_string(const std::string& s, char* buf, size_t cap) {
    if (!buf || cap == 0) return;
    const size_t n = std::min(s.size(), cap - 1);
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
}

// Maps core exceptions onto status codes; every entry point funnels
// through here so gf_last_error always carries the diagnostic.
template <typename Fn>
gf_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const gegmra::NoCrossingError& e) {
        return fail(GF_ERR_NOCROSSING, e.what());
    } catch (const gegmra::RecordParseError& e) {
        return fail(GF_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GF_ERR_INVALID, e.what());
    } catch (const std::out_of_range& e) {
        return fail(GF_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GF_ERR_NUMERIC, "out of memory");
    } catch (const std::exception& e) {
        return fail(GF_ERR_NUMERIC, e.what());
    }
}

gegmra::LineModel to_line(const gf_line_params* p) {
    if (!p) return {};
    gegmra::LineModel line;
    line.length_km = p->length_km;
    line.r1_ohm = p->r1_ohm_km;
    line.l1_mh = p->l1_mh_km;
    line.c1_nf = p->c1_nf_km;
    line.r0_ohm = p->r0_ohm_km;
    line.l0_mh = p->l0_mh_km;
    line.c0_nf = p->c0_nf_km;
    line.nominal_kv = p->nominal_kv;
    return line;
}

gegmra::SourceParams to_sources(const gf_source_params* p) {
    if (!p) return {};
    gegmra::SourceParams src;
    src.ze1_pos = {p->ze1_r, p->ze1_x};
    src.ze1_zero = {p->ze1_r0, p->ze1_x0};
    src.ze2_pos = {p->ze2_r, p->ze2_x};
    src.ze2_zero = {p->ze2_r0, p->ze2_x0};
    src.e1_kv = p->e1_kv;
    src.e1_deg = p->e1_deg;
    src.e2_kv = p->e2_kv;
    src.e2_deg = p->e2_deg;
    return src;
}

gegmra::RunConfig to_config(const gf_run_config* p) {
    gegmra::RunConfig cfg;
    if (!p) return cfg;
    cfg.fundamental = p->fundamental_hz;
    cfg.detection_level = p->detection_level;
    cfg.location_level = p->location_level;
    cfg.threshold_multiplier = p->threshold_multiplier;
    cfg.prefault_cycles = p->prefault_cycles;
    cfg.calibration_skip_cycles = p->calibration_skip_cycles;
    cfg.rated_current_a = p->rated_current_a;
    cfg.relative_phase_gate = p->relative_phase_gate;
    return cfg;
}

}  // namespace

struct gf_filter {
    gegmra::FilterPair pair;
};
struct gf_record {
    gegmra::ThreePhaseRecord rec;
};
struct gf_decomp {
    gegmra::MraDecomposition d;
};
struct gf_catalog {
    std::vector<gegmra::FaultScenario> scenarios;
};
struct gf_analysis {
    gegmra::AnalysisResult result;
};
struct gf_sweep {
    gegmra::SweepResult result;
};

extern "C" {

const char* gf_last_error(void) { return g_last_error.c_str(); }

const char* gf_status_name(gf_status status) {
    switch (status) {
        case GF_OK: return "ok";
        case GF_ERR_INVALID: return "invalid argument";
        case GF_ERR_DOMAIN: return "domain error";
        case GF_ERR_PARSE: return "parse error";
        case GF_ERR_IO: return "io error";
        case GF_ERR_NUMERIC: return "numerical error";
        case GF_ERR_NOCROSSING: return "no crossing";
    }
    return "unknown";
}

gf_status gf_filter_create(const char* spec, gf_filter** out) {
    if (!spec || !out) return fail(GF_ERR_INVALID, "spec and out must be non-null");
    return guarded([&] {
        *out = new gf_filter{gegmra::parse_filter_spec(spec)};
        return GF_OK;
    });
}

gf_status gf_filter_create_gegenbauer(int nu, double alpha, gf_filter** out) {
    if (!out) return fail(GF_ERR_INVALID, "out must be non-null");
    return guarded([&] {
        *out = new gf_filter{gegmra::make_gegenbauer_filter({nu, alpha})};
        return GF_OK;
    });
}

void gf_filter_destroy(gf_filter* filter) { delete filter; }

gf_status gf_filter_taps(const gf_filter* filter, size_t* out) {
    if (!filter || !out) return fail(GF_ERR_INVALID, "filter and out must be non-null");
    *out = filter->pair.taps();
    return GF_OK;
}

gf_status gf_filter_coeffs(const gf_filter* filter, double* h, double* g) {
    if (!filter) return fail(GF_ERR_INVALID, "filter must be non-null");
    const auto n = filter->pair.taps();
    if (h) std::memcpy(h, filter->pair.h.data(), n * sizeof(double));
    if (g) std::memcpy(g, filter->pair.g.data(), n * sizeof(double));
    return GF_OK;
}

gf_status gf_filter_tag(const gf_filter* filter, char* buf, size_t cap) {
    if (!filter) return fail(GF_ERR_INVALID, "filter must be non-null");
    copy_string(filter->pair.tag(), buf, cap);
    return GF_OK;
}

gf_status gf_filter_params(const gf_filter* filter, int* is_gegenbauer, int* nu, double* alpha) {
    if (!filter) return fail(GF_ERR_INVALID, "filter must be non-null");
    const bool geg = filter->pair.family == gegmra::FilterFamily::Gegenbauer;
    if (is_gegenbauer) *is_gegenbauer = geg ? 1 : 0;
    if (nu) *nu = filter->pair.params.nu;
    if (alpha) *alpha = filter->pair.params.alpha;
    return GF_OK;
}

gf_status gf_gegenbauer_eval(int n, double alpha, double z, double* out) {
    if (!out) return fail(GF_ERR_INVALID, "out must be non-null");
    return guarded([&] {
        *out = gegmra::eval_gegenbauer(n, alpha, z);
        return GF_OK;
    });
}

gf_status gf_response(const gf_filter* filter, gf_kind kind, size_t grid_size, double* omega,
                      double* magnitude, double* phase, double* group_delay) {
    if (!filter) return fail(GF_ERR_INVALID, "filter must be non-null");
    return guarded([&] {
        const auto& taps =
            kind == GF_SCALING ? filter->pair.h : filter->pair.g;
        const auto resp = gegmra::dtft(taps, grid_size);
        for (size_t i = 0; i < resp.size(); ++i) {
            if (omega) omega[i] = resp.omega[i];
            if (magnitude) magnitude[i] = resp.magnitude[i];
            if (phase) phase[i] = resp.phase_unwrapped[i];
            if (group_delay) group_delay[i] = resp.group_delay[i];
        }
        return GF_OK;
    });
}

gf_status gf_cutoff_hz(const gf_filter* filter, gf_kind kind, double sample_rate, double* out) {
    if (!filter || !out) return fail(GF_ERR_INVALID, "filter and out must be non-null");
    return guarded([&] {
        const auto& taps = kind == GF_SCALING ? filter->pair.h : filter->pair.g;
        const auto resp = gegmra::dtft(taps, 8192);
        const auto side =
            kind == GF_SCALING ? gegmra::BandSide::Lowpass : gegmra::BandSide::Highpass;
        *out = gegmra::cutoff_minus3db(resp, sample_rate, side);
        return GF_OK;
    });
}

gf_status gf_band_edges(const gf_filter* filter, double sample_rate, int levels,
                        double* scaling_hi, double* wavelet_lo, double* wavelet_hi) {
    if (!filter) return fail(GF_ERR_INVALID, "filter must be non-null");
    return guarded([&] {
        const auto table = gegmra::band_table(filter->pair, sample_rate, levels);
        for (int j = 0; j < levels; ++j) {
            if (scaling_hi) scaling_hi[j] = table.levels[j].scaling_hi_hz;
            if (wavelet_lo) wavelet_lo[j] = table.levels[j].wavelet_lo_hz;
            if (wavelet_hi) wavelet_hi[j] = table.levels[j].wavelet_hi_hz;
        }
        return GF_OK;
    });
}

gf_status gf_ideal_band_edges(double sample_rate, int levels, double* scaling_hi,
                              double* wavelet_lo, double* wavelet_hi) {
    return guarded([&] {
        const auto table = gegmra::ideal_band_table(sample_rate, levels);
        for (int j = 0; j < levels; ++j) {
            if (scaling_hi) scaling_hi[j] = table.levels[j].scaling_hi_hz;
            if (wavelet_lo) wavelet_lo[j] = table.levels[j].wavelet_lo_hz;
            if (wavelet_hi) wavelet_hi[j] = table.levels[j].wavelet_hi_hz;
        }
        return GF_OK;
    });
}

gf_status gf_zeros(const gf_filter* filter, gf_kind kind, double* re, double* im, double* radius,
                   size_t* count) {
    if (!filter || !count) return fail(GF_ERR_INVALID, "filter and count must be non-null");
    return guarded([&] {
        const auto& taps = kind == GF_SCALING ? filter->pair.h : filter->pair.g;
        const auto roots = gegmra::zeros_on_unit_circle(taps);
        *count = roots.size();
        for (size_t i = 0; i < roots.size(); ++i) {
            if (re) re[i] = roots[i].z.real();
            if (im) im[i] = roots[i].z.imag();
            if (radius) radius[i] = roots[i].radius;
        }
        return GF_OK;
    });
}

gf_status gf_cascade_length(const gf_filter* filter, int iterations, size_t* out) {
    if (!filter || !out) return fail(GF_ERR_INVALID, "filter and out must be non-null");
    if (iterations < 1 || iterations > 12)
        return fail(GF_ERR_INVALID,
                    "cascade iterations must be in [1, 12] (got " + std::to_string(iterations) + ")");
    const size_t taps = filter->pair.taps();
    *out = ((static_cast<size_t>(1) << iterations) - 1) * (taps - 1) + 1;
    return GF_OK;
}

gf_status gf_cascade(const gf_filter* filter, gf_kind kind, int iterations, double* samples,
                     size_t cap) {
    if (!filter || !samples) return fail(GF_ERR_INVALID, "filter and samples must be non-null");
    return guarded([&] {
        const auto w = gegmra::cascade(
            filter->pair,
            kind == GF_SCALING ? gegmra::FilterKind::Scaling : gegmra::FilterKind::Wavelet,
            iterations);
        if (cap < w.samples.size())
            return fail(GF_ERR_INVALID, "buffer holds " + std::to_string(cap) + " samples, need " +
                                            std::to_string(w.samples.size()));
        std::memcpy(samples, w.samples.data(), w.samples.size() * sizeof(double));
        return GF_OK;
    });
}

gf_status gf_decompose(const double* x, size_t n, const gf_filter* filter, int levels,
                       gf_decomp** out) {
    if (!x || !filter || !out) return fail(GF_ERR_INVALID, "x, filter and out must be non-null");
    return guarded([&] {
        std::vector<double> input(x, x + n);
        *out = new gf_decomp{gegmra::decompose(input, filter->pair, levels)};
        return GF_OK;
    });
}

void gf_decomp_destroy(gf_decomp* decomp) { delete decomp; }

gf_status gf_decomp_levels(const gf_decomp* decomp, int* out) {
    if (!decomp || !out) return fail(GF_ERR_INVALID, "decomp and out must be non-null");
    *out = decomp->d.levels;
    return GF_OK;
}

static gf_status decomp_level_check(const gf_decomp* decomp, int level) {
    if (!decomp) return fail(GF_ERR_INVALID, "decomp must be non-null");
    if (level < 1 || level > decomp->d.levels)
        return fail(GF_ERR_INVALID, "level must be in [1, " + std::to_string(decomp->d.levels) +
                                        "] (got " + std::to_string(level) + ")");
    return GF_OK;
}

gf_status gf_decomp_length(const gf_decomp* decomp, int level, size_t* out) {
    const gf_status st = decomp_level_check(decomp, level);
    if (st != GF_OK) return st;
    if (!out) return fail(GF_ERR_INVALID, "out must be non-null");
    *out = decomp->d.approximations[static_cast<size_t>(level) - 1].size();
    return GF_OK;
}

static gf_status copy_level(const std::vector<double>& src, double* out, size_t cap) {
    if (!out) return fail(GF_ERR_INVALID, "out must be non-null");
    if (cap < src.size())
        return fail(GF_ERR_INVALID, "buffer holds " + std::to_string(cap) + " samples, need " +
                                        std::to_string(src.size()));
    std::memcpy(out, src.data(), src.size() * sizeof(double));
    return GF_OK;
}

gf_status gf_decomp_approx(const gf_decomp* decomp, int level, double* out, size_t cap) {
    const gf_status st = decomp_level_check(decomp, level);
    if (st != GF_OK) return st;
    return copy_level(decomp->d.approximations[static_cast<size_t>(level) - 1], out, cap);
}

gf_status gf_decomp_detail(const gf_decomp* decomp, int level, double* out, size_t cap) {
    const gf_status st = decomp_level_check(decomp, level);
    if (st != GF_OK) return st;
    return copy_level(decomp->d.details[static_cast<size_t>(level) - 1], out, cap);
}

gf_status gf_decomp_delay(const gf_decomp* decomp, int level, double* out) {
    const gf_status st = decomp_level_check(decomp, level);
    if (st != GF_OK) return st;
    if (!out) return fail(GF_ERR_INVALID, "out must be non-null");
    *out = decomp->d.cumulative_delay(level);
    return GF_OK;
}

void gf_line_defaults(gf_line_params* out) {
    if (!out) return;
    const gegmra::LineModel line;
    *out = {line.length_km, line.r1_ohm, line.l1_mh, line.c1_nf,
            line.r0_ohm,    line.l0_mh,  line.c0_nf, line.nominal_kv};
}

void gf_source_defaults(gf_source_params* out) {
    if (!out) return;
    const gegmra::SourceParams src;
    *out = {src.ze1_pos.real(),  src.ze1_pos.imag(), src.ze1_zero.real(), src.ze1_zero.imag(),
            src.ze2_pos.real(),  src.ze2_pos.imag(), src.ze2_zero.real(), src.ze2_zero.imag(),
            src.e1_kv,           src.e1_deg,         src.e2_kv,           src.e2_deg};
}

gf_status gf_simulate(const char* fault_type, double location_fraction, double inception_cycles,
                      double fault_resistance, const gf_line_params* line,
                      const gf_source_params* sources, double duration_cycles,
                      int samples_per_cycle, gf_record** out) {
    if (!fault_type || !out) return fail(GF_ERR_INVALID, "fault_type and out must be non-null");
    return guarded([&] {
        gegmra::FaultScenario scenario;
        scenario.type = gegmra::parse_fault_type(fault_type);
        scenario.location_fraction = location_fraction;
        scenario.inception_cycles = inception_cycles;
        scenario.fault_resistance = fault_resistance;
        scenario.sources = to_sources(sources);
        *out = new gf_record{gegmra::generate_fault_record(scenario, to_line(line),
                                                           duration_cycles, samples_per_cycle)};
        return GF_OK;
    });
}

gf_status gf_record_read(const char* path, gf_record** out) {
    if (!path || !out) return fail(GF_ERR_INVALID, "path and out must be non-null");
    return guarded([&] {
        *out = new gf_record{gegmra::read_record(path)};
        return GF_OK;
    });
}

gf_status gf_record_write(const gf_record* record, const char* path) {
    if (!record || !path) return fail(GF_ERR_INVALID, "record and path must be non-null");
    return guarded([&] {
        gegmra::write_record(record->rec, path);
        return GF_OK;
    });
}

void gf_record_destroy(gf_record* record) { delete record; }

gf_status gf_record_length(const gf_record* record, size_t* out) {
    if (!record || !out) return fail(GF_ERR_INVALID, "record and out must be non-null");
    *out = record->rec.length();
    return GF_OK;
}

gf_status gf_record_sample_rate(const gf_record* record, double* out) {
    if (!record || !out) return fail(GF_ERR_INVALID, "record and out must be non-null");
    *out = record->rec.sample_rate;
    return GF_OK;
}

gf_status gf_record_channel(const gf_record* record, int channel, double* out, size_t cap) {
    if (!record) return fail(GF_ERR_INVALID, "record must be non-null");
    return guarded([&] { return copy_level(record->rec.channel(channel), out, cap); });
}

gf_status gf_record_modal(const gf_record* record, int quantity, int component, double* out,
                          size_t cap) {
    if (!record) return fail(GF_ERR_INVALID, "record must be non-null");
    if (quantity < 0 || quantity > 1)
        return fail(GF_ERR_INVALID, "quantity must be 0 (voltage) or 1 (current)");
    if (component < 0 || component > 2)
        return fail(GF_ERR_INVALID, "component must be 0 (alpha), 1 (beta) or 2 (zero)");
    return guarded([&] {
        const auto modal = gegmra::clarke(record->rec);
        const std::vector<double>* seq = nullptr;
        if (quantity == 0)
            seq = component == 0 ? &modal.v_alpha : component == 1 ? &modal.v_beta : &modal.v_zero;
        else
            seq = component == 0 ? &modal.i_alpha : component == 1 ? &modal.i_beta : &modal.i_zero;
        return copy_level(*seq, out, cap);
    });
}

void gf_run_config_defaults(gf_run_config* out) {
    if (!out) return;
    const gegmra::RunConfig cfg;
    *out = {cfg.fundamental,      cfg.detection_level,         cfg.location_level,
            cfg.threshold_multiplier, cfg.prefault_cycles,     cfg.calibration_skip_cycles,
            cfg.rated_current_a,  cfg.relative_phase_gate};
}

gf_status gf_analyze(const gf_record* record, const gf_filter* filter,
                     const gf_line_params* line, const gf_run_config* config, double truth_km,
                     gf_analysis** out) {
    if (!record || !filter || !out)
        return fail(GF_ERR_INVALID, "record, filter and out must be non-null");
    return guarded([&] {
        *out = new gf_analysis{gegmra::analyze_record(record->rec, filter->pair, to_line(line),
                                                      to_config(config), truth_km)};
        return GF_OK;
    });
}

void gf_analysis_destroy(gf_analysis* analysis) { delete analysis; }

gf_status gf_analysis_detected(const gf_analysis* a, int* out) {
    if (!a || !out) return fail(GF_ERR_INVALID, "analysis and out must be non-null");
    *out = a->result.detection.detected ? 1 : 0;
    return GF_OK;
}

gf_status gf_analysis_inception_index(const gf_analysis* a, size_t* out) {
    if (!a || !out) return fail(GF_ERR_INVALID, "analysis and out must be non-null");
    *out = a->result.detection.inception_index;
    return GF_OK;
}

gf_status gf_analysis_ground(const gf_analysis* a, int* out) {
    if (!a || !out) return fail(GF_ERR_INVALID, "analysis and out must be non-null");
    *out = a->result.detection.ground_involved ? 1 : 0;
    return GF_OK;
}

gf_status gf_analysis_triggering(const gf_analysis* a, int* flags, double* thresholds) {
    if (!a) return fail(GF_ERR_INVALID, "analysis must be non-null");
    for (int c = 0; c < 3; ++c) {
        if (flags) flags[c] = a->result.detection.triggering[c] ? 1 : 0;
        if (thresholds) thresholds[c] = a->result.detection.threshold_used[c];
    }
    return GF_OK;
}

gf_status gf_analysis_fault_type(const gf_analysis* a, char* buf, size_t cap) {
    if (!a) return fail(GF_ERR_INVALID, "analysis must be non-null");
    if (!a->result.detection.detected)
        return fail(GF_ERR_INVALID, "no fault detected; no classified type");
    copy_string(gegmra::fault_type_name(a->result.selection.type), buf, cap);
    return GF_OK;
}

gf_status gf_analysis_window_count(const gf_analysis* a, size_t* out) {
    if (!a || !out) return fail(GF_ERR_INVALID, "analysis and out must be non-null");
    *out = a->result.located ? a->result.report.windows.size() : 0;
    return GF_OK;
}

gf_status gf_analysis_window_length(const gf_analysis* a, size_t* out) {
    if (!a || !out) return fail(GF_ERR_INVALID, "analysis and out must be non-null");
    if (!a->result.located) return fail(GF_ERR_INVALID, "analysis has no location stage");
    *out = static_cast<size_t>(a->result.report.window_length);
    return GF_OK;
}

gf_status gf_analysis_windows(const gf_analysis* a, double* df_km, double* error) {
    if (!a) return fail(GF_ERR_INVALID, "analysis must be non-null");
    if (!a->result.located) return fail(GF_ERR_INVALID, "analysis has no location stage");
    const auto& windows = a->result.report.windows;
    for (size_t i = 0; i < windows.size(); ++i) {
        if (df_km) df_km[i] = windows[i].df_km;
        if (error) error[i] = windows[i].error;
    }
    return GF_OK;
}

gf_status gf_analysis_sixth_window(const gf_analysis* a, size_t* index, double* df_km,
                                   double* error) {
    if (!a) return fail(GF_ERR_INVALID, "analysis must be non-null");
    if (!a->result.located) return fail(GF_ERR_INVALID, "analysis has no location stage");
    if (index) *index = a->result.report.sixth_window_index;
    if (df_km) *df_km = a->result.report.sixth_df_km;
    if (error) *error = a->result.report.sixth_window_error;
    return GF_OK;
}

gf_status gf_analysis_leakage(const gf_analysis* a, double* out) {
    if (!a || !out) return fail(GF_ERR_INVALID, "analysis and out must be non-null");
    *out = a->result.wavelet_gain_at_fundamental;
    return GF_OK;
}

gf_status gf_catalog_default(gf_catalog** out) {
    if (!out) return fail(GF_ERR_INVALID, "out must be non-null");
    return guarded([&] {
        *out = new gf_catalog{gegmra::default_catalog()};
        return GF_OK;
    });
}

gf_status gf_catalog_read(const char* path, gf_catalog** out) {
    if (!path || !out) return fail(GF_ERR_INVALID, "path and out must be non-null");
    return guarded([&] {
        *out = new gf_catalog{gegmra::read_catalog(path)};
        return GF_OK;
    });
}

gf_status gf_catalog_write(const gf_catalog* catalog, const char* path) {
    if (!catalog || !path) return fail(GF_ERR_INVALID, "catalog and path must be non-null");
    return guarded([&] {
        gegmra::write_catalog(catalog->scenarios, path);
        return GF_OK;
    });
}

void gf_catalog_destroy(gf_catalog* catalog) { delete catalog; }

gf_status gf_catalog_size(const gf_catalog* catalog, size_t* out) {
    if (!catalog || !out) return fail(GF_ERR_INVALID, "catalog and out must be non-null");
    *out = catalog->scenarios.size();
    return GF_OK;
}

gf_status gf_catalog_entry(const gf_catalog* catalog, size_t index, char* id_buf, size_t id_cap,
                           char* type_buf, size_t type_cap, double* location_fraction,
                           double* inception_cycles) {
    if (!catalog) return fail(GF_ERR_INVALID, "catalog must be non-null");
    if (index >= catalog->scenarios.size())
        return fail(GF_ERR_INVALID, "catalog index " + std::to_string(index) + " out of range");
    const auto& s = catalog->scenarios[index];
    copy_string(s.display_id(), id_buf, id_cap);
    copy_string(gegmra::fault_type_name(s.type), type_buf, type_cap);
    if (location_fraction) *location_fraction = s.location_fraction;
    if (inception_cycles) *inception_cycles = s.inception_cycles;
    return GF_OK;
}

gf_status gf_sweep_run(const gf_catalog* catalog, const gf_filter* filter,
                       const gf_line_params* line, const gf_run_config* config, gf_sweep** out) {
    if (!catalog || !filter || !out)
        return fail(GF_ERR_INVALID, "catalog, filter and out must be non-null");
    return guarded([&] {
        *out = new gf_sweep{gegmra::run_sweep(catalog->scenarios, filter->pair, to_line(line),
                                              to_config(config))};
        return GF_OK;
    });
}

void gf_sweep_destroy(gf_sweep* sweep) { delete sweep; }

gf_status gf_sweep_size(const gf_sweep* sweep, size_t* out) {
    if (!sweep || !out) return fail(GF_ERR_INVALID, "sweep and out must be non-null");
    *out = sweep->result.cases.size();
    return GF_OK;
}

gf_status gf_sweep_case(const gf_sweep* sweep, size_t index, gf_case_result* out) {
    if (!sweep || !out) return fail(GF_ERR_INVALID, "sweep and out must be non-null");
    if (index >= sweep->result.cases.size())
        return fail(GF_ERR_INVALID, "sweep index " + std::to_string(index) + " out of range");
    const auto& c = sweep->result.cases[index];
    gf_case_result r{};
    copy_string(c.id, r.id, sizeof(r.id));
    copy_string(gegmra::fault_type_compact(c.truth_type), r.truth_type, sizeof(r.truth_type));
    copy_string(c.detected ? gegmra::fault_type_compact(c.classified_type) : "",
                r.classified_type, sizeof(r.classified_type));
    r.truth_km = c.truth_km;
    r.detected = c.detected ? 1 : 0;
    r.detect_within_cycle = c.detect_within_cycle ? 1 : 0;
    r.ground_correct = c.ground_correct ? 1 : 0;
    r.classification_correct = c.classification_correct ? 1 : 0;
    r.sixth_df_km = c.sixth_df_km;
    r.sixth_error = c.sixth_error;
    *out = r;
    return GF_OK;
}

gf_status gf_sweep_class_stats(const gf_sweep* sweep, int cls, gf_class_stats* out) {
    if (!sweep || !out) return fail(GF_ERR_INVALID, "sweep and out must be non-null");
    const gegmra::ClassStats* stats = nullptr;
    switch (cls) {
        case 0: stats = &sweep->result.single_phase_earth; break;
        case 1: stats = &sweep->result.three_phase; break;
        case 2: stats = &sweep->result.two_phase; break;
        default: return fail(GF_ERR_INVALID, "class must be 0, 1 or 2 (got " + std::to_string(cls) + ")");
    }
    *out = {stats->cases, stats->detected, stats->detect_within_cycle, stats->ground_correct,
            stats->max_abs_sixth_error};
    return GF_OK;
}

gf_status gf_sweep_rates(const gf_sweep* sweep, double* detection_rate, double* ground_accuracy,
                         double* leakage_at_fundamental) {
    if (!sweep) return fail(GF_ERR_INVALID, "sweep must be non-null");
    if (detection_rate) *detection_rate = sweep->result.detection_rate;
    if (ground_accuracy) *ground_accuracy = sweep->result.ground_accuracy;
    if (leakage_at_fundamental) *leakage_at_fundamental = sweep->result.wavelet_gain_at_fundamental;
    return GF_OK;
}

}  // extern "C"

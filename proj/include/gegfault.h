/* gegfault: Gegenbauer filter-bank signal analysis and transmission-line
 * fault location, exposed as a C API around the C++ core.
 *
 * Conventions:
 *   - every function returns a gf_status (GF_OK on success);
 *   - objects are opaque handles created/destroyed through the API;
 *   - on failure, gf_last_error() returns a one-line description that
 *     includes the offending value (thread-local storage);
 *   - callers own output buffers; query sizes first where needed.
 */
#ifndef GEGFAULT_H
#define GEGFAULT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
    GF_OK = 0,
    GF_ERR_INVALID = 1,  /* bad argument or precondition violation */
    GF_ERR_DOMAIN = 2,   /* value outside the supported domain */
    GF_ERR_PARSE = 3,    /* malformed file or spec string */
    GF_ERR_IO = 4,       /* filesystem failure */
    GF_ERR_NUMERIC = 5,  /* numerical failure (residuals, singular network) */
    GF_ERR_NOCROSSING = 6
} gf_status;

typedef enum gf_kind { GF_SCALING = 0, GF_WAVELET = 1 } gf_kind;

/* Record channel indices. */
enum { GF_VA = 0, GF_VB = 1, GF_VC = 2, GF_IA = 3, GF_IB = 4, GF_IC = 5 };

/* Modal component indices. */
enum { GF_ALPHA = 0, GF_BETA = 1, GF_ZERO = 2 };

typedef struct gf_filter gf_filter;
typedef struct gf_record gf_record;
typedef struct gf_decomp gf_decomp;
typedef struct gf_catalog gf_catalog;
typedef struct gf_analysis gf_analysis;
typedef struct gf_sweep gf_sweep;

const char* gf_last_error(void);
const char* gf_status_name(gf_status status);

/* ---- filter design ---------------------------------------------------- */

/* spec: "geg:<nu>:<alpha>", "daub4" or "haar". */
gf_status gf_filter_create(const char* spec, gf_filter** out);
gf_status gf_filter_create_gegenbauer(int nu, double alpha, gf_filter** out);
void gf_filter_destroy(gf_filter* filter);

gf_status gf_filter_taps(const gf_filter* filter, size_t* out);
/* h and g each hold gf_filter_taps() doubles; either may be NULL. */
gf_status gf_filter_coeffs(const gf_filter* filter, double* h, double* g);
gf_status gf_filter_tag(const gf_filter* filter, char* buf, size_t cap);
/* is_gegenbauer is 0 for daub4; nu/alpha are meaningful only when 1. */
gf_status gf_filter_params(const gf_filter* filter, int* is_gegenbauer, int* nu, double* alpha);

gf_status gf_gegenbauer_eval(int n, double alpha, double z, double* out);

/* ---- spectral characterization ----------------------------------------- */

/* All arrays hold grid_size entries; any may be NULL. Magnitude is
 * normalized to unit gain (taps / sqrt(2)). */
gf_status gf_response(const gf_filter* filter, gf_kind kind, size_t grid_size, double* omega,
                      double* magnitude, double* phase, double* group_delay);

gf_status gf_cutoff_hz(const gf_filter* filter, gf_kind kind, double sample_rate, double* out);

/* Per level j = 1..levels: scaling band [0, scaling_hi], wavelet band
 * [wavelet_lo, wavelet_hi]. Pass levels <= 16. */
gf_status gf_band_edges(const gf_filter* filter, double sample_rate, int levels,
                        double* scaling_hi, double* wavelet_lo, double* wavelet_hi);
gf_status gf_ideal_band_edges(double sample_rate, int levels, double* scaling_hi,
                              double* wavelet_lo, double* wavelet_hi);

/* count = taps - 1 roots; re/im/radius may be NULL. */
gf_status gf_zeros(const gf_filter* filter, gf_kind kind, double* re, double* im, double* radius,
                   size_t* count);

gf_status gf_cascade_length(const gf_filter* filter, int iterations, size_t* out);
gf_status gf_cascade(const gf_filter* filter, gf_kind kind, int iterations, double* samples,
                     size_t cap);

/* ---- multiresolution decomposition -------------------------------------- */

gf_status gf_decompose(const double* x, size_t n, const gf_filter* filter, int levels,
                       gf_decomp** out);
void gf_decomp_destroy(gf_decomp* decomp);
gf_status gf_decomp_levels(const gf_decomp* decomp, int* out);
gf_status gf_decomp_length(const gf_decomp* decomp, int level, size_t* out);
gf_status gf_decomp_approx(const gf_decomp* decomp, int level, double* out, size_t cap);
gf_status gf_decomp_detail(const gf_decomp* decomp, int level, double* out, size_t cap);
/* Cumulative analysis delay at the given level, in input-rate samples. */
gf_status gf_decomp_delay(const gf_decomp* decomp, int level, double* out);

/* ---- power-system records ----------------------------------------------- */

typedef struct gf_line_params {
    double length_km;
    double r1_ohm_km, l1_mh_km, c1_nf_km;
    double r0_ohm_km, l0_mh_km, c0_nf_km;
    double nominal_kv;
} gf_line_params;

typedef struct gf_source_params {
    double ze1_r, ze1_x;   /* terminal A positive-sequence Thevenin, ohm */
    double ze1_r0, ze1_x0; /* terminal A zero-sequence */
    double ze2_r, ze2_x;
    double ze2_r0, ze2_x0;
    double e1_kv, e1_deg; /* EMF magnitude (line-to-line kV) and angle */
    double e2_kv, e2_deg;
} gf_source_params;

void gf_line_defaults(gf_line_params* out);
void gf_source_defaults(gf_source_params* out);

/* fault_type: "A-g", "Ag", "AB", "AB-g", "ABC", ... Inception <= 0 yields
 * the faulted steady state; inception beyond the duration yields a healthy
 * record. line/sources may be NULL for defaults. */
gf_status gf_simulate(const char* fault_type, double location_fraction, double inception_cycles,
                      double fault_resistance, const gf_line_params* line,
                      const gf_source_params* sources, double duration_cycles,
                      int samples_per_cycle, gf_record** out);

gf_status gf_record_read(const char* path, gf_record** out);
gf_status gf_record_write(const gf_record* record, const char* path);
void gf_record_destroy(gf_record* record);
gf_status gf_record_length(const gf_record* record, size_t* out);
gf_status gf_record_sample_rate(const gf_record* record, double* out);
gf_status gf_record_channel(const gf_record* record, int channel, double* out, size_t cap);
/* Clarke modal component of the voltage (quantity 0) or current (1) set. */
gf_status gf_record_modal(const gf_record* record, int quantity, int component, double* out,
                          size_t cap);

/* ---- fault analysis pipeline -------------------------------------------- */

typedef struct gf_run_config {
    double fundamental_hz;
    int detection_level;
    int location_level;
    double threshold_multiplier;
    int prefault_cycles;
    int calibration_skip_cycles;
    double rated_current_a;
    double relative_phase_gate;
} gf_run_config;

void gf_run_config_defaults(gf_run_config* out);

/* truth_km may be NaN when the true distance is unknown; errors are then
 * NaN as well. */
gf_status gf_analyze(const gf_record* record, const gf_filter* filter,
                     const gf_line_params* line, const gf_run_config* config, double truth_km,
                     gf_analysis** out);
void gf_analysis_destroy(gf_analysis* analysis);

gf_status gf_analysis_detected(const gf_analysis* a, int* out);
gf_status gf_analysis_inception_index(const gf_analysis* a, size_t* out);
gf_status gf_analysis_ground(const gf_analysis* a, int* out);
/* Per-component trigger flags and effective thresholds (3 entries each). */
gf_status gf_analysis_triggering(const gf_analysis* a, int* flags, double* thresholds);
gf_status gf_analysis_fault_type(const gf_analysis* a, char* buf, size_t cap);
gf_status gf_analysis_window_count(const gf_analysis* a, size_t* out);
gf_status gf_analysis_window_length(const gf_analysis* a, size_t* out);
/* df_km/error are NaN for indeterminate windows; arrays may be NULL. */
gf_status gf_analysis_windows(const gf_analysis* a, double* df_km, double* error);
gf_status gf_analysis_sixth_window(const gf_analysis* a, size_t* index, double* df_km,
                                   double* error);
gf_status gf_analysis_leakage(const gf_analysis* a, double* out);

/* ---- scenario catalogs and sweeps ---------------------------------------- */

gf_status gf_catalog_default(gf_catalog** out);
gf_status gf_catalog_read(const char* path, gf_catalog** out);
gf_status gf_catalog_write(const gf_catalog* catalog, const char* path);
void gf_catalog_destroy(gf_catalog* catalog);
gf_status gf_catalog_size(const gf_catalog* catalog, size_t* out);
gf_status gf_catalog_entry(const gf_catalog* catalog, size_t index, char* id_buf, size_t id_cap,
                           char* type_buf, size_t type_cap, double* location_fraction,
                           double* inception_cycles);

typedef struct gf_case_result {
    char id[16];
    char truth_type[8];
    char classified_type[8];
    double truth_km;
    int detected;
    int detect_within_cycle;
    int ground_correct;
    int classification_correct;
    double sixth_df_km;
    double sixth_error;
} gf_case_result;

typedef struct gf_class_stats {
    int cases;
    int detected;
    int detect_within_cycle;
    int ground_correct;
    double max_abs_sixth_error;
} gf_class_stats;

gf_status gf_sweep_run(const gf_catalog* catalog, const gf_filter* filter,
                       const gf_line_params* line, const gf_run_config* config, gf_sweep** out);
void gf_sweep_destroy(gf_sweep* sweep);
gf_status gf_sweep_size(const gf_sweep* sweep, size_t* out);
gf_status gf_sweep_case(const gf_sweep* sweep, size_t index, gf_case_result* out);
/* cls: 0 = single-phase-earth, 1 = three-phase, 2 = two-phase (+earth). */
gf_status gf_sweep_class_stats(const gf_sweep* sweep, int cls, gf_class_stats* out);
gf_status gf_sweep_rates(const gf_sweep* sweep, double* detection_rate, double* ground_accuracy,
                         double* leakage_at_fundamental);

#ifdef __cplusplus
}
#endif

#endif /* GEGFAULT_H */

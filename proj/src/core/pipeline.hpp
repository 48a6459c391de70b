#pragma once

#include <array>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "core/filters.hpp"
#include "core/powersys.hpp"

namespace gegmra {

struct RunConfig {
    double fundamental = 60.0;
    int detection_level = 1;
    int location_level = 3;
    double threshold_multiplier = 5.0;
    int prefault_cycles = 2;
    /// Cycles skipped before the calibration window so the start-of-record
    /// extension transient does not inflate thresholds.
    int calibration_skip_cycles = 1;
    double rated_current_a = 1000.0;
    /// A phase joins the faulted set only when its post-inception detail
    /// peak reaches this fraction of the strongest phase's peak.
    double relative_phase_gate = 0.25;
};

/// Level-1 detail sequences of the six modal channels.
/// Index order for components: 0 = alpha, 1 = beta, 2 = zero.
struct ModalDetails {
    std::array<std::vector<double>, 3> v;
    std::array<std::vector<double>, 3> i;
    double samples_per_cycle = 64.0;  // at the detail rate
    std::size_t guard = 0;            // leading samples shaped by the boundary extension
};

struct Threshold {
    double value = 0.0;
    bool floored = false;
};

struct ModalThresholds {
    std::array<Threshold, 3> v;
    std::array<Threshold, 3> i;
};

struct DetectionResult {
    bool detected = false;
    std::size_t inception_index = 0;  // at the detail (level-1) rate
    bool ground_involved = false;
    std::array<bool, 3> triggering{false, false, false};
    std::array<double, 3> threshold_used{0.0, 0.0, 0.0};
    ModalThresholds thresholds;
};

struct PhaseSelection {
    std::array<bool, 3> phases{false, false, false};
    bool ground = false;
    FaultType type = FaultType::ABC;
    bool low_confidence = false;
};

struct PhasorSeries {
    int window_length = 16;
    std::vector<std::complex<double>> values;  // indexed by window start position
};

struct RecordPhasors {
    PhasorSeries va, vb, vc, ia, ib, ic;
};

struct WindowEstimate {
    std::size_t window = 0;
    double df_km = 0.0;
    double error = 0.0;
    bool indeterminate = false;
};

struct LocationReport {
    std::string loop;
    double d_lt_km = 0.0;
    double d_fl_km = 0.0;  // NaN when the true distance is unknown
    double x1_ohm_per_km = 0.0;
    int window_length = 16;
    std::vector<WindowEstimate> windows;
    std::size_t sixth_window_index = 0;
    double sixth_df_km = 0.0;
    double sixth_window_error = 0.0;
};

ModalDetails modal_details(const ModalRecord& modal, const FilterPair& pair,
                                  double samples_per_cycle, int level = 1);

/// Per-channel threshold: multiplier x the detail peak over the calibration
/// window, escalated to a relative floor (and flagged) when degenerate.
ModalThresholds calibrate_thresholds(const ModalDetails& details, int prefault_cycles,
                                     double multiplier, int skip_cycles = 1);

/// Earliest post-guard index where an alpha or beta channel exceeds its
/// threshold; the zero component within one cycle of that index sets the
/// ground flag. No detection is a valid outcome.
DetectionResult detect(const ModalDetails& details, const ModalThresholds& thresholds);

/// Faulted phases from per-phase level-1 current detail energy (RMS) in the
/// cycle after inception, gated absolutely and relative to the strongest
/// phase.
PhaseSelection select_fault_phases(const std::array<std::vector<double>, 3>& phase_details,
                                   const std::array<Threshold, 3>& phase_thresholds,
                                   const DetectionResult& detection, double samples_per_cycle,
                                   double relative_gate);

/// One-cycle DFT fundamental phasor per window start, scaled to peak
/// amplitude, with a window-invariant (global-index) phase reference.
PhasorSeries sliding_phasor(const std::vector<double>& x, int window_length);

/// Apparent-impedance distance per window. Ground loops use V_p / (I_p +
/// k0 * 3 I0) with k0 = (z0 - z1) / (3 z1); phase loops use the faulted
/// pair's voltage and current differences. Windows whose loop current is
/// below 1e-6 x rated are reported indeterminate.
LocationReport locate(const RecordPhasors& phasors, FaultType type, const LineModel& line,
                      double truth_km, double rated_current_a);

struct AnalysisResult {
    std::string filter_tag;
    DetectionResult detection;
    PhaseSelection selection;
    bool located = false;
    LocationReport report;
    /// Normalized wavelet magnitude at the fundamental, the per-filter
    /// steady-state leakage that drives threshold calibration.
    double wavelet_gain_at_fundamental = 0.0;
};

AnalysisResult analyze_record(const ThreePhaseRecord& record, const FilterPair& pair,
                              const LineModel& line, const RunConfig& config,
                              double truth_km = std::numeric_limits<double>::quiet_NaN());

struct SweepCase {
    std::string id;
    FaultType truth_type = FaultType::ABC;
    double truth_km = 0.0;
    double inception_cycles = 0.0;
    bool detected = false;
    bool detect_within_cycle = false;
    bool ground_correct = false;
    bool classification_correct = false;
    FaultType classified_type = FaultType::ABC;
    double sixth_df_km = 0.0;
    double sixth_error = 0.0;
    std::string failure;
};

struct ClassStats {
    int cases = 0;
    int detected = 0;
    int detect_within_cycle = 0;
    int ground_correct = 0;
    double max_abs_sixth_error = 0.0;
};

struct SweepResult {
    std::string filter_tag;
    std::vector<SweepCase> cases;
    ClassStats single_phase_earth;
    ClassStats three_phase;
    ClassStats two_phase;
    double detection_rate = 0.0;
    double ground_accuracy = 0.0;
    double wavelet_gain_at_fundamental = 0.0;
};

SweepResult run_sweep(const std::vector<FaultScenario>& catalog, const FilterPair& pair,
                      const LineModel& line, const RunConfig& config);

/// The 10 x 3 x 3 scenario catalog (type x location x inception), ordered
/// by location then type then inception, ids like "Ag25_1".
std::vector<FaultScenario> default_catalog(const SourceParams& sources = {});

}  // namespace gegmra

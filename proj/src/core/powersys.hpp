#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace gegmra {

using Complex = std::complex<double>;

struct ThreePhaseRecord {
    double sample_rate = 7680.0;
    double fundamental = 60.0;
    std::vector<double> va, vb, vc, ia, ib, ic;
    std::string meta;

    std::size_t length() const { return va.size(); }
    double samples_per_cycle() const { return sample_rate / fundamental; }
    const std::vector<double>& channel(int idx) const;
};

struct ModalRecord {
    std::vector<double> v_alpha, v_beta, v_zero;
    std::vector<double> i_alpha, i_beta, i_zero;
};

/// Series line parameters per km; capacitances are carried for completeness
/// but the lumped phasor model neglects shunt branches.
struct LineModel {
    double length_km = 205.6;
    double r1_ohm = 0.0246;
    double l1_mh = 0.8539;
    double c1_nf = 13.66;
    double r0_ohm = 0.3818;
    double l0_mh = 3.732;
    double c0_nf = 8.61;
    double nominal_kv = 500.0;

    Complex z1_per_km(double omega) const { return {r1_ohm, omega * l1_mh * 1e-3}; }
    Complex z0_per_km(double omega) const { return {r0_ohm, omega * l0_mh * 1e-3}; }
    /// Positive-sequence reactance per km, ohm/km.
    double x1_per_km(double fundamental) const;
    void validate() const;
};

enum class FaultType { Ag, Bg, Cg, AB, AC, BC, ABg, ACg, BCg, ABC };

/// Accepts both hyphenated ("A-g") and compact ("Ag", "ag") spellings.
FaultType parse_fault_type(const std::string& text);
std::string fault_type_name(FaultType type);      // "A-g"
std::string fault_type_compact(FaultType type);   // "Ag"
bool fault_involves_ground(FaultType type);
std::array<bool, 3> fault_phases(FaultType type);

/// Thevenin equivalents at both terminals. EMF magnitudes are given as
/// line-to-line kV; the solver works with phase-to-ground peak phasors.
/// The default 3-degree transmission angle keeps the pre-fault load the
/// detection calibration sees light relative to fault-current changes.
struct SourceParams {
    Complex ze1_pos{1.0, 10.0};
    Complex ze1_zero{3.0, 30.0};
    Complex ze2_pos{1.0, 10.0};
    Complex ze2_zero{3.0, 30.0};
    double e1_kv = 500.0;
    double e1_deg = 0.0;
    double e2_kv = 500.0;
    double e2_deg = -3.0;
};

struct FaultScenario {
    FaultType type = FaultType::ABC;
    double location_fraction = 0.5;
    /// Cycles after record start. Values <= 0 produce the faulted steady
    /// state over the whole record (no inception transient); values beyond
    /// the record duration produce a healthy record.
    double inception_cycles = 4.0;
    double fault_resistance = 0.0;
    SourceParams sources;
    std::string id;

    std::string display_id() const;
};

struct TerminalPhasors {
    Complex va, vb, vc, ia, ib, ic;
};

/// Steady-state phasor solution of the two-source network, peak-value
/// phasors referenced so the prefault phase-A terminal voltage has angle 0.
struct FaultSolution {
    TerminalPhasors pre;
    TerminalPhasors post;
    std::array<Complex, 3> fault_point_v;   // phase voltages at the fault, true labels
    std::array<Complex, 3> fault_current;   // total phase currents into the fault
    double dc_time_constant_s = 0.0;
};

ModalRecord clarke(const ThreePhaseRecord& record);

FaultSolution solve_fault_network(const FaultScenario& scenario, const LineModel& line,
                                  double fundamental = 60.0);

ThreePhaseRecord generate_fault_record(const FaultScenario& scenario, const LineModel& line,
                                       double duration_cycles = 8.0, int samples_per_cycle = 128,
                                       double fundamental = 60.0);

}  // namespace gegmra

#include "core/powersys.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gegmra {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kAlpha = std::polar(1.0, 2.0 * kPi / 3.0);  // 1 at +120 degrees

Complex parallel(Complex a, Complex b) { return a * b / (a + b); }

void check_denominator(Complex z, const std::string& what, const std::string& id) {
    if (std::abs(z) < 1e-12)
        throw std::runtime_error("singular network (" + what + ") for scenario " + id);
}

struct SequenceSet {
    Complex zero, pos, neg;
};

std::array<Complex, 3> compose_phases(const SequenceSet& s) {
    const Complex a = kAlpha;
    const Complex a2 = kAlpha * kAlpha;
    return {s.zero + s.pos + s.neg, s.zero + a2 * s.pos + a * s.neg,
            s.zero + a * s.pos + a2 * s.neg};
}

// Label rotation r: rotated phase i corresponds to true phase (r+i) mod 3.
int rotation_for(FaultType type) {
    switch (type) {
        case FaultType::Ag:
        case FaultType::BC:
        case FaultType::BCg:
        case FaultType::ABC:
            return 0;
        case FaultType::Bg:
        case FaultType::AC:
        case FaultType::ACg:
            return 1;
        case FaultType::Cg:
        case FaultType::AB:
        case FaultType::ABg:
            return 2;
    }
    return 0;
}

std::array<Complex, 3> unrotate(const std::array<Complex, 3>& rotated, int r) {
    std::array<Complex, 3> out;
    for (int i = 0; i < 3; ++i) out[(r + i) % 3] = rotated[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace

const std::vector<double>& ThreePhaseRecord::channel(int idx) const {
    switch (idx) {
        case 0: return va;
        case 1: return vb;
        case 2: return vc;
        case 3: return ia;
        case 4: return ib;
        case 5: return ic;
        default: throw std::out_of_range("channel index must be in [0, 5]");
    }
}

double LineModel::x1_per_km(double fundamental) const {
    return 2.0 * kPi * fundamental * l1_mh * 1e-3;
}

void LineModel::validate() const {
    if (length_km <= 0.0 || r1_ohm <= 0.0 || l1_mh <= 0.0 || c1_nf <= 0.0 || r0_ohm <= 0.0 ||
        l0_mh <= 0.0 || c0_nf <= 0.0 || nominal_kv <= 0.0)
        throw std::invalid_argument("line parameters must all be positive");
}

FaultType parse_fault_type(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '-') t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (t == "AG") return FaultType::Ag;
    if (t == "BG") return FaultType::Bg;
    if (t == "CG") return FaultType::Cg;
    if (t == "AB") return FaultType::AB;
    if (t == "AC" || t == "CA") return FaultType::AC;
    if (t == "BC" || t == "CB") return FaultType::BC;
    if (t == "ABG") return FaultType::ABg;
    if (t == "ACG" || t == "CAG") return FaultType::ACg;
    if (t == "BCG" || t == "CBG") return FaultType::BCg;
    if (t == "ABC" || t == "3PH") return FaultType::ABC;
    throw std::invalid_argument("unknown fault type '" + text + "'");
}

std::string fault_type_name(FaultType type) {
    switch (type) {
        case FaultType::Ag: return "A-g";
        case FaultType::Bg: return "B-g";
        case FaultType::Cg: return "C-g";
        case FaultType::AB: return "AB";
        case FaultType::AC: return "AC";
        case FaultType::BC: return "BC";
        case FaultType::ABg: return "AB-g";
        case FaultType::ACg: return "AC-g";
        case FaultType::BCg: return "BC-g";
        case FaultType::ABC: return "ABC";
    }
    return "?";
}

std::string fault_type_compact(FaultType type) {
    std::string name = fault_type_name(type);
    std::string out;
    for (char c : name)
        if (c != '-') out += c;
    return out;
}

bool fault_involves_ground(FaultType type) {
    switch (type) {
        case FaultType::Ag:
        case FaultType::Bg:
        case FaultType::Cg:
        case FaultType::ABg:
        case FaultType::ACg:
        case FaultType::BCg:
            return true;
        default:
            return false;
    }
}

std::array<bool, 3> fault_phases(FaultType type) {
    switch (type) {
        case FaultType::Ag: return {true, false, false};
        case FaultType::Bg: return {false, true, false};
        case FaultType::Cg: return {false, false, true};
        case FaultType::AB:
        case FaultType::ABg: return {true, true, false};
        case FaultType::AC:
        case FaultType::ACg: return {true, false, true};
        case FaultType::BC:
        case FaultType::BCg: return {false, true, true};
        case FaultType::ABC: return {true, true, true};
    }
    return {false, false, false};
}

std::string FaultScenario::display_id() const {
    if (!id.empty()) return id;
    return fault_type_compact(type) + std::to_string(static_cast<int>(std::lround(location_fraction * 100.0)));
}

ModalRecord clarke(const ThreePhaseRecord& record) {
    const std::size_t n = record.length();
    if (record.vb.size() != n || record.vc.size() != n || record.ia.size() != n ||
        record.ib.size() != n || record.ic.size() != n)
        throw std::invalid_argument("record channels must all have equal length");

    ModalRecord m;
    auto transform = [n](const std::vector<double>& a, const std::vector<double>& b,
                         const std::vector<double>& c, std::vector<double>& alpha,
                         std::vector<double>& beta, std::vector<double>& zero) {
        const double s3 = std::sqrt(3.0);
        alpha.resize(n);
        beta.resize(n);
        zero.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            alpha[i] = (2.0 * a[i] - b[i] - c[i]) / 3.0;
            beta[i] = s3 * (b[i] - c[i]) / 3.0;
            zero[i] = (a[i] + b[i] + c[i]) / 3.0;
        }
    };
    transform(record.va, record.vb, record.vc, m.v_alpha, m.v_beta, m.v_zero);
    transform(record.ia, record.ib, record.ic, m.i_alpha, m.i_beta, m.i_zero);
    return m;
}

FaultSolution solve_fault_network(const FaultScenario& scenario, const LineModel& line,
                                  double fundamental) {
    line.validate();
    if (scenario.location_fraction <= 0.0 || scenario.location_fraction >= 1.0)
        throw std::invalid_argument("fault location fraction must be in (0, 1) (got " +
                                    std::to_string(scenario.location_fraction) + ")");

    const std::string id = scenario.display_id();
    const double w = 2.0 * kPi * fundamental;
    const double d = scenario.location_fraction;
    const SourceParams& src = scenario.sources;

    const Complex zl1 = line.z1_per_km(w) * line.length_km;
    const Complex zl0 = line.z0_per_km(w) * line.length_km;

    // Phase-to-ground peak EMF phasors from line-to-line kV magnitudes.
    const double emf_scale = 1e3 * std::sqrt(2.0 / 3.0);
    Complex e1 = std::polar(src.e1_kv * emf_scale, src.e1_deg * kPi / 180.0);
    Complex e2 = std::polar(src.e2_kv * emf_scale, src.e2_deg * kPi / 180.0);

    // Prefault balanced positive-sequence loop.
    const Complex z_loop_total = src.ze1_pos + zl1 + src.ze2_pos;
    check_denominator(z_loop_total, "source-to-source loop", id);
    Complex i_load = (e1 - e2) / z_loop_total;
    Complex va_pre = e1 - src.ze1_pos * i_load;
    check_denominator(va_pre, "prefault terminal voltage", id);

    // Reference rotation: prefault phase-A terminal voltage at angle 0, so
    // the waveform peaks at integer cycles and crosses zero at +1/4 cycle.
    const Complex rot = std::conj(va_pre) / std::abs(va_pre);
    e1 *= rot;
    e2 *= rot;
    i_load *= rot;
    va_pre *= rot;

    const Complex vf_pre = e1 - (src.ze1_pos + d * zl1) * i_load;

    const int r = rotation_for(scenario.type);
    const Complex alpha_pow[3] = {Complex{1.0, 0.0}, kAlpha, kAlpha * kAlpha};
    const Complex rot_pos = alpha_pow[(3 - r) % 3];  // alpha^{-r}

    const Complex vf = vf_pre * rot_pos;
    const Complex e1r = e1 * rot_pos;

    // Sequence Thevenin impedances seen from the fault point.
    const Complex z1l = src.ze1_pos + d * zl1;
    const Complex z1r = src.ze2_pos + (1.0 - d) * zl1;
    const Complex z0l = src.ze1_zero + d * zl0;
    const Complex z0r = src.ze2_zero + (1.0 - d) * zl0;
    check_denominator(z1l + z1r, "positive-sequence network", id);
    check_denominator(z0l + z0r, "zero-sequence network", id);
    const Complex z1th = parallel(z1l, z1r);
    const Complex z2th = z1th;
    const Complex z0th = parallel(z0l, z0r);
    const Complex zf{scenario.fault_resistance, 0.0};

    // Fault-point sequence currents for the normal-form connection.
    SequenceSet i_fault{0.0, 0.0, 0.0};
    switch (scenario.type) {
        case FaultType::Ag:
        case FaultType::Bg:
        case FaultType::Cg: {
            const Complex denom = z1th + z2th + z0th + 3.0 * zf;
            check_denominator(denom, "single-phase fault loop", id);
            i_fault.pos = vf / denom;
            i_fault.neg = i_fault.pos;
            i_fault.zero = i_fault.pos;
            break;
        }
        case FaultType::AB:
        case FaultType::AC:
        case FaultType::BC: {
            const Complex denom = z1th + z2th + zf;
            check_denominator(denom, "phase-phase fault loop", id);
            i_fault.pos = vf / denom;
            i_fault.neg = -i_fault.pos;
            break;
        }
        case FaultType::ABg:
        case FaultType::ACg:
        case FaultType::BCg: {
            const Complex zg = z0th + 3.0 * zf;
            check_denominator(z2th + zg, "double-phase-ground branch", id);
            const Complex denom = z1th + parallel(z2th, zg);
            check_denominator(denom, "double-phase-ground loop", id);
            i_fault.pos = vf / denom;
            i_fault.neg = -i_fault.pos * zg / (z2th + zg);
            i_fault.zero = -i_fault.pos * z2th / (z2th + zg);
            break;
        }
        case FaultType::ABC: {
            const Complex denom = z1th + zf;
            check_denominator(denom, "three-phase fault loop", id);
            i_fault.pos = vf / denom;
            break;
        }
    }

    // Sequence voltages at the fault point.
    SequenceSet v_fault;
    v_fault.pos = vf - z1th * i_fault.pos;
    v_fault.neg = -z2th * i_fault.neg;
    v_fault.zero = -z0th * i_fault.zero;

    // Terminal-A side currents (A toward the fault) and terminal voltages.
    SequenceSet i_a;
    i_a.pos = (e1r - v_fault.pos) / z1l;
    i_a.neg = (Complex{0.0, 0.0} - v_fault.neg) / z1l;
    i_a.zero = (Complex{0.0, 0.0} - v_fault.zero) / z0l;

    SequenceSet v_a;
    v_a.pos = v_fault.pos + d * zl1 * i_a.pos;
    v_a.neg = v_fault.neg + d * zl1 * i_a.neg;
    v_a.zero = v_fault.zero + d * zl0 * i_a.zero;

    const auto v_term = unrotate(compose_phases(v_a), r);
    const auto i_term = unrotate(compose_phases(i_a), r);
    const auto v_fpoint = unrotate(compose_phases(v_fault), r);
    const auto i_fpoint = unrotate(compose_phases(i_fault), r);

    FaultSolution sol;
    sol.pre.va = va_pre;
    sol.pre.vb = kAlpha * kAlpha * va_pre;
    sol.pre.vc = kAlpha * va_pre;
    sol.pre.ia = i_load;
    sol.pre.ib = kAlpha * kAlpha * i_load;
    sol.pre.ic = kAlpha * i_load;
    sol.post.va = v_term[0];
    sol.post.vb = v_term[1];
    sol.post.vc = v_term[2];
    sol.post.ia = i_term[0];
    sol.post.ib = i_term[1];
    sol.post.ic = i_term[2];
    sol.fault_point_v = v_fpoint;
    sol.fault_current = i_fpoint;

    const Complex z_dc = fault_involves_ground(scenario.type)
                             ? (2.0 * z1l + z0l) / 3.0
                             : z1l;
    sol.dc_time_constant_s = z_dc.imag() / (w * std::max(z_dc.real(), 1e-9));
    return sol;
}

ThreePhaseRecord generate_fault_record(const FaultScenario& scenario, const LineModel& line,
                                       double duration_cycles, int samples_per_cycle,
                                       double fundamental) {
    if (samples_per_cycle < 4)
        throw std::invalid_argument("samples per cycle must be >= 4 (got " +
                                    std::to_string(samples_per_cycle) + ")");
    if (duration_cycles <= 0.0)
        throw std::invalid_argument("duration must be positive (got " +
                                    std::to_string(duration_cycles) + ")");

    const FaultSolution sol = solve_fault_network(scenario, line, fundamental);
    const double w = 2.0 * kPi * fundamental;
    const double fs = fundamental * samples_per_cycle;
    const auto n = static_cast<std::size_t>(std::lround(duration_cycles * samples_per_cycle));
    const double tf = scenario.inception_cycles / fundamental;
    const bool steady_fault = scenario.inception_cycles <= 0.0;

    ThreePhaseRecord rec;
    rec.sample_rate = fs;
    rec.fundamental = fundamental;
    rec.meta = scenario.display_id();
    for (auto* ch : {&rec.va, &rec.vb, &rec.vc, &rec.ia, &rec.ib, &rec.ic}) ch->resize(n);

    const Complex v_pre[3] = {sol.pre.va, sol.pre.vb, sol.pre.vc};
    const Complex i_pre[3] = {sol.pre.ia, sol.pre.ib, sol.pre.ic};
    const Complex v_post[3] = {sol.post.va, sol.post.vb, sol.post.vc};
    const Complex i_post[3] = {sol.post.ia, sol.post.ib, sol.post.ic};

    // Decaying DC on currents only, sized for continuity at inception.
    double k_dc[3] = {0.0, 0.0, 0.0};
    if (!steady_fault) {
        const Complex e_tf = std::polar(1.0, w * tf);
        for (int p = 0; p < 3; ++p)
            k_dc[p] = (i_pre[p] * e_tf).real() - (i_post[p] * e_tf).real();
    }
    const double tau = sol.dc_time_constant_s;

    std::vector<double>* v_ch[3] = {&rec.va, &rec.vb, &rec.vc};
    std::vector<double>* i_ch[3] = {&rec.ia, &rec.ib, &rec.ic};
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / fs;
        const bool faulted = steady_fault || t >= tf;
        const Complex e = std::polar(1.0, w * t);
        for (int p = 0; p < 3; ++p) {
            if (!faulted) {
                (*v_ch[p])[k] = (v_pre[p] * e).real();
                (*i_ch[p])[k] = (i_pre[p] * e).real();
            } else {
                const double dc = steady_fault ? 0.0 : k_dc[p] * std::exp(-(t - tf) / tau);
                (*v_ch[p])[k] = (v_post[p] * e).real();
                (*i_ch[p])[k] = (i_post[p] * e).real() + dc;
            }
        }
    }
    return rec;
}

}  // namespace gegmra

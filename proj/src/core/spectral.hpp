#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "core/filters.hpp"

namespace gegmra {

enum class FilterKind { Scaling, Wavelet };
enum class BandSide { Lowpass, Highpass };

/// Sampled transfer function on [0, pi], normalized to unit gain at the
/// band center (taps are divided by sqrt(2), so a scaling filter has
/// |H(0)| = 1 and its wavelet mate |G(pi)| = 1).
struct FrequencyResponse {
    std::vector<double> omega;            // radians/sample, 0..pi inclusive
    std::vector<std::complex<double>> values;
    std::vector<double> magnitude;
    std::vector<double> phase_unwrapped;  // radians
    std::vector<double> group_delay;      // samples, central differences
    std::vector<double> coeffs;           // normalized taps, for refinement

    std::size_t size() const { return omega.size(); }
    /// Exact normalized transfer value at an arbitrary frequency.
    std::complex<double> at(double w) const;
};

struct NoCrossingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BandRow {
    int level = 0;
    double samples_per_cycle = 0.0;  // at 60 Hz fundamental
    double scaling_hi_hz = 0.0;      // scaling band is [0, scaling_hi_hz]
    double wavelet_lo_hz = 0.0;      // wavelet band is [wavelet_lo_hz, wavelet_hi_hz]
    double wavelet_hi_hz = 0.0;
};

struct BandTable {
    double sample_rate = 0.0;
    std::string filter_tag;
    std::vector<BandRow> levels;
};

struct PolynomialRoot {
    std::complex<double> z;
    double radius = 0.0;
};

struct CascadeWaveform {
    FilterKind kind = FilterKind::Scaling;
    int iterations = 0;
    std::vector<double> samples;
};

FrequencyResponse dtft(const std::vector<double>& taps, std::size_t grid_size);

/// Frequency of the first |H| = 1/sqrt(2) crossing, scanned from the band
/// edge (omega = 0 for lowpass, omega = pi for highpass) and refined by
/// bisection to +-0.01 Hz. Throws NoCrossingError when no crossing exists.
double cutoff_minus3db(const FrequencyResponse& response, double sample_rate, BandSide side);

/// Measured level-1 band edges halved per level.
BandTable band_table(const FilterPair& pair, double sample_rate, int max_level,
                     double fundamental = 60.0);

/// Exact half-band splits fs/2^(j+1), the idealized orthogonal reference.
BandTable ideal_band_table(double sample_rate, int max_level, double fundamental = 60.0);

/// All roots of the transfer polynomial sum_k taps[k] z^(L-1-k), with radii.
/// Throws std::runtime_error when a root residual exceeds 1e-6.
std::vector<PolynomialRoot> zeros_on_unit_circle(const std::vector<double>& taps);

/// Iterated upsample-by-2 and convolve refinement, scaled by sqrt(2) per
/// step; output length (2^i - 1)*(L-1) + 1 after i iterations.
CascadeWaveform cascade(const FilterPair& pair, FilterKind kind, int iterations);

}  // namespace gegmra

#pragma once

#include <string>
#include <vector>

namespace gegmra {

/// Family parameters for a Gegenbauer-derived analysis filter.
/// nu must be a positive odd integer; alpha strictly positive.
struct GegenbauerParams {
    int nu = 3;
    double alpha = 1.0;
};

enum class FilterFamily { Gegenbauer, Daub4 };

/// Alpha values above this overflow double-precision gamma products even
/// through the log-gamma route used here; construction rejects them.
inline constexpr double kMaxAlpha = 170.0;

/// An analysis filter pair: low-pass (scaling) taps h and high-pass
/// (wavelet) taps g, both of the same even length.
struct FilterPair {
    FilterFamily family = FilterFamily::Gegenbauer;
    GegenbauerParams params;          // meaningful for Gegenbauer only
    std::vector<double> h;
    std::vector<double> g;

    std::size_t taps() const { return h.size(); }

    /// Canonical spec string, e.g. "geg:3:12" or "daub4".
    std::string spec() const;
    /// Compact display tag, e.g. "geg3a12" or "daub4".
    std::string tag() const;
};

/// Gegenbauer polynomial C_n^(alpha)(z) by the three-term recurrence.
/// Requires alpha > -1/2 and |z| <= 1.
double eval_gegenbauer(int n, double alpha, double z);

/// Low-pass filter taps for the given family parameters, normalized so the
/// taps sum to sqrt(2). Evaluated through log-gamma differences so large
/// alpha stays finite.
std::vector<double> gegenbauer_scaling_coeffs(const GegenbauerParams& params);

/// High-pass taps from low-pass taps by the causal pi-shift rule
/// g[k] = (-1)^k h[L-1-k]. Requires even length.
std::vector<double> wavelet_from_scaling(const std::vector<double>& h);

FilterPair make_gegenbauer_filter(const GegenbauerParams& params);
FilterPair make_daub4_filter();

/// Parses "geg:<nu>:<alpha>", "daub4" or "haar" (alias for geg:1:1).
/// Throws std::invalid_argument naming the offending field on bad input.
FilterPair parse_filter_spec(const std::string& spec);

}  // namespace gegmra

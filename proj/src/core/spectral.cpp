#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gegmra {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> eval_taps(const std::vector<double>& taps, double w) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < taps.size(); ++k)
        acc += taps[k] * std::polar(1.0, -w * static_cast<double>(k));
    return acc;
}

}  // namespace

std::complex<double> FrequencyResponse::at(double w) const {
    return eval_taps(coeffs, w);
}

FrequencyResponse dtft(const std::vector<double>& taps, std::size_t grid_size) {
    if (taps.empty()) throw std::invalid_argument("filter taps must be non-empty");
    if (grid_size < 64)
        throw std::invalid_argument("grid size must be >= 64 (got " + std::to_string(grid_size) + ")");

    FrequencyResponse r;
    const double norm = 1.0 / std::sqrt(2.0);
    r.coeffs.resize(taps.size());
    for (std::size_t k = 0; k < taps.size(); ++k) r.coeffs[k] = taps[k] * norm;

    const std::size_t n = grid_size;
    r.omega.resize(n);
    r.values.resize(n);
    r.magnitude.resize(n);
    r.phase_unwrapped.resize(n);
    r.group_delay.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double w = kPi * static_cast<double>(i) / static_cast<double>(n - 1);
        r.omega[i] = w;
        r.values[i] = eval_taps(r.coeffs, w);
        r.magnitude[i] = std::abs(r.values[i]);
    }

    double prev = std::arg(r.values[0]);
    r.phase_unwrapped[0] = prev;
    for (std::size_t i = 1; i < n; ++i) {
        double p = std::arg(r.values[i]);
        double d = p - prev;
        while (d > kPi) d -= 2.0 * kPi;
        while (d < -kPi) d += 2.0 * kPi;
        r.phase_unwrapped[i] = r.phase_unwrapped[i - 1] + d;
        prev = p;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0)
            r.group_delay[i] = -(r.phase_unwrapped[1] - r.phase_unwrapped[0]) /
                               (r.omega[1] - r.omega[0]);
        else if (i == n - 1)
            r.group_delay[i] = -(r.phase_unwrapped[i] - r.phase_unwrapped[i - 1]) /
                               (r.omega[i] - r.omega[i - 1]);
        else
            r.group_delay[i] = -(r.phase_unwrapped[i + 1] - r.phase_unwrapped[i - 1]) /
                               (r.omega[i + 1] - r.omega[i - 1]);
    }
    return r;
}

double cutoff_minus3db(const FrequencyResponse& response, double sample_rate, BandSide side) {
    if (sample_rate <= 0.0)
        throw std::invalid_argument("sample rate must be positive (got " +
                                    std::to_string(sample_rate) + ")");
    const double target = 1.0 / std::sqrt(2.0);
    const std::size_t n = response.size();

    auto mag = [&](double w) { return std::abs(response.at(w)); };

    // Bracket the first crossing scanning away from the band edge, then
    // bisect on the exact transfer function.
    double lo = 0.0, hi = 0.0;
    bool found = false;
    if (side == BandSide::Lowpass) {
        for (std::size_t i = 1; i < n; ++i) {
            if (response.magnitude[i - 1] >= target && response.magnitude[i] < target) {
                lo = response.omega[i - 1];
                hi = response.omega[i];
                found = true;
                break;
            }
        }
    } else {
        for (std::size_t i = n - 1; i > 0; --i) {
            if (response.magnitude[i] >= target && response.magnitude[i - 1] < target) {
                lo = response.omega[i - 1];
                hi = response.omega[i];
                found = true;
                break;
            }
        }
    }
    if (!found) throw NoCrossingError("magnitude response never crosses 1/sqrt(2)");

    // |H| >= target at the band-edge side of the bracket in both cases:
    // lowpass has the passband at lo, highpass at hi.
    for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool above = mag(mid) >= target;
        if (side == BandSide::Lowpass) {
            (above ? lo : hi) = mid;
        } else {
            (above ? hi : lo) = mid;
        }
        if ((hi - lo) * sample_rate / (2.0 * kPi) < 1e-3) break;
    }
    return 0.5 * (lo + hi) * sample_rate / (2.0 * kPi);
}

BandTable band_table(const FilterPair& pair, double sample_rate, int max_level,
                     double fundamental) {
    if (max_level < 1 || max_level > 16)
        throw std::invalid_argument("decomposition level must be in [1, 16] (got " +
                                    std::to_string(max_level) + ")");
    const auto resp_h = dtft(pair.h, 8192);
    const auto resp_g = dtft(pair.g, 8192);
    const double fc1 = cutoff_minus3db(resp_h, sample_rate, BandSide::Lowpass);
    const double fw1 = cutoff_minus3db(resp_g, sample_rate, BandSide::Highpass);

    BandTable table;
    table.sample_rate = sample_rate;
    table.filter_tag = pair.tag();
    for (int j = 1; j <= max_level; ++j) {
        BandRow row;
        row.level = j;
        const double scale = std::pow(2.0, j - 1);
        row.samples_per_cycle = sample_rate / fundamental / (2.0 * scale);
        row.scaling_hi_hz = fc1 / scale;
        row.wavelet_lo_hz = fw1 / scale;
        row.wavelet_hi_hz = sample_rate / std::pow(2.0, j);
        table.levels.push_back(row);
    }
    return table;
}

BandTable ideal_band_table(double sample_rate, int max_level, double fundamental) {
    if (max_level < 1 || max_level > 16)
        throw std::invalid_argument("decomposition level must be in [1, 16] (got " +
                                    std::to_string(max_level) + ")");
    BandTable table;
    table.sample_rate = sample_rate;
    table.filter_tag = "ideal";
    for (int j = 1; j <= max_level; ++j) {
        BandRow row;
        row.level = j;
        row.samples_per_cycle = sample_rate / fundamental / std::pow(2.0, j);
        row.scaling_hi_hz = sample_rate / std::pow(2.0, j + 1);
        row.wavelet_lo_hz = row.scaling_hi_hz;
        row.wavelet_hi_hz = sample_rate / std::pow(2.0, j);
        table.levels.push_back(row);
    }
    return table;
}

std::vector<PolynomialRoot> zeros_on_unit_circle(const std::vector<double>& taps) {
    if (taps.size() < 2)
        throw std::invalid_argument("transfer polynomial degree must be >= 1");

    // Normalize coefficients of p(z) = sum taps[k] z^(L-1-k); c[0] is the
    // leading coefficient.
    std::vector<std::complex<double>> c(taps.begin(), taps.end());
    double scale = 0.0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    for (auto& v : c) v /= scale;

    const std::size_t deg = c.size() - 1;
    auto poly = [&](std::complex<double> z) {
        std::complex<double> acc = c[0];
        for (std::size_t k = 1; k <= deg; ++k) acc = acc * z + c[k];
        return acc;
    };
    auto dpoly = [&](std::complex<double> z) {
        std::complex<double> acc = c[0] * static_cast<double>(deg);
        for (std::size_t k = 1; k < deg; ++k)
            acc = acc * z + c[k] * static_cast<double>(deg - k);
        return acc;
    };

    // Durand-Kerner with a Newton polish per root.
    std::vector<std::complex<double>> roots(deg);
    const std::complex<double> seed{0.4, 0.9};
    roots[0] = seed;
    for (std::size_t i = 1; i < deg; ++i) roots[i] = roots[i - 1] * seed;

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            std::complex<double> denom = c[0];
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const std::complex<double> delta = poly(roots[i]) / denom;
            roots[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    for (auto& z : roots) {
        for (int it = 0; it < 4; ++it) {
            const auto d = dpoly(z);
            if (std::abs(d) < 1e-300) break;
            z -= poly(z) / d;
        }
    }

    std::vector<PolynomialRoot> out;
    out.reserve(deg);
    for (const auto& z : roots) {
        if (std::abs(poly(z)) > 1e-6)
            throw std::runtime_error("root finding failed: residual " +
                                     std::to_string(std::abs(poly(z))) + " exceeds 1e-6");
        out.push_back({z, std::abs(z)});
    }
    std::sort(out.begin(), out.end(), [](const PolynomialRoot& a, const PolynomialRoot& b) {
        return std::arg(a.z) < std::arg(b.z);
    });
    return out;
}

CascadeWaveform cascade(const FilterPair& pair, FilterKind kind, int iterations) {
    if (iterations < 1 || iterations > 12)
        throw std::invalid_argument("cascade iterations must be in [1, 12] (got " +
                                    std::to_string(iterations) + ")");
    const double s2 = std::sqrt(2.0);

    // phi_(i) = sqrt(2) * upsample2(phi_(i-1)) (*) h, starting from a unit
    // impulse; the final step uses g for the wavelet waveform.
    std::vector<double> current{1.0};
    for (int i = 1; i <= iterations; ++i) {
        const bool last = (i == iterations);
        const std::vector<double>& taps =
            (last && kind == FilterKind::Wavelet) ? pair.g : pair.h;
        std::vector<double> up(current.size() * 2 - 1, 0.0);
        for (std::size_t k = 0; k < current.size(); ++k) up[2 * k] = current[k];
        std::vector<double> next(up.size() + taps.size() - 1, 0.0);
        for (std::size_t a = 0; a < up.size(); ++a)
            for (std::size_t b = 0; b < taps.size(); ++b) next[a + b] += s2 * up[a] * taps[b];
        current = std::move(next);
    }

    CascadeWaveform w;
    w.kind = kind;
    w.iterations = iterations;
    w.samples = std::move(current);
    return w;
}

}  // namespace gegmra

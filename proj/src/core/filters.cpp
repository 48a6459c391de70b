#include "core/filters.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gegmra {

namespace {

std::string format_alpha(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", alpha);
    return buf;
}

}  // namespace

std::string FilterPair::spec() const {
    if (family == FilterFamily::Daub4) return "daub4";
    return "geg:" + std::to_string(params.nu) + ":" + format_alpha(params.alpha);
}

std::string FilterPair::tag() const {
    if (family == FilterFamily::Daub4) return "daub4";
    return "geg" + std::to_string(params.nu) + "a" + format_alpha(params.alpha);
}

double eval_gegenbauer(int n, double alpha, double z) {
    if (n < 0) throw std::invalid_argument("polynomial order must be >= 0 (got " + std::to_string(n) + ")");
    if (alpha <= -0.5)
        throw std::invalid_argument("alpha must be > -1/2 (got " + format_alpha(alpha) + ")");
    if (std::abs(z) > 1.0)
        throw std::invalid_argument("argument z must lie in [-1, 1] (got " + std::to_string(z) + ")");

    if (n == 0) return 1.0;
    const double c1 = 2.0 * alpha * z;
    if (n == 1) return c1;
    const double c2 = 2.0 * alpha * (alpha + 1.0) * z * z - alpha;
    if (n == 2) return c2;

    double prev = c1;
    double curr = c2;
    for (int k = 3; k <= n; ++k) {
        const double next =
            (2.0 * (alpha + k - 1.0) * z * curr - (2.0 * alpha + k - 2.0) * prev) / k;
        prev = curr;
        curr = next;
    }
    return curr;
}

std::vector<double> gegenbauer_scaling_coeffs(const GegenbauerParams& params) {
    const int nu = params.nu;
    const double alpha = params.alpha;
    if (nu < 1 || nu % 2 == 0)
        throw std::invalid_argument("nu must be odd and >= 1 (got " + std::to_string(nu) + ")");
    if (alpha <= 0.0)
        throw std::invalid_argument("alpha must be > 0 (got " + format_alpha(alpha) + ")");
    if (alpha > kMaxAlpha)
        throw std::out_of_range("alpha must be <= " + format_alpha(kMaxAlpha) +
                                " to keep gamma evaluation finite (got " + format_alpha(alpha) + ")");

    // C_nu(1) = Gamma(2a+nu) / (nu! Gamma(2a)); kept in log form alongside
    // the per-tap gamma ratio so only the final difference is exponentiated.
    const double log_cnu1 =
        std::lgamma(2.0 * alpha + nu) - std::lgamma(nu + 1.0) - std::lgamma(2.0 * alpha);

    std::vector<double> h(static_cast<std::size_t>(nu) + 1);
    const double sqrt2 = std::sqrt(2.0);
    for (int k = 0; k <= nu; ++k) {
        const double log_term = std::lgamma(alpha + k) + std::lgamma(alpha + nu - k) -
                                std::lgamma(k + 1.0) - std::lgamma(nu - k + 1.0) -
                                2.0 * std::lgamma(alpha) - log_cnu1;
        h[static_cast<std::size_t>(k)] = sqrt2 * std::exp(log_term);
    }
    // Enforce the symmetry exactly; the two log routes can differ in the
    // last ulp for k and nu-k.
    for (int k = 0; k <= nu / 2; ++k) {
        const double avg = 0.5 * (h[k] + h[nu - k]);
        h[k] = avg;
        h[static_cast<std::size_t>(nu) - k] = avg;
    }
    // Pin the sqrt(2) tap sum; log-gamma rounding drifts it for extreme
    // alpha. The alternating sum stays exactly zero under the symmetry.
    double sum = 0.0;
    for (double v : h) sum += v;
    const double correction = sqrt2 / sum;
    for (double& v : h) v *= correction;
    return h;
}

std::vector<double> wavelet_from_scaling(const std::vector<double>& h) {
    const std::size_t len = h.size();
    if (len < 2 || len % 2 != 0)
        throw std::invalid_argument("scaling filter length must be even and >= 2 (got " +
                                    std::to_string(len) + ")");
    // Pi-shift of the low-pass response, re-indexed to causal support:
    // g[k] = (-1)^k h[L-1-k]. For even-symmetric h this is odd-symmetric
    // (type IV) for every odd order and mirrors the magnitude response,
    // |G(w)| = |H(pi - w)|.
    std::vector<double> g(len);
    for (std::size_t k = 0; k < len; ++k)
        g[k] = (k % 2 == 0 ? 1.0 : -1.0) * h[len - 1 - k];
    return g;
}

FilterPair make_gegenbauer_filter(const GegenbauerParams& params) {
    FilterPair pair;
    pair.family = FilterFamily::Gegenbauer;
    pair.params = params;
    pair.h = gegenbauer_scaling_coeffs(params);
    pair.g = wavelet_from_scaling(pair.h);
    return pair;
}

FilterPair make_daub4_filter() {
    FilterPair pair;
    pair.family = FilterFamily::Daub4;
    pair.params = {3, 0.0};
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    pair.h = {(1.0 + s3) / (4.0 * s2), (3.0 + s3) / (4.0 * s2),
              (3.0 - s3) / (4.0 * s2), (1.0 - s3) / (4.0 * s2)};
    pair.g = wavelet_from_scaling(pair.h);
    return pair;
}

FilterPair parse_filter_spec(const std::string& spec) {
    if (spec == "daub4") return make_daub4_filter();
    if (spec == "haar") return make_gegenbauer_filter({1, 1.0});

    const std::string prefix = "geg:";
    if (spec.rfind(prefix, 0) != 0)
        throw std::invalid_argument("unknown filter spec '" + spec +
                                    "' (expected geg:<nu>:<alpha>, daub4 or haar)");
    const std::size_t sep = spec.find(':', prefix.size());
    if (sep == std::string::npos)
        throw std::invalid_argument("filter spec '" + spec + "' is missing the alpha field");

    const std::string nu_text = spec.substr(prefix.size(), sep - prefix.size());
    const std::string alpha_text = spec.substr(sep + 1);

    int nu = 0;
    try {
        std::size_t used = 0;
        nu = std::stoi(nu_text, &used);
        if (used != nu_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("nu must be an integer (got '" + nu_text + "')");
    }

    const std::size_t dot = alpha_text.find('.');
    if (dot != std::string::npos && alpha_text.size() - dot - 1 > 6)
        throw std::invalid_argument("alpha supports at most 6 fractional digits (got '" +
                                    alpha_text + "')");
    double alpha = 0.0;
    try {
        std::size_t used = 0;
        alpha = std::stod(alpha_text, &used);
        if (used != alpha_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("alpha must be a decimal number (got '" + alpha_text + "')");
    }

    return make_gegenbauer_filter({nu, alpha});
}

}  // namespace gegmra

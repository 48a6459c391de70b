#include "core/mra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gegmra {

namespace {

// Half-sample symmetric extension: x[-1] = x[0], x[-2] = x[1], ...
double extended(const std::vector<double>& x, std::ptrdiff_t idx) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    if (idx < 0) idx = -idx - 1;
    if (idx >= n) idx = 2 * n - 1 - idx;
    return x[static_cast<std::size_t>(idx)];
}

}  // namespace

double MraDecomposition::effective_rate(double sample_rate, int level) const {
    return sample_rate / std::pow(2.0, level);
}

double MraDecomposition::cumulative_delay(int level) const {
    return stage_delay * (std::pow(2.0, level) - 1.0);
}

std::pair<std::vector<double>, std::vector<double>> analyze_one_level(
    const std::vector<double>& x, const FilterPair& pair) {
    const std::size_t taps = pair.taps();
    if (x.size() < taps)
        throw std::invalid_argument("input length " + std::to_string(x.size()) +
                                    " is shorter than the filter (" + std::to_string(taps) + ")");

    const std::size_t out_len = (x.size() + 1) / 2;
    std::vector<double> a(out_len, 0.0);
    std::vector<double> d(out_len, 0.0);
    for (std::size_t n = 0; n < out_len; ++n) {
        double acc_a = 0.0;
        double acc_d = 0.0;
        for (std::size_t k = 0; k < taps; ++k) {
            const double v = extended(x, static_cast<std::ptrdiff_t>(2 * n) -
                                             static_cast<std::ptrdiff_t>(k));
            acc_a += pair.h[k] * v;
            acc_d += pair.g[k] * v;
        }
        a[n] = acc_a;
        d[n] = acc_d;
    }
    return {std::move(a), std::move(d)};
}

MraDecomposition decompose(const std::vector<double>& x, const FilterPair& pair, int levels) {
    if (levels < 1)
        throw std::invalid_argument("decomposition level must be >= 1 (got " +
                                    std::to_string(levels) + ")");
    if (x.size() >> levels == 0)
        throw std::invalid_argument("decomposition level " + std::to_string(levels) +
                                    " too large for input of length " + std::to_string(x.size()));

    MraDecomposition out;
    out.levels = levels;
    out.source_length = x.size();
    out.stage_delay = (static_cast<double>(pair.taps()) - 1.0) / 2.0;
    out.approximations.reserve(static_cast<std::size_t>(levels));
    out.details.reserve(static_cast<std::size_t>(levels));

    const std::vector<double>* current = &x;
    for (int j = 1; j <= levels; ++j) {
        auto [a, d] = analyze_one_level(*current, pair);
        out.approximations.push_back(std::move(a));
        out.details.push_back(std::move(d));
        current = &out.approximations.back();
    }
    return out;
}

}  // namespace gegmra

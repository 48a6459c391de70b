#pragma once

#include <utility>
#include <vector>

#include "core/filters.hpp"

namespace gegmra {

/// Multi-level analysis output. approximations[j-1] and details[j-1] hold
/// level j; the half-sample symmetric extension makes each level
/// ceil(previous/2) long.
struct MraDecomposition {
    int levels = 0;
    std::size_t source_length = 0;
    double stage_delay = 0.0;  // (taps-1)/2 samples per stage, at that stage's rate
    std::vector<std::vector<double>> approximations;
    std::vector<std::vector<double>> details;

    double effective_rate(double sample_rate, int level) const;
    /// Cumulative analysis delay at level j, in input-rate samples.
    double cumulative_delay(int level) const;
};

/// One analysis stage: a[n] = sum_k h[k] x[2n-k], d[n] = sum_k g[k] x[2n-k],
/// with x extended by half-sample reflection at the boundaries.
std::pair<std::vector<double>, std::vector<double>> analyze_one_level(
    const std::vector<double>& x, const FilterPair& pair);

MraDecomposition decompose(const std::vector<double>& x, const FilterPair& pair, int levels);

}  // namespace gegmra

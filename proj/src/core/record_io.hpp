#pragma once

#include <stdexcept>
#include <string>

#include "core/powersys.hpp"

namespace gegmra {

struct RecordParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a waveform record CSV with header t_s,va,vb,vc,ia,ib,ic.
/// Requires a uniform time step and at least two fundamental cycles;
/// the sample rate is inferred from the time column.
ThreePhaseRecord read_record(const std::string& path, double fundamental = 60.0);

/// Writes the record in the same format, full double precision.
void write_record(const ThreePhaseRecord& record, const std::string& path);

}  // namespace gegmra

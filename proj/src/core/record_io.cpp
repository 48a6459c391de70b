#include "core/record_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace gegmra {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

ThreePhaseRecord read_record(const std::string& path, double fundamental) {
    std::ifstream in(path);
    if (!in) throw RecordParseError("cannot open record file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw RecordParseError("record file '" + path + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> expected = {"t_s", "va", "vb", "vc", "ia", "ib", "ic"};
    const auto header = split_csv(line);
    if (header.size() != expected.size())
        throw RecordParseError("record header has " + std::to_string(header.size()) +
                               " columns, expected 7 (t_s,va,vb,vc,ia,ib,ic)");
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (header[i] != expected[i])
            throw RecordParseError("unexpected record column '" + header[i] + "' at position " +
                                   std::to_string(i + 1) + ", expected '" + expected[i] + "'");

    std::vector<double> t;
    ThreePhaseRecord rec;
    rec.fundamental = fundamental;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 7)
            throw RecordParseError("malformed row at line " + std::to_string(line_no) + ": got " +
                                   std::to_string(fields.size()) + " fields, expected 7");
        double vals[7];
        for (std::size_t i = 0; i < 7; ++i) {
            try {
                std::size_t used = 0;
                vals[i] = std::stod(fields[i], &used);
                if (used != fields[i].size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw RecordParseError("malformed row at line " + std::to_string(line_no) +
                                       ": field '" + fields[i] + "' is not a number");
            }
        }
        t.push_back(vals[0]);
        rec.va.push_back(vals[1]);
        rec.vb.push_back(vals[2]);
        rec.vc.push_back(vals[3]);
        rec.ia.push_back(vals[4]);
        rec.ib.push_back(vals[5]);
        rec.ic.push_back(vals[6]);
    }

    if (t.size() < 2) throw RecordParseError("record '" + path + "' has fewer than 2 samples");
    const double dt = t[1] - t[0];
    if (dt <= 0.0)
        throw RecordParseError("time column must be strictly increasing (step " +
                               std::to_string(dt) + ")");
    for (std::size_t i = 2; i < t.size(); ++i) {
        const double step = t[i] - t[i - 1];
        if (std::abs(step - dt) > 1e-6 * dt)
            throw RecordParseError("non-uniform time step at line " + std::to_string(i + 2) +
                                   ": " + std::to_string(step) + " vs " + std::to_string(dt));
    }
    rec.sample_rate = 1.0 / dt;

    const double cycles = static_cast<double>(t.size()) / (rec.sample_rate / fundamental);
    if (cycles < 2.0)
        throw RecordParseError("record spans " + std::to_string(cycles) +
                               " cycles, at least 2 are required");
    return rec;
}

void write_record(const ThreePhaseRecord& record, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw RecordParseError("cannot open '" + path + "' for writing");
    out << "t_s,va,vb,vc,ia,ib,ic\n";
    char buf[512];
    for (std::size_t k = 0; k < record.length(); ++k) {
        const double t = static_cast<double>(k) / record.sample_rate;
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t,
                      record.va[k], record.vb[k], record.vc[k], record.ia[k], record.ib[k],
                      record.ic[k]);
        out << buf;
    }
    if (!out) throw RecordParseError("write to '" + path + "' failed");
}

}  // namespace gegmra

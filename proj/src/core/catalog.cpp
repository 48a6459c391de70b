#include "core/catalog.hpp"

#include <fstream>
#include <json.hpp>

namespace gegmra {

namespace {

using nlohmann::json;

SourceParams sources_from_json(const json& j, const SourceParams& base) {
    SourceParams src = base;
    auto cplx = [&](const char* key, Complex fallback) {
        if (!j.contains(key)) return fallback;
        const auto& v = j.at(key);
        return Complex{v.at(0).get<double>(), v.at(1).get<double>()};
    };
    src.ze1_pos = cplx("ze1_pos", src.ze1_pos);
    src.ze1_zero = cplx("ze1_zero", src.ze1_zero);
    src.ze2_pos = cplx("ze2_pos", src.ze2_pos);
    src.ze2_zero = cplx("ze2_zero", src.ze2_zero);
    src.e1_kv = j.value("e1_kv", src.e1_kv);
    src.e1_deg = j.value("e1_deg", src.e1_deg);
    src.e2_kv = j.value("e2_kv", src.e2_kv);
    src.e2_deg = j.value("e2_deg", src.e2_deg);
    return src;
}

json sources_to_json(const SourceParams& src) {
    return json{{"ze1_pos", {src.ze1_pos.real(), src.ze1_pos.imag()}},
                {"ze1_zero", {src.ze1_zero.real(), src.ze1_zero.imag()}},
                {"ze2_pos", {src.ze2_pos.real(), src.ze2_pos.imag()}},
                {"ze2_zero", {src.ze2_zero.real(), src.ze2_zero.imag()}},
                {"e1_kv", src.e1_kv},
                {"e1_deg", src.e1_deg},
                {"e2_kv", src.e2_kv},
                {"e2_deg", src.e2_deg}};
}

}  // namespace

std::vector<FaultScenario> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file '" + path + "'");

    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw std::runtime_error("catalog '" + path + "' is not valid JSON: " + e.what());
    }

    SourceParams base;
    if (doc.contains("sources")) base = sources_from_json(doc.at("sources"), base);

    if (!doc.contains("scenarios") || !doc.at("scenarios").is_array())
        throw std::runtime_error("catalog '" + path + "' is missing a 'scenarios' array");

    std::vector<FaultScenario> catalog;
    for (const auto& entry : doc.at("scenarios")) {
        FaultScenario s;
        s.type = parse_fault_type(entry.at("type").get<std::string>());
        s.location_fraction = entry.at("location_fraction").get<double>();
        s.inception_cycles = entry.at("inception_cycles").get<double>();
        s.fault_resistance = entry.value("fault_resistance_ohm", 0.0);
        s.id = entry.value("id", std::string{});
        s.sources = entry.contains("sources") ? sources_from_json(entry.at("sources"), base) : base;
        catalog.push_back(std::move(s));
    }
    if (catalog.empty()) throw std::runtime_error("catalog '" + path + "' has no scenarios");
    return catalog;
}

void write_catalog(const std::vector<FaultScenario>& catalog, const std::string& path) {
    json scenarios = json::array();
    for (const FaultScenario& s : catalog) {
        scenarios.push_back({{"id", s.display_id()},
                             {"type", fault_type_name(s.type)},
                             {"location_fraction", s.location_fraction},
                             {"inception_cycles", s.inception_cycles},
                             {"fault_resistance_ohm", s.fault_resistance}});
    }
    json doc{{"scenarios", scenarios}};
    if (!catalog.empty()) doc["sources"] = sources_to_json(catalog.front().sources);

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
}

}  // namespace gegmra

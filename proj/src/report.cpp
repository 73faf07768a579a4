#include "skhodge/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace skhodge {

void RunReport::add_scalar(const std::string& name, const std::string& value) {
    scalars.emplace_back(name, value);
}

void RunReport::add_ideal(const std::string& name, int level, const std::vector<Poly>& gens) {
    IdealResult r;
    r.name = name;
    r.level = level;
    for (const auto& g : gens) r.generators.push_back(g.str());
    ideals.push_back(std::move(r));
}

std::string fnv1a_hex(const std::string& text) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << h;
    return os.str();
}

std::string serialize_text(const RunReport& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    if (!r.input_path.empty()) os << "input: " << r.input_path << " (" << r.input_hash << ")\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    for (const auto& [k, v] : r.scalars) os << k << " = " << v << "\n";
    for (const auto& id : r.ideals) {
        os << id.name << " = (";
        for (size_t i = 0; i < id.generators.size(); ++i) {
            if (i) os << ", ";
            os << id.generators[i];
        }
        os << ")\n";
    }
    return os.str();
}

std::string serialize_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = RunReport::schema_version;
    j["command"] = r.command;
    j["input"] = {{"path", r.input_path}, {"hash", r.input_hash}};
    j["order"] = r.order;
    j["budget"] = {{"max_degree", r.budget.max_degree}, {"max_pairs", r.budget.max_pairs}};
    j["timings"] = {{"seconds", r.seconds}};
    j["warnings"] = r.warnings;
    nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.scalars) scalars[k] = v;
    j["results"]["scalars"] = scalars;
    nlohmann::ordered_json ideals = nlohmann::ordered_json::array();
    for (const auto& id : r.ideals) {
        ideals.push_back({{"name", id.name},
                          {"level", id.level},
                          {"generators", id.generators},
                          {"order", r.order}});
    }
    j["results"]["ideals"] = ideals;
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (j.at("schema_version").get<int>() != RunReport::schema_version)
        throw std::runtime_error("unsupported report schema version");
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.input_path = j.at("input").at("path").get<std::string>();
    r.input_hash = j.at("input").at("hash").get<std::string>();
    r.order = j.at("order").get<std::string>();
    r.budget.max_degree = j.at("budget").at("max_degree").get<int64_t>();
    r.budget.max_pairs = j.at("budget").at("max_pairs").get<int64_t>();
    r.seconds = j.at("timings").at("seconds").get<double>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (auto& [k, v] : j.at("results").at("scalars").items())
        r.scalars.emplace_back(k, v.get<std::string>());
    for (auto& id : j.at("results").at("ideals")) {
        RunReport::IdealResult ir;
        ir.name = id.at("name").get<std::string>();
        ir.level = id.at("level").get<int>();
        ir.generators = id.at("generators").get<std::vector<std::string>>();
        r.ideals.push_back(std::move(ir));
    }
    return r;
}

}  // namespace skhodge

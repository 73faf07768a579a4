#pragma once

#include <string>
#include <vector>

#include "skhodge/groebner.hpp"

namespace skhodge {

// Result record for one CLI run; serializable to text and JSON with the same
// content (schema_version identifies the JSON layout).
struct RunReport {
    static constexpr int schema_version = 1;

    std::string command;
    std::string input_path;
    std::string input_hash;  // fnv1a-64 of the input text, hex
    std::string order = "degrevlex";
    Budget budget;
    double seconds = 0;
    std::vector<std::string> warnings;

    // Ordered scalar results (name, value as text).
    std::vector<std::pair<std::string, std::string>> scalars;

    struct IdealResult {
        std::string name;  // e.g. "I_0", "Ord_2"
        int level = 0;
        std::vector<std::string> generators;  // canonical text form
    };
    std::vector<IdealResult> ideals;

    void add_scalar(const std::string& name, const std::string& value);
    void add_ideal(const std::string& name, int level, const std::vector<Poly>& gens);
};

std::string fnv1a_hex(const std::string& text);

std::string serialize_text(const RunReport& r);
std::string serialize_json(const RunReport& r);  // pretty-printed, deterministic
RunReport report_from_json(const std::string& json_text);

}  // namespace skhodge

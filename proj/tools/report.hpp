#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sweil::verify {
struct RelationReport;
}

namespace sweil::cli {

enum class Mode { verify_n2, verify_s2a, verify_chain, verify_relative, sca_tables, cohomology, kahler };

std::optional<Mode> parse_mode(std::string_view name);
std::string_view mode_name(Mode m);

struct RunConfig {
    Mode mode = Mode::verify_n2;
    std::string backend = "loop:sl2";
    std::string alpha = "0";
    std::optional<int> emax;  // 3 for the verify modes, 2 for cohomology and kahler
    int b0max = 2;
    int window = 2;
    bool relative = false;
    int jobs = 1;
    bool timing = false;
    std::string golden;  // sca-tables: expected table, one line per bracket
};

struct Outcome {
    bool pass = true;
    nlohmann::ordered_json doc;
};

// Usage errors (bad backend, bad fraction, mode/backend mismatch) throw
// std::invalid_argument. The document never depends on cfg.jobs.
Outcome run(const RunConfig& cfg);

// {check, params, box, states, relations, status, witness?, millis?}
nlohmann::ordered_json relation_json(const verify::RelationReport& r, bool timing);

// "json", "csv" or "text"; throws std::invalid_argument otherwise
std::string render(const Outcome& o, std::string_view format);

}  // namespace sweil::cli

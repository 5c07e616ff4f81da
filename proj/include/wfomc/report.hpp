#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace wfomc {

struct Report {
    std::string count;  // decimal integer or "p/q"
    std::uint32_t domain_size = 0;
    std::string mode;   // "engine" or "oracle"
    std::optional<std::map<std::string, std::string>> per_cardinality;
    std::int64_t timing_ms = 0;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
/// Throws std::invalid_argument on a malformed report.
Report report_from_json(const nlohmann::json& j);

/// Plain-text rendering: the count, then one "key count" line per entry.
std::string to_text(const Report& r);

}  // namespace wfomc

#include "wfomc/report.hpp"

#include <stdexcept>

#include "wfomc/numeric.hpp"

namespace wfomc {

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["count"] = r.count;
    j["domain_size"] = r.domain_size;
    j["mode"] = r.mode;
    if (r.per_cardinality) j["per_cardinality"] = *r.per_cardinality;
    j["timing_ms"] = r.timing_ms;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    try {
        Report r;
        r.count = j.at("count").get<std::string>();
        parse_rational(r.count);
        r.domain_size = j.at("domain_size").get<std::uint32_t>();
        r.mode = j.at("mode").get<std::string>();
        if (r.mode != "engine" && r.mode != "oracle") throw std::invalid_argument("unknown mode " + r.mode);
        if (j.contains("per_cardinality")) {
            r.per_cardinality = j.at("per_cardinality").get<std::map<std::string, std::string>>();
        }
        r.timing_ms = j.at("timing_ms").get<std::int64_t>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string to_text(const Report& r) {
    std::string out = r.count + "\n";
    if (r.per_cardinality) {
        for (const auto& [key, value] : *r.per_cardinality) out += (key.empty() ? "-" : key) + " " + value + "\n";
    }
    return out;
}

}  // namespace wfomc

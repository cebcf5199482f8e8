#include "vlplus/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace vlplus {

std::string report_to_json(const Report& r) {
    nlohmann::json j;
    j["schema_version"] = r.schema_version;
    j["k"] = r.k;
    j["suite"] = r.suite;
    j["elapsed_ms"] = r.elapsed_ms;
    j["all_pass"] = r.all_pass();
    j["entries"] = nlohmann::json::array();
    for (const auto& e : r.entries)
        j["entries"].push_back({{"name", e.name},
                                {"status", e.status},
                                {"expected", e.expected},
                                {"actual", e.actual}});
    return j.dump(2);
}

Report report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    r.k = j.at("k").get<int>();
    r.suite = j.at("suite").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<long>();
    for (const auto& e : j.at("entries"))
        r.entries.push_back({e.at("name").get<std::string>(),
                             e.at("status").get<std::string>(),
                             e.at("expected").get<std::string>(),
                             e.at("actual").get<std::string>()});
    return r;
}

std::string report_to_text(const Report& r) {
    std::size_t name_w = 4, status_w = 6;
    for (const auto& e : r.entries) {
        name_w = std::max(name_w, e.name.size());
        status_w = std::max(status_w, e.status.size());
    }
    std::ostringstream os;
    os << "suite " << r.suite << "  k=" << r.k << "\n";
    for (const auto& e : r.entries) {
        os << "  " << e.name << std::string(name_w - e.name.size() + 2, ' ') << e.status
           << std::string(status_w - e.status.size() + 2, ' ');
        if (e.status != "pass" && !e.expected.empty())
            os << "expected " << e.expected << " got " << e.actual;
        os << "\n";
    }
    os << (r.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
    if (r.has_inconclusive()) os << " (with inconclusive entries)";
    os << "\n";
    return os.str();
}

}  // namespace vlplus

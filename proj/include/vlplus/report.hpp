#pragma once

#include <string>
#include <vector>

namespace vlplus {

struct CheckEntry {
    std::string name;
    std::string status;  // "pass" | "fail" | "inconclusive"
    std::string expected;
    std::string actual;
};

struct Report {
    int schema_version = 1;
    int k = 0;
    std::string suite;
    std::vector<CheckEntry> entries;
    long elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& e : entries)
            if (e.status == "fail") return false;
        return true;
    }
    bool has_inconclusive() const {
        for (const auto& e : entries)
            if (e.status == "inconclusive") return true;
        return false;
    }

    friend bool operator==(const Report& a, const Report& b) {
        auto eq = [](const CheckEntry& x, const CheckEntry& y) {
            return x.name == y.name && x.status == y.status && x.expected == y.expected &&
                   x.actual == y.actual;
        };
        if (!(a.schema_version == b.schema_version && a.k == b.k && a.suite == b.suite &&
              a.elapsed_ms == b.elapsed_ms && a.entries.size() == b.entries.size()))
            return false;
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            if (!eq(a.entries[i], b.entries[i])) return false;
        return true;
    }
};

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace vlplus

#pragma once

// Structured verification reports: an ordered list of named checks, each with
// a claim string, key/value evidence, and a pass flag.  Serialization to JSON
// is deterministic byte for byte (ordered keys, integer-only numerics).

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace wmk {

struct Check {
    std::string name;
    std::string claim;
    std::vector<std::pair<std::string, std::string>> values;
    bool pass = false;

    Check& with(std::string key, std::string value) {
        values.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Check& with(std::string key, int64_t value) {
        return with(std::move(key), std::to_string(value));
    }
    Check& with(std::string key, uint64_t value) {
        return with(std::move(key), std::to_string(value));
    }
    Check& with(std::string key, bool value) {
        return with(std::move(key), std::string(value ? "true" : "false"));
    }
};

template <typename T>
std::string join_values(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

struct VerificationReport {
    std::string mode;
    std::vector<std::pair<std::string, std::string>> context;
    std::vector<Check> checks;

    void add_context(std::string key, std::string value) {
        context.emplace_back(std::move(key), std::move(value));
    }
    void add_context(std::string key, int64_t value) {
        add_context(std::move(key), std::to_string(value));
    }
    Check& add(Check c) {
        checks.push_back(std::move(c));
        return checks.back();
    }

    size_t failed_count() const {
        size_t n = 0;
        for (const Check& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    bool pass() const { return failed_count() == 0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["tool"] = "wildmckay";
        j["mode"] = mode;
        nlohmann::ordered_json ctx;
        for (const auto& [k, v] : context) ctx[k] = v;
        j["context"] = std::move(ctx);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Check& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["claim"] = c.claim;
            nlohmann::ordered_json vals;
            for (const auto& [k, v] : c.values) vals[k] = v;
            jc["values"] = std::move(vals);
            jc["pass"] = c.pass;
            arr.push_back(std::move(jc));
        }
        j["checks"] = std::move(arr);
        nlohmann::ordered_json sum;
        sum["total"] = checks.size();
        sum["passed"] = checks.size() - failed_count();
        sum["failed"] = failed_count();
        j["summary"] = std::move(sum);
        j["pass"] = pass();
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    std::string to_text() const {
        std::ostringstream os;
        os << "== " << mode << " ==\n";
        for (const auto& [k, v] : context) os << "  " << k << ": " << v << "\n";
        for (const Check& c : checks) {
            os << (c.pass ? "[pass] " : "[FAIL] ") << c.name << ": " << c.claim << "\n";
            for (const auto& [k, v] : c.values) os << "         " << k << " = " << v << "\n";
        }
        os << "RESULT: " << (checks.size() - failed_count()) << "/" << checks.size()
           << " checks passed" << (pass() ? "" : " [FAILURES PRESENT]") << "\n";
        return os.str();
    }
};

}  // namespace wmk

#pragma once

// Verification reports: an ordered list of named checks, each pass, fail or
// reported-mismatch. Only "fail" makes a report unsuccessful.

#include <map>
#include <string>
#include <vector>

namespace superint {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class CheckStatus { pass, fail, reported_mismatch };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::reported_mismatch: return "reported-mismatch";
    }
    return "?";
}

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string residual;
};

struct VerificationReport {
    std::string suite;
    std::string version = kEngineVersion;
    std::map<std::string, std::string> conventions;
    std::vector<Check> checks;

    explicit VerificationReport(std::string name = {}) : suite(std::move(name)) {}

    void add(std::string name, bool ok, std::string residual) {
        checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(residual)});
    }
    void add_mismatch(std::string name, std::string residual) {
        checks.push_back({std::move(name), CheckStatus::reported_mismatch, std::move(residual)});
    }
    /// pass when `ok`, otherwise reported-mismatch.
    void add_reported(std::string name, bool ok, std::string residual) {
        checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::reported_mismatch, std::move(residual)});
    }
    void append(const VerificationReport& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.status, c.residual});
        for (const auto& [k, v] : other.conventions) conventions.emplace(k, v);
    }

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
    std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.status == s;
        return n;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Shared convention labels.
inline std::map<std::string, std::string> standard_conventions() {
    return {{"bracket", "{f,g} = sum df/dq dg/dp - df/dp dg/dq, so {x,px} = 1"},
            {"ttw_k2_params", "Cartesian (a,b,c) with beta = b, gamma = 4c"}};
}

}  // namespace superint

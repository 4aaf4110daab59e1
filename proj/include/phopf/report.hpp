#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace phopf {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string residual;  // canonical form of the first failing expression
    long long millis = 0;

    static CheckResult ok(std::string name) {
        CheckResult r;
        r.name = std::move(name);
        return r;
    }
    static CheckResult fail(std::string name, std::string residual) {
        CheckResult r;
        r.name = std::move(name);
        r.pass = false;
        r.residual = std::move(residual);
        return r;
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void add(const Report& r) {
        for (const auto& c : r.checks) checks.push_back(c);
    }

    // One line per check; timing intentionally excluded so output is
    // byte-stable across runs.
    std::string text() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << "CHECK " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
            if (!c.pass && !c.residual.empty()) os << " [residual=" << c.residual << "]";
            os << "\n";
        }
        return os.str();
    }
};

}  // namespace phopf

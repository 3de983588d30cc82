#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <deque>
#include <vector>

namespace commacat {

// Outcome of one named property, with the first few counterexamples kept
// verbatim so that they can be replayed.
struct Check {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;

    bool ok() const { return failures == 0; }

    bool expect(bool cond, const std::string& what = {}) {
        ++cases;
        if (!cond) {
            ++failures;
            if (counterexamples.size() < 5) counterexamples.push_back(what);
        }
        return cond;
    }
};

struct Report {
    std::deque<Check> checks;  // references from add() stay valid

    Check& add(std::string name) {
        checks.push_back(Check{std::move(name), 0, 0, {}});
        return checks.back();
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (auto c : other.checks) {
            if (!prefix.empty()) c.name = prefix + "/" + c.name;
            checks.push_back(std::move(c));
        }
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.failures;
        return n;
    }
};

}  // namespace commacat

#pragma once

#include "cx2/serialize.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cx2 {

struct SuiteOptions {
    std::uint64_t seed = 42;
    int cases = 0;        // per ring or instance kind; 0 keeps each suite's own count
    std::string dataDir;  // holds nonsplit.json
};

struct SuiteResult {
    int criterion = 0;  // 0 for the supplementary suites
    std::string name;
    long cases = 0, failures = 0;
    std::string firstFailure;
    // How often each hypothesis or flag was hit.
    std::vector<std::pair<std::string, long>> counts;
    double seconds = 0;
    bool passed() const { return cases > 0 && failures == 0; }
};

struct Suite {
    int criterion;
    std::string name;
    SuiteResult (*run)(const SuiteOptions&);
};
const std::vector<Suite>& suites();

SuiteResult runSuite(const Suite& s, const SuiteOptions& o);
std::vector<SuiteResult> runSuites(const SuiteOptions& o);

Json toJson(const SuiteResult& r);

}  // namespace cx2

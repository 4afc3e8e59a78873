#include "cx2/suites.hpp"

#include <iostream>

#ifndef CX2_DATA_DIR
#define CX2_DATA_DIR "data"
#endif

// One line per acceptance criterion; the exit status is nonzero if any fails.
int main(int argc, char** argv) {
    cx2::SuiteOptions o;
    o.seed = argc > 1 ? std::stoull(argv[1]) : 42;
    o.dataDir = CX2_DATA_DIR;
    int failed = 0;
    for (const cx2::Suite& s : cx2::suites()) {
        if (s.criterion == 0) continue;
        const cx2::SuiteResult r = cx2::runSuite(s, o);
        std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << s.criterion << " " << s.name << ": "
                  << r.cases << " cases, " << r.failures << " failures, " << r.seconds << " s";
        if (!r.firstFailure.empty()) std::cout << " [" << r.firstFailure << "]";
        for (const auto& [k, v] : r.counts) std::cout << "; " << k << " " << v;
        std::cout << std::endl;
        if (!r.passed()) ++failed;
    }
    return failed ? 1 : 0;
}

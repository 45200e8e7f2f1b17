#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqt {

struct CheckResult {
    std::string name;
    int criterion = 0;
    bool ok = true;
    std::size_t cases = 0;
    std::string witness;
    // recorded for reference, does not affect the verdict
    bool informational = false;
};

struct SuiteOptions {
    std::uint64_t seed = 7;
    int r = 2;
    int max_degree = 6;
    // scales the number of random samples
    int samples = 1;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const;
};

SuiteReport run_em_suite(const SuiteOptions& o);
SuiteReport run_classifying_suite(const SuiteOptions& o);
SuiteReport run_koszul_suite(const SuiteOptions& o);
SuiteReport run_torus_suite(const SuiteOptions& o);
SuiteReport run_ih_suite(const SuiteOptions& o);
// throws std::invalid_argument on an unknown name
SuiteReport run_suite(const std::string& name, const SuiteOptions& o);
const std::vector<std::string>& suite_names();

}  // namespace eqt

#pragma once

// Seeded property suites shared by `dyndeg verify` and the acceptance
// driver. Every instance draws from its own generator derived from the run
// seed and the instance index, so a failure is reproducible in isolation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dyndeg::cli {

struct SuiteConfig {
    std::size_t count = 1000;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
};

struct SuiteFailure {
    std::size_t instance = 0;
    std::string check;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::vector<SuiteFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string const& name, SuiteConfig const& config);

/// Generator for one instance of a suite.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance);

}  // namespace dyndeg::cli

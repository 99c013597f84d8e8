#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace palcf {

struct VerificationFailure {
    std::string input, expected, got;
};

struct VerificationReport {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<VerificationFailure> failures;
};

// Parameter ranges for the randomized suites.
struct VerifyOptions {
    long long max_n = 12;
    long long max_m = 12;
    long long max_k = 10000;
};

/// Seeded cross-module property run. suite is one of
/// all | palindrome | beta | pell | raney; each named suite runs `budget`
/// cases (all = the four suites back to back). Deterministic given seed:
/// the generator is a fixed-width engine and every draw reduces its raw
/// output explicitly.
VerificationReport run_suite(const std::string& suite, std::size_t budget,
                             std::uint64_t seed, const VerifyOptions& opts = {});

}  // namespace palcf

#ifndef APERY8_VERIFY_HPP
#define APERY8_VERIFY_HPP

#include <string>
#include <vector>

#include "apery8/check.hpp"

namespace apery8 {

// Driver that assembles the verification suites and renders reports. All
// knobs are validated up front; suite execution is deterministic, and the
// JSON rendering is byte-stable across runs once timing fields are dropped.

inline constexpr int kMinOrder = 8;
inline constexpr long kMinPrec = 20;
inline constexpr int kMinNMax = 10;

struct RunConfig {
    int order = 200;
    long prec = 50;
    int n_max = 300;
    std::vector<std::string> suites; // subset of {exact, numeric, limit, pcf}; empty = all

    // std::invalid_argument on out-of-range knobs or unknown suite names.
    void validate() const;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool pass = true;
    double elapsed_ms = 0;
};

struct Report {
    RunConfig config;
    std::vector<SuiteResult> suites;
    bool pass = true;
    double elapsed_ms = 0;

    std::string to_text() const;
    std::string to_json(bool with_timing = true) const;
};

Report run_verification(const RunConfig& cfg);

// The `show` data dumps: qexp <name> [order], sequence [n], ratio [n],
// constants [digits]. Returns rendered text or JSON; std::invalid_argument
// on unknown names or malformed arguments.
struct ShowRequest {
    std::string what;
    std::vector<std::string> args;
    long prec = 30;
    bool json = false;
};

std::string run_show(const ShowRequest& req);

} // namespace apery8

#endif

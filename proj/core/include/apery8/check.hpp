#ifndef APERY8_CHECK_HPP
#define APERY8_CHECK_HPP

#include <string>
#include <vector>

namespace apery8 {

// Outcome of one verification step. Exact checks pass or fail with the first
// mismatching exponent recorded; numeric checks carry the worst residual as a
// decimal string next to the tolerance they were held to.
struct CheckResult {
    std::string name;     // stable machine identifier, e.g. "wronskian"
    std::string anchor;   // human-readable pointer into the derivation
    std::string params;   // e.g. "order=200" or "prec=50"
    bool exact = false;   // exact identity vs numeric residual
    bool pass = false;
    std::string residual;  // numeric checks: max |residual| (decimal string)
    std::string tolerance; // numeric checks: the bound residual was held to
    std::string detail;    // failure context or extra info (first mismatch etc.)
    double elapsed_ms = 0; // stamped by the verification driver

    static CheckResult exact_pass(std::string name, std::string anchor, std::string params) {
        return {std::move(name), std::move(anchor), std::move(params), true, true, "", "", ""};
    }
    static CheckResult exact_fail(std::string name, std::string anchor, std::string params,
                                  std::string detail) {
        return {std::move(name), std::move(anchor), std::move(params),
                true,            false,             "",
                "",              std::move(detail)};
    }
    static CheckResult numeric(std::string name, std::string anchor, std::string params, bool pass,
                               std::string residual, std::string tolerance) {
        return {std::move(name),     std::move(anchor),    std::move(params), false, pass,
                std::move(residual), std::move(tolerance), ""};
    }
};

} // namespace apery8

#endif

#ifndef SEGRE_VERIFY_HPP
#define SEGRE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace segre
{

struct VerifyOptions {
    std::int64_t max_k = 8;
    std::size_t max_order = 8;
    // Test-only negative control: perturbs one coefficient of D before the
    // engine-facing checks run.
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    std::string detail;
    bool passed = false;

    // "<name>: <detail> PASS" or "... FAIL".
    [[nodiscard]] std::string line() const;
};

// Runs every cross-route and invariant check in a fixed order. Deterministic:
// the same options always give the same report.
std::vector<CheckResult> run_verification(const VerifyOptions &options);

std::string format_report(const std::vector<CheckResult> &results);

bool all_passed(const std::vector<CheckResult> &results);

} // namespace segre

#endif

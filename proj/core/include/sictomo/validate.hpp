#pragma once

#include <string>
#include <vector>

namespace sictomo {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // worst observed deviation or a short explanation
};

/// Self-contained invariant suite: POVM structure, closed-form fidelity and
/// purity oracles, parametrization physicality, eigensolver and matrix-root
/// oracles, gradient consistency, count determinism, and a noiseless
/// round-trip reconstruction. Deterministic; runs in a few seconds.
std::vector<CheckResult> run_invariant_checks();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sictomo

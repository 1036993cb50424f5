#pragma once

#include <string>
#include <vector>

namespace idem {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // counts on success, first failure otherwise
};

// The full invariant battery: eleven independent checks covering the free
// oracle, the algebra identities, matrix units, CRT decomposition, radical
// witnesses, the Jordan layer, the involution, the matrix differential
// suite, the commutative case, and the simplicity spot check. Deterministic
// (fixed seeds); a throwing check is reported as failed, never skipped.
std::vector<CheckResult> run_acceptance();

}  // namespace idem

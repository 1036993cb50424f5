#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace idem {

// One failed comparison inside a differential run, with enough detail to
// replay it by hand.
struct Mismatch {
    std::uint64_t trial = 0;
    std::string kind;
    std::string detail;
};

// Outcome of a randomized differential suite. Runs are reproducible: the
// seed recorded here plus the parameters fully determine every trial.
struct Report {
    std::string suite;
    std::string field;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::map<std::string, std::uint64_t> params;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> certificates;

    bool ok() const { return mismatches.empty(); }
};

}  // namespace idem

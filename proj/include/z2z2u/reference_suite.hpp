#pragma once

#include <string>
#include <vector>

namespace z2z2u {

// One entry of the reproduction ledger: a named reference value or claim,
// recomputed from scratch and compared against its frozen expectation.
struct ReferenceCheck {
    std::string key;    // where the reference value comes from, e.g. "§2 example W_C"
    bool passed = false;
    std::string detail; // failure description; empty on success
};

// Recomputes every ledger entry.  Entries appear in a fixed order; a fresh
// build is expected to pass all of them.
std::vector<ReferenceCheck> run_reference_suite();

} // namespace z2z2u

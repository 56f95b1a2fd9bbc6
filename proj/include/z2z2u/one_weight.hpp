#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2z2u/code.hpp"
#include "z2z2u/matrix.hpp"

namespace z2z2u {

struct CheckResult {
    std::string name;
    bool applicable = false;
    bool passed = true; // meaningful only when applicable
};

// Outcome of the structural property battery for a one-weight code.  Checks
// whose hypotheses fail (zero columns, even weight, replication blowing the
// coordinate cap, ...) are reported as not applicable rather than failed.
struct OneWeightReport {
    CodeType type;
    int m = 0;
    bool no_zero_columns = false;
    std::optional<std::uint64_t> alpha; // n / (|C| - 1) when that is integral
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const CheckResult* find(const std::string& name) const;
};

// Runs every structural check against a one-weight code with generator
// matrix g; throws NotOneWeight otherwise.
OneWeightReport one_weight_battery(const Mat& g, const Code& c);

// gamma side-by-side copies of the binary block and of the ring block.
Mat replicate(const Mat& g, int gamma);

struct OneWeightHit {
    Mat gens;      // generator matrix in standard-form template shape
    CodeType type; // exact: template rows are independent by construction
    int m = 0;
};

// Every one-weight code (up to column permutation) with 1 <= r <= max_r,
// 1 <= s <= max_s and k0 + 2k1 + k2 <= max_k, found by enumerating
// standard-form templates with one-weight pruning on row prefixes.
std::vector<OneWeightHit> one_weight_template_search(int max_r, int max_s, int max_k);

} // namespace z2z2u

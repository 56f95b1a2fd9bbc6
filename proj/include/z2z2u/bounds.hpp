#pragma once

#include <cstdint>
#include <optional>

namespace z2z2u {

// Sphere-packing status of an (n, 2^k, d) binary image: with t = (d-1)/2,
// 2^k * sum_{j<=t} C(n,j) <= 2^n, equality being perfection.
struct SpherePacking {
    unsigned __int128 lhs = 0;
    unsigned __int128 rhs = 0;
    bool satisfied = false;
    bool perfect = false;
};

SpherePacking sphere_packing(int n, int k, int d);

// Binary Plotkin bound in the two stated cases: |C| <= 4n when 2d = n, and
// |C| <= 2d / (2d - n) when 2d > n; no statement otherwise.
struct PlotkinEval {
    enum class Case { none, at_half, above_half };
    Case kase = Case::none;
    std::uint64_t bound = 0; // floor of the bound when applicable
    bool attained = false;   // 2^k equals the bound
};

PlotkinEval plotkin(int n, int k, int d);

// Closed catalog of Gray images recorded as distance-optimal binary codes.
// Keyed by (n, k): true/false tells whether d matches the cataloged optimum;
// nullopt means (n, k) is not cataloged.
std::optional<bool> catalog_optimal(int n, int k, int d);

} // namespace z2z2u

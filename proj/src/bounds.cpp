#include "z2z2u/bounds.hpp"

#include <stdexcept>

namespace z2z2u {

namespace {

using u128 = unsigned __int128;

// C(n, j) exactly; n <= 100 keeps every value far below the 128-bit cap.
u128 binom(int n, int j) {
    if (j < 0 || j > n) return 0;
    if (j > n - j) j = n - j;
    u128 acc = 1;
    for (int i = 1; i <= j; ++i) acc = acc * static_cast<u128>(n - j + i) / static_cast<u128>(i);
    return acc;
}

} // namespace

SpherePacking sphere_packing(int n, int k, int d) {
    if (n < 1 || n > 100 || k < 0 || k > n || d < 1 || d > n)
        throw std::invalid_argument("sphere_packing: parameters out of range");
    const int t = (d - 1) / 2;
    u128 sum = 0;
    for (int j = 0; j <= t; ++j) sum += binom(n, j);
    if (k >= 64 || sum > (~static_cast<u128>(0) >> k))
        throw std::overflow_error("sphere_packing: count overflow");
    SpherePacking sp;
    sp.lhs = sum << k;
    sp.rhs = static_cast<u128>(1) << n;
    sp.satisfied = sp.lhs <= sp.rhs;
    sp.perfect = sp.lhs == sp.rhs;
    return sp;
}

PlotkinEval plotkin(int n, int k, int d) {
    if (n < 1 || k < 0 || d < 1)
        throw std::invalid_argument("plotkin: parameters out of range");
    PlotkinEval ev;
    if (2 * d == n) {
        ev.kase = PlotkinEval::Case::at_half;
        ev.bound = 4ull * static_cast<std::uint64_t>(n);
    } else if (2 * d > n) {
        ev.kase = PlotkinEval::Case::above_half;
        ev.bound = static_cast<std::uint64_t>(2 * d) / static_cast<std::uint64_t>(2 * d - n);
    } else {
        return ev;
    }
    ev.attained = k < 64 && (std::uint64_t{1} << k) == ev.bound;
    return ev;
}

std::optional<bool> catalog_optimal(int n, int k, int d) {
    struct Entry {
        int n, k, d;
    };
    static constexpr Entry kCatalog[] = {
        {45, 4, 24}, {27, 2, 18}, {21, 3, 12}, {49, 3, 28},
        {93, 5, 48}, {57, 2, 38}, {77, 3, 44},
    };
    for (const Entry& e : kCatalog)
        if (e.n == n && e.k == k) return e.d == d;
    return std::nullopt;
}

} // namespace z2z2u

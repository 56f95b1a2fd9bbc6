#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "z2z2u/matrix.hpp"
#include "z2z2u/vec.hpp"

namespace z2z2u {

inline constexpr std::size_t kDefaultEnumCap = std::size_t{1} << 22;

struct GrayParams {
    int n = 0; // r + 2s
    int k = 0; // log2 |C|
    int d = 0; // minimum distance
    bool operator==(const GrayParams&) const = default;
};

// A code, fully enumerated.  Group closure keeps |C| a power of two; the
// word list is kept in canonical (lexicographic) order.
class Code {
public:
    // Closure of the rows of g under addition and the R-action.  Each
    // generator multiplies the size by 1, 2 or 4; throws CapExceeded before
    // the element count would pass `cap`.
    static Code span(const Mat& g, std::size_t cap = kDefaultEnumCap);

    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] int s() const { return s_; }
    [[nodiscard]] int length() const { return r_ + 2 * s_; } // Gray length
    [[nodiscard]] std::uint64_t size() const { return words_.size(); }
    [[nodiscard]] int log2_size() const;
    [[nodiscard]] const std::vector<Vec>& words() const { return words_; }
    [[nodiscard]] bool contains(const Vec& v) const;

    // A_0..A_n with n = r + 2s.
    [[nodiscard]] std::vector<std::uint64_t> weight_enumerator() const;
    // Minimum weight of a nonzero word; throws ZeroCode on the zero code.
    [[nodiscard]] int min_distance() const;
    [[nodiscard]] GrayParams gray_params() const;

    // m when every nonzero word has weight m (and one exists).
    [[nodiscard]] std::optional<int> one_weight() const;
    // True when some coordinate is zero across all words.
    [[nodiscard]] bool has_zero_column() const;
    // True when C equals (binary projection) x (ring projection).
    [[nodiscard]] bool is_separable() const;

private:
    Code(int r, int s) : r_(r), s_(s) {}
    friend Code brute_dual(const Mat& g);
    int r_ = 0, s_ = 0;
    std::vector<Vec> words_;
};

// Dual code via the parity-check matrix of the standard form.
Code dual_code(const Mat& g, std::size_t cap = kDefaultEnumCap);

// Dual by scanning the whole ambient group for vectors orthogonal to every
// row of g; exponential in r + 2s, meant for cross-checks.
Code brute_dual(const Mat& g);

// MacWilliams transform: weight enumerator of the dual, from A_0..A_n of a
// code with |C| = code_size over Z2^r x R^s with r + 2s = n.  All arithmetic
// is exact; a non-integer coefficient throws NonIntegerResult.
std::vector<std::uint64_t> macwilliams(const std::vector<std::uint64_t>& a,
                                       std::uint64_t code_size);

// Single dual coefficient B_j from the same transform.
std::uint64_t macwilliams_coeff(const std::vector<std::uint64_t>& a,
                                std::uint64_t code_size, int j);

} // namespace z2z2u

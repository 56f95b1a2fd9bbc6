#pragma once

#include <vector>

#include "z2z2u/vec.hpp"

namespace z2z2u {

// Subgroup type of a code in Z2^r x R^s: |C| = 2^(k0 + 2*k1 + k2).
struct CodeType {
    int r = 0;
    int s = 0;
    int k0 = 0;
    int k1 = 0;
    int k2 = 0;

    int log2_size() const { return k0 + 2 * k1 + k2; }
    CodeType dual() const { return {r, s, r - k0, s - k1 - k2, k2}; }
    bool operator==(const CodeType&) const = default;
};

// Generator / parity-check matrix: rows share one (r, s) shape.
struct Mat {
    int r = 0;
    int s = 0;
    std::vector<Vec> rows;

    Mat(int r, int s) : r(r), s(s) {}
    void append(const Vec& v);
    std::size_t row_count() const { return rows.size(); }
};

// Row-reduced generator matrix.  Rows come ordered as the k0 binary-pivot
// rows, then the k1 free rows, then the k2 u-rows.  Columns are permuted so
// pivots lead each group: binary pivots first among binary columns; ring
// columns grouped as [k1 free pivots | k2 u pivots | remainder].  perm[i]
// gives the original column now sitting at position i.
struct StandardForm {
    Mat mat;
    CodeType type;
    std::vector<int> bin_perm;
    std::vector<int> ring_perm;
};

StandardForm standard_form(const Mat& g);

// Parity-check matrix read off the standard-form block template, in the
// standard form's (permuted) coordinates.
Mat parity_check_std(const StandardForm& sf);

// Parity-check matrix mapped back to the generator's original coordinates.
Mat parity_check(const Mat& g);

// Column reshuffles: permute sends original column perm[i] to position i,
// unpermute inverts that.
Mat permute_columns(const Mat& m, const std::vector<int>& bin_perm,
                    const std::vector<int>& ring_perm);
Mat unpermute_columns(const Mat& m, const std::vector<int>& bin_perm,
                      const std::vector<int>& ring_perm);

// True when every row of a is orthogonal to every row of b.
bool orthogonal(const Mat& a, const Mat& b);

} // namespace z2z2u

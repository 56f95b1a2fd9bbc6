#include "z2z2u/matrix.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>

#include "z2z2u/ring.hpp"

namespace z2z2u {

namespace {

Vec remap(const Vec& v, const std::vector<int>& bin_map, const std::vector<int>& ring_map,
          bool forward) {
    Vec out(static_cast<int>(bin_map.size()), static_cast<int>(ring_map.size()));
    for (std::size_t i = 0; i < bin_map.size(); ++i) {
        const int a = forward ? static_cast<int>(i) : bin_map[i];
        const int b = forward ? bin_map[i] : static_cast<int>(i);
        out.set_bin(a, v.bin_at(b));
    }
    for (std::size_t j = 0; j < ring_map.size(); ++j) {
        const int a = forward ? static_cast<int>(j) : ring_map[j];
        const int b = forward ? ring_map[j] : static_cast<int>(j);
        out.set_ring(a, v.ring_at(b));
    }
    return out;
}

Mat remap_all(const Mat& m, const std::vector<int>& bp, const std::vector<int>& rp,
              bool forward) {
    if (static_cast<int>(bp.size()) != m.r || static_cast<int>(rp.size()) != m.s)
        throw std::invalid_argument("permute_columns: permutation length does not match shape");
    Mat out(m.r, m.s);
    for (const Vec& v : m.rows) out.append(remap(v, bp, rp, forward));
    return out;
}

} // namespace

void Mat::append(const Vec& v) {
    if (v.r() != r || v.s() != s)
        throw std::invalid_argument("Mat: row shape does not match matrix shape");
    rows.push_back(v);
}

Mat permute_columns(const Mat& m, const std::vector<int>& bin_perm,
                    const std::vector<int>& ring_perm) {
    return remap_all(m, bin_perm, ring_perm, true);
}

Mat unpermute_columns(const Mat& m, const std::vector<int>& bin_perm,
                      const std::vector<int>& ring_perm) {
    return remap_all(m, bin_perm, ring_perm, false);
}

StandardForm standard_form(const Mat& g) {
    const int r = g.r, s = g.s;
    std::vector<Vec> rows = g.rows;
    std::vector<char> used(rows.size(), 0);
    std::vector<int> free_rows, bin_rows, u_rows;
    std::vector<int> free_cols, bin_cols, u_cols;

    // Pass 1: unit pivots in ring columns.  Scaling by the (self-inverse)
    // unit makes the pivot 1; full-column elimination leaves the identity
    // block and strips every unit from the rows that remain unused.
    for (int c = 0; c < s; ++c) {
        int pr = -1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && rows[i].ring_at(c).is_unit()) {
                pr = static_cast<int>(i);
                break;
            }
        if (pr < 0) continue;
        rows[pr] = rows[pr].scaled(rows[pr].ring_at(c).inverse());
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (static_cast<int>(j) == pr) continue;
            const RingElem e = rows[j].ring_at(c);
            if (!e.is_zero()) rows[j] = rows[j] + rows[pr].scaled(e);
        }
        used[pr] = 1;
        free_rows.push_back(pr);
        free_cols.push_back(c);
    }

    // Pass 2: binary pivots among the remaining rows.  Afterwards every
    // unused row carries a zero binary part.
    for (int c = 0; c < r; ++c) {
        int pr = -1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && rows[i].bin_at(c)) {
                pr = static_cast<int>(i);
                break;
            }
        if (pr < 0) continue;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (static_cast<int>(j) != pr && rows[j].bin_at(c))
                rows[j] = rows[j] + rows[pr];
        used[pr] = 1;
        bin_rows.push_back(pr);
        bin_cols.push_back(c);
    }

    // Pass 3: u pivots.  Remaining rows hold only {0, u} entries; clearing
    // the u-component of each pivot column from every other row also turns
    // the free rows' entries over these columns into plain binary ones.
    for (int c = 0; c < s; ++c) {
        int pr = -1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && !rows[i].ring_at(c).is_zero()) {
                pr = static_cast<int>(i);
                break;
            }
        if (pr < 0) continue;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (static_cast<int>(j) == pr) continue;
            const RingElem e = rows[j].ring_at(c);
            if (e == RingElem::u() || e == RingElem::w())
                rows[j] = rows[j] + rows[pr];
        }
        used[pr] = 1;
        u_rows.push_back(pr);
        u_cols.push_back(c);
    }

    const int k0 = static_cast<int>(bin_rows.size());
    const int k1 = static_cast<int>(free_rows.size());
    const int k2 = static_cast<int>(u_rows.size());

    std::vector<int> bin_perm = bin_cols;
    {
        std::vector<char> taken(r, 0);
        for (int c : bin_cols) taken[c] = 1;
        for (int c = 0; c < r; ++c)
            if (!taken[c]) bin_perm.push_back(c);
    }
    std::vector<int> ring_perm = free_cols;
    ring_perm.insert(ring_perm.end(), u_cols.begin(), u_cols.end());
    {
        std::vector<char> taken(s, 0);
        for (int c : free_cols) taken[c] = 1;
        for (int c : u_cols) taken[c] = 1;
        for (int c = 0; c < s; ++c)
            if (!taken[c]) ring_perm.push_back(c);
    }

    Mat ordered(r, s);
    for (int i : bin_rows) ordered.append(rows[i]);
    for (int i : free_rows) ordered.append(rows[i]);
    for (int i : u_rows) ordered.append(rows[i]);

    return StandardForm{permute_columns(ordered, bin_perm, ring_perm),
                        CodeType{r, s, k0, k1, k2}, std::move(bin_perm), std::move(ring_perm)};
}

Mat parity_check_std(const StandardForm& sf) {
    const auto& [r, s, k0, k1, k2] = sf.type;
    const auto& m = sf.mat.rows;
    const int rb = r - k0;      // non-pivot binary columns
    const int sb = s - k1 - k2; // trailing ring columns

    const auto A1 = [&](int i, int j) { return m[i].bin_at(k0 + j); };
    const auto T = [&](int i, int j) { return m[i].ring_at(k1 + k2 + j).q(); };
    const auto S = [&](int i, int j) { return m[k0 + i].bin_at(k0 + j); };
    const auto A = [&](int i, int j) { return m[k0 + i].ring_at(k1 + j).eta(); };
    const auto B = [&](int i, int j) { return m[k0 + i].ring_at(k1 + k2 + j); };
    const auto D = [&](int i, int j) { return m[k0 + k1 + i].ring_at(k1 + k2 + j).q(); };

    Mat h(r, s);
    for (int i = 0; i < rb; ++i) { // rows [A1^t  I | uS^t  0  0]
        Vec v(r, s);
        for (int j = 0; j < k0; ++j) v.set_bin(j, A1(j, i));
        v.set_bin(k0 + i, true);
        for (int j = 0; j < k1; ++j) v.set_ring(j, RingElem(false, S(j, i)));
        h.append(v);
    }
    for (int i = 0; i < sb; ++i) { // rows [T^t  0 | B1^t + D^tA^t + uB2^t  D^t  I]
        Vec v(r, s);
        for (int j = 0; j < k0; ++j) v.set_bin(j, T(j, i));
        for (int j = 0; j < k1; ++j) {
            bool p = B(j, i).eta();
            for (int t = 0; t < k2; ++t) p = p != (A(j, t) && D(t, i));
            v.set_ring(j, RingElem(p, B(j, i).q()));
        }
        for (int j = 0; j < k2; ++j) v.set_ring(k1 + j, RingElem(D(j, i), false));
        v.set_ring(k1 + k2 + i, RingElem::one());
        h.append(v);
    }
    for (int i = 0; i < k2; ++i) { // rows [0  0 | uA^t  uI  0]
        Vec v(r, s);
        for (int j = 0; j < k1; ++j) v.set_ring(j, RingElem(false, A(j, i)));
        v.set_ring(k1 + i, RingElem::u());
        h.append(v);
    }
    return h;
}

Mat parity_check(const Mat& g) {
    const StandardForm sf = standard_form(g);
    return unpermute_columns(parity_check_std(sf), sf.bin_perm, sf.ring_perm);
}

bool orthogonal(const Mat& a, const Mat& b) {
    for (const Vec& v : a.rows)
        for (const Vec& w : b.rows)
            if (!v.dot(w).is_zero()) return false;
    return true;
}

} // namespace z2z2u

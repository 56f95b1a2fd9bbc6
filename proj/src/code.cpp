#include "z2z2u/code.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <unordered_set>

#include "z2z2u/errors.hpp"
#include "z2z2u/ring.hpp"

namespace z2z2u {

namespace {

struct Key {
    std::uint64_t b = 0, p = 0, q = 0;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        };
        return mix(k.b ^ mix(k.p ^ mix(k.q)));
    }
};

Key key_of(const Vec& v) { return {v.bin_word(), v.p_word(), v.q_word()}; }

using i128 = __int128;
using u128 = unsigned __int128;

// Pascal triangle up to row n, exact in 128-bit (row 96 tops out near 6e27).
std::vector<std::vector<i128>> binomials(int n) {
    std::vector<std::vector<i128>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

// Krawtchouk-style kernel K_j(w) = sum_i (-1)^i C(w,i) C(n-w, j-i); every
// term is bounded by C(n,j), so for n <= 100 products and sums stay well
// inside 128 bits.
i128 kernel(const std::vector<std::vector<i128>>& c, int n, int j, int w) {
    i128 acc = 0;
    for (int i = 0; i <= j; ++i) {
        if (i > w || j - i > n - w) continue;
        const i128 term = c[w][i] * c[n - w][j - i];
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

std::uint64_t transform_coeff(const std::vector<std::vector<i128>>& c,
                              const std::vector<std::uint64_t>& a, int n,
                              std::uint64_t code_size, int j) {
    i128 acc = 0;
    for (int w = 0; w <= n; ++w)
        if (a[w] != 0) acc += static_cast<i128>(a[w]) * kernel(c, n, j, w);
    if (acc < 0 || acc % static_cast<i128>(code_size) != 0)
        throw NonIntegerResult("macwilliams: coefficient is not a nonnegative integer");
    const i128 b = acc / static_cast<i128>(code_size);
    if (b > static_cast<i128>(~0ull)) throw std::overflow_error("macwilliams: coefficient overflow");
    return static_cast<std::uint64_t>(b);
}

std::vector<std::vector<i128>> transform_table(const std::vector<std::uint64_t>& a,
                                               std::uint64_t code_size) {
    if (a.empty()) throw std::invalid_argument("macwilliams: empty enumerator");
    const int n = static_cast<int>(a.size()) - 1;
    if (n > 100) throw std::invalid_argument("macwilliams: length above exact-arithmetic bound");
    if (code_size == 0 || !std::has_single_bit(code_size))
        throw std::invalid_argument("macwilliams: code size must be a power of two");
    return binomials(n);
}

} // namespace

Code Code::span(const Mat& g, std::size_t cap) {
    Code c(g.r, g.s);
    c.words_.push_back(Vec(g.r, g.s));
    std::unordered_set<Key, KeyHash> seen;
    seen.insert(key_of(c.words_.front()));

    for (const Vec& gen : g.rows) {
        // R*gen = {0, gen, u*gen, w*gen} is a subgroup; collect the scalar
        // multiples opening new cosets of the current span.
        std::vector<Vec> reps;
        for (const RingElem d : {RingElem::one(), RingElem::u(), RingElem::w()}) {
            const Vec m = gen.scaled(d);
            if (m.is_zero() || seen.contains(key_of(m))) continue;
            bool joins_existing = false;
            for (const Vec& rep : reps)
                if (seen.contains(key_of(m + rep))) {
                    joins_existing = true;
                    break;
                }
            if (!joins_existing) reps.push_back(m);
        }
        if (reps.empty()) continue;
        if (c.words_.size() * (reps.size() + 1) > cap)
            throw CapExceeded("span: code larger than enumeration cap");
        const std::size_t base = c.words_.size();
        for (const Vec& rep : reps)
            for (std::size_t i = 0; i < base; ++i) {
                const Vec w = c.words_[i] + rep;
                c.words_.push_back(w);
                seen.insert(key_of(w));
            }
    }
    std::sort(c.words_.begin(), c.words_.end());
    return c;
}

int Code::log2_size() const { return std::countr_zero(words_.size()); }

bool Code::contains(const Vec& v) const {
    return std::binary_search(words_.begin(), words_.end(), v);
}

std::vector<std::uint64_t> Code::weight_enumerator() const {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(length()) + 1, 0);
    for (const Vec& w : words_) ++a[w.weight()];
    return a;
}

int Code::min_distance() const {
    int d = -1;
    for (const Vec& w : words_) {
        if (w.is_zero()) continue;
        const int wt = w.weight();
        if (d < 0 || wt < d) d = wt;
    }
    if (d < 0) throw ZeroCode("min_distance: zero code has no nonzero word");
    return d;
}

GrayParams Code::gray_params() const { return {length(), log2_size(), min_distance()}; }

std::optional<int> Code::one_weight() const {
    std::optional<int> m;
    for (const Vec& w : words_) {
        if (w.is_zero()) continue;
        const int wt = w.weight();
        if (!m)
            m = wt;
        else if (*m != wt)
            return std::nullopt;
    }
    return m;
}

bool Code::has_zero_column() const {
    std::uint64_t bin = 0, ring = 0;
    for (const Vec& w : words_) {
        bin |= w.bin_word();
        ring |= w.p_word() | w.q_word();
    }
    const std::uint64_t bin_full = r_ == 0 ? 0 : ~0ull << (64 - r_);
    const std::uint64_t ring_full = s_ == 0 ? 0 : ~0ull << (64 - s_);
    return bin != bin_full || ring != ring_full;
}

bool Code::is_separable() const {
    std::unordered_set<Key, KeyHash> bins, rings;
    for (const Vec& w : words_) {
        bins.insert({w.bin_word(), 0, 0});
        rings.insert({0, w.p_word(), w.q_word()});
    }
    return bins.size() * rings.size() == words_.size();
}

Code dual_code(const Mat& g, std::size_t cap) { return Code::span(parity_check(g), cap); }

Code brute_dual(const Mat& g) {
    const int r = g.r, s = g.s;
    if (r + 2 * s > 24) throw std::invalid_argument("brute_dual: ambient space too large");
    Code c(r, s);
    const std::uint64_t nb = 1ull << r, nr = 1ull << s;
    for (std::uint64_t b = 0; b < nb; ++b)
        for (std::uint64_t p = 0; p < nr; ++p)
            for (std::uint64_t q = 0; q < nr; ++q) {
                const Vec v = Vec::from_words(r, s, r ? b << (64 - r) : 0,
                                              s ? p << (64 - s) : 0, s ? q << (64 - s) : 0);
                bool ok = true;
                for (const Vec& row : g.rows)
                    if (!v.dot(row).is_zero()) {
                        ok = false;
                        break;
                    }
                if (ok) c.words_.push_back(v);
            }
    std::sort(c.words_.begin(), c.words_.end());
    return c;
}

std::vector<std::uint64_t> macwilliams(const std::vector<std::uint64_t>& a,
                                       std::uint64_t code_size) {
    const auto c = transform_table(a, code_size);
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<std::uint64_t> b(a.size());
    for (int j = 0; j <= n; ++j) b[j] = transform_coeff(c, a, n, code_size, j);
    return b;
}

std::uint64_t macwilliams_coeff(const std::vector<std::uint64_t>& a, std::uint64_t code_size,
                                int j) {
    const auto c = transform_table(a, code_size);
    const int n = static_cast<int>(a.size()) - 1;
    if (j < 0 || j > n) throw std::invalid_argument("macwilliams: coefficient index out of range");
    return transform_coeff(c, a, n, code_size, j);
}

} // namespace z2z2u

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "z2z2u/ring.hpp"

namespace z2z2u {

// Element of Z2^r x R^s, bit-plane packed: one word for the binary block and
// two parallel words (p-plane, q-plane) for the ring block, so bulk add /
// scalar action / weight are word-wide XOR, AND and popcount.  Coordinate i
// of a block occupies bit (63 - i) of its word, which makes plain word
// comparison agree with left-to-right coordinate order; the canonical
// codeword order is lexicographic on (binary block, p-plane, q-plane).
// Shapes are capped at r, s <= 64 (every workload in scope is <= 35).
class Vec {
public:
    Vec() = default;
    Vec(int r, int s) : r_(r), s_(s) {
        if (r < 0 || r > 64 || s < 0 || s > 64)
            throw std::invalid_argument("Vec: block lengths must lie in 0..64");
    }

    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] int s() const { return s_; }

    [[nodiscard]] bool bin_at(int i) const { return (bin_ >> (63 - i)) & 1u; }
    [[nodiscard]] RingElem ring_at(int j) const {
        return {static_cast<bool>((p_ >> (63 - j)) & 1u), static_cast<bool>((q_ >> (63 - j)) & 1u)};
    }
    void set_bin(int i, bool v) {
        const std::uint64_t m = 1ull << (63 - i);
        bin_ = v ? (bin_ | m) : (bin_ & ~m);
    }
    void set_ring(int j, RingElem a) {
        const std::uint64_t m = 1ull << (63 - j);
        p_ = a.p() ? (p_ | m) : (p_ & ~m);
        q_ = a.q() ? (q_ | m) : (q_ & ~m);
    }

    [[nodiscard]] bool is_zero() const { return bin_ == 0 && p_ == 0 && q_ == 0; }

    // wt(v) = wt_H(binary block) + wt_L(ring block); per ring coordinate the
    // Lee weight is 1 when p = 1 (values 1, 1+u) and 2 when p = 0, q = 1 (u).
    [[nodiscard]] int weight() const {
        return std::popcount(bin_) + std::popcount(p_) + 2 * std::popcount(q_ & ~p_);
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        a.check_shape(b);
        Vec c(a.r_, a.s_);
        c.bin_ = a.bin_ ^ b.bin_;
        c.p_ = a.p_ ^ b.p_;
        c.q_ = a.q_ ^ b.q_;
        return c;
    }

    // Module action d*(a, b) = (eta(d) a, d b).  Per ring coordinate,
    // d(p + uq) has p-plane d.p & p and q-plane (d.p & q) ^ (d.q & p).
    [[nodiscard]] Vec scaled(RingElem d) const {
        Vec c(r_, s_);
        const std::uint64_t dp = d.p() ? ~0ull : 0ull;
        const std::uint64_t dq = d.q() ? ~0ull : 0ull;
        c.bin_ = bin_ & dp;
        c.p_ = p_ & dp;
        c.q_ = (q_ & dp) ^ (p_ & dq);
        return c;
    }

    // <v,w> = u * sum(a_i d_i) + sum(b_j e_j) evaluated in R.
    [[nodiscard]] RingElem dot(const Vec& o) const {
        check_shape(o);
        const bool bin_parity = std::popcount(bin_ & o.bin_) & 1;
        // Coordinatewise ring product summed: parities of its two planes.
        const bool sp = std::popcount(p_ & o.p_) & 1;
        const bool sq = (std::popcount(p_ & o.q_) + std::popcount(q_ & o.p_)) & 1;
        return RingElem(sp, sq != bin_parity);
    }

    // Simultaneous right rotation of the binary block and the ring block.
    [[nodiscard]] Vec shifted() const {
        Vec c(r_, s_);
        c.bin_ = rotate_block(bin_, r_);
        c.p_ = rotate_block(p_, s_);
        c.q_ = rotate_block(q_, s_);
        return c;
    }

    // Gray image (x, q, p^q) of length r + 2s; additive and weight-preserving.
    [[nodiscard]] std::vector<std::uint8_t> gray() const {
        std::vector<std::uint8_t> out;
        out.reserve(static_cast<std::size_t>(r_) + 2 * s_);
        for (int i = 0; i < r_; ++i) out.push_back(bin_at(i));
        for (int j = 0; j < s_; ++j) out.push_back(ring_at(j).q());
        for (int j = 0; j < s_; ++j) {
            const RingElem a = ring_at(j);
            out.push_back(a.p() != a.q());
        }
        return out;
    }

    // Raw planes, exposed for word-parallel internals (elimination, hashing).
    [[nodiscard]] std::uint64_t bin_word() const { return bin_; }
    [[nodiscard]] std::uint64_t p_word() const { return p_; }
    [[nodiscard]] std::uint64_t q_word() const { return q_; }
    static Vec from_words(int r, int s, std::uint64_t bin, std::uint64_t p, std::uint64_t q) {
        Vec c(r, s);
        c.bin_ = bin;
        c.p_ = p;
        c.q_ = q;
        return c;
    }

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.r_ == b.r_ && a.s_ == b.s_ && a.bin_ == b.bin_ && a.p_ == b.p_ && a.q_ == b.q_;
    }
    // Canonical order: binary block, then p-plane, then q-plane.
    friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
        if (auto c = a.bin_ <=> b.bin_; c != 0) return c;
        if (auto c = a.p_ <=> b.p_; c != 0) return c;
        return a.q_ <=> b.q_;
    }

private:
    void check_shape(const Vec& o) const {
        if (r_ != o.r_ || s_ != o.s_) throw std::invalid_argument("Vec: shape mismatch");
    }
    static std::uint64_t rotate_block(std::uint64_t w, int len) {
        if (len <= 1) return w;
        const std::uint64_t mask = ~0ull << (64 - len);
        return ((w >> 1) | (w << (len - 1))) & mask;
    }

    int r_ = 0, s_ = 0;
    std::uint64_t bin_ = 0, p_ = 0, q_ = 0;
};

} // namespace z2z2u

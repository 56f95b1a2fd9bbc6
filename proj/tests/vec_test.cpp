#include "doctest.h"

#include <random>
#include <stdexcept>
#include <tuple>

#include "z2z2u/ring.hpp"
#include "z2z2u/vec.hpp"

using z2z2u::RingElem;
using z2z2u::Vec;

namespace {

Vec random_vec(int r, int s, std::mt19937_64& rng) {
    Vec v(r, s);
    for (int i = 0; i < r; ++i) v.set_bin(i, rng() & 1);
    for (int j = 0; j < s; ++j) v.set_ring(j, RingElem(rng() & 1, rng() & 1));
    return v;
}

// Weight recomputed coordinate by coordinate.
int naive_weight(const Vec& v) {
    int w = 0;
    for (int i = 0; i < v.r(); ++i) w += v.bin_at(i) ? 1 : 0;
    for (int j = 0; j < v.s(); ++j) w += v.ring_at(j).lee_weight();
    return w;
}

// <v, w> = u * sum a_i d_i + sum b_j e_j, computed without bit tricks.
RingElem naive_dot(const Vec& v, const Vec& w) {
    bool bin = false;
    for (int i = 0; i < v.r(); ++i) bin ^= (v.bin_at(i) && w.bin_at(i));
    RingElem acc = bin ? RingElem::u() : RingElem::zero();
    for (int j = 0; j < v.s(); ++j) acc = acc + v.ring_at(j) * w.ring_at(j);
    return acc;
}

} // namespace

TEST_CASE("vector shapes are bounded by the 64-bit planes") {
    CHECK_NOTHROW(Vec(0, 1));
    CHECK_NOTHROW(Vec(64, 64));
    CHECK_THROWS_AS(Vec(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Vec(65, 0), std::invalid_argument);
    CHECK_THROWS_AS(Vec(0, 65), std::invalid_argument);
}

TEST_CASE("coordinate set/get round-trips") {
    Vec v(3, 4);
    v.set_bin(0, true);
    v.set_bin(2, true);
    v.set_bin(2, false);
    v.set_ring(1, RingElem::w());
    v.set_ring(3, RingElem::u());
    CHECK(v.bin_at(0));
    CHECK_FALSE(v.bin_at(1));
    CHECK_FALSE(v.bin_at(2));
    CHECK(v.ring_at(0) == RingElem::zero());
    CHECK(v.ring_at(1) == RingElem::w());
    CHECK(v.ring_at(3) == RingElem::u());
}

TEST_CASE("weight equals the coordinate-wise recomputation") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 500; ++round) {
        const int r = static_cast<int>(rng() % 9);
        const int s = static_cast<int>(rng() % 9) + (r == 0 ? 1 : 0);
        const Vec v = random_vec(r, s, rng);
        CHECK(v.weight() == naive_weight(v));
        CHECK(v.is_zero() == (v.weight() == 0));
    }
}

TEST_CASE("addition and scalar action work coordinate-wise") {
    std::mt19937_64 rng(12);
    const RingElem scalars[] = {RingElem::zero(), RingElem::one(), RingElem::u(), RingElem::w()};
    for (int round = 0; round < 200; ++round) {
        const int r = 1 + static_cast<int>(rng() % 8);
        const int s = 1 + static_cast<int>(rng() % 8);
        const Vec v = random_vec(r, s, rng);
        const Vec w = random_vec(r, s, rng);
        const Vec sum = v + w;
        for (int i = 0; i < r; ++i) CHECK(sum.bin_at(i) == (v.bin_at(i) ^ w.bin_at(i)));
        for (int j = 0; j < s; ++j) CHECK(sum.ring_at(j) == v.ring_at(j) + w.ring_at(j));
        for (const auto d : scalars) {
            // d (a | b) = (eta(d) a | d b)
            const Vec dv = v.scaled(d);
            for (int i = 0; i < r; ++i) CHECK(dv.bin_at(i) == (d.eta() && v.bin_at(i)));
            for (int j = 0; j < s; ++j) CHECK(dv.ring_at(j) == d * v.ring_at(j));
        }
    }
}

TEST_CASE("inner product matches the definition and is symmetric") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 300; ++round) {
        const int r = static_cast<int>(rng() % 6);
        const int s = 1 + static_cast<int>(rng() % 6);
        const Vec v = random_vec(r, s, rng);
        const Vec w = random_vec(r, s, rng);
        CHECK(v.dot(w) == naive_dot(v, w));
        CHECK(v.dot(w) == w.dot(v));
    }
}

TEST_CASE("shift rotates both blocks simultaneously") {
    Vec v(3, 2);
    v.set_bin(2, true);
    v.set_ring(1, RingElem::u());
    const Vec t = v.shifted();
    // (0,0,1 | 0,u) -> (1,0,0 | u,0)
    CHECK(t.bin_at(0));
    CHECK_FALSE(t.bin_at(1));
    CHECK_FALSE(t.bin_at(2));
    CHECK(t.ring_at(0) == RingElem::u());
    CHECK(t.ring_at(1) == RingElem::zero());

    std::mt19937_64 rng(14);
    for (int round = 0; round < 100; ++round) {
        const int r = 1 + static_cast<int>(rng() % 8);
        const int s = 1 + static_cast<int>(rng() % 8);
        const Vec a = random_vec(r, s, rng);
        Vec b = a.shifted();
        for (int i = 0; i < r; ++i) CHECK(b.bin_at((i + 1) % r) == a.bin_at(i));
        for (int j = 0; j < s; ++j) CHECK(b.ring_at((j + 1) % s) == a.ring_at(j));
        // 2rs shifts are a multiple of both block lengths, restoring a.
        for (int k = 1; k < r * s * 2; ++k) b = b.shifted();
        CHECK(b == a);
    }
}

TEST_CASE("Gray map sends (x, p + uq) to (x, q, p xor q)") {
    Vec v(2, 2);
    v.set_bin(0, true);
    v.set_ring(0, RingElem::one()); // p=1, q=0
    v.set_ring(1, RingElem::u());   // p=0, q=1
    const std::vector<std::uint8_t> want = {1, 0, 0, 1, 1, 1};
    CHECK(v.gray() == want);

    std::mt19937_64 rng(15);
    for (int round = 0; round < 300; ++round) {
        const int r = static_cast<int>(rng() % 5);
        const int s = 1 + static_cast<int>(rng() % 5);
        const Vec a = random_vec(r, s, rng);
        const Vec b = random_vec(r, s, rng);
        // Additivity and isometry.
        const auto ga = a.gray(), gb = b.gray(), gsum = (a + b).gray();
        REQUIRE(ga.size() == static_cast<std::size_t>(r + 2 * s));
        int hamming = 0;
        for (std::size_t i = 0; i < ga.size(); ++i) {
            CHECK(gsum[i] == (ga[i] ^ gb[i]));
            hamming += ga[i] ^ gb[i];
        }
        CHECK(hamming == (a + b).weight());
    }
}

TEST_CASE("word packing round-trips and orders canonically") {
    std::mt19937_64 rng(16);
    for (int round = 0; round < 200; ++round) {
        const int r = 1 + static_cast<int>(rng() % 8);
        const int s = 1 + static_cast<int>(rng() % 8);
        const Vec a = random_vec(r, s, rng);
        const Vec b = Vec::from_words(r, s, a.bin_word(), a.p_word(), a.q_word());
        CHECK(a == b);
        const Vec c = random_vec(r, s, rng);
        const auto key = [](const Vec& v) {
            return std::tuple(v.bin_word(), v.p_word(), v.q_word());
        };
        CHECK((a < c) == (key(a) < key(c)));
    }
    // Coordinate 0 is the most significant position of each plane.
    Vec lo(2, 1), hi(2, 1);
    lo.set_bin(1, true);
    hi.set_bin(0, true);
    CHECK(lo < hi);
}

#include "doctest.h"

#include <random>
#include <stdexcept>

#include "z2z2u/errors.hpp"
#include "z2z2u/poly.hpp"

using z2z2u::Poly;

namespace {
Poly P(const char* text) {
    auto p = Poly::parse(text);
    REQUIRE_MESSAGE(p.has_value(), text);
    return *p;
}
} // namespace

TEST_CASE("parse accepts monomial sums and LSB-first bitstrings") {
    CHECK(P("0") == Poly::zero());
    CHECK(P("1") == Poly::one());
    CHECK(P("x") == Poly::x());
    CHECK(P("1+x+x^2") == Poly(0b111));
    CHECK(P("x^3+1") == Poly(0b1001));
    CHECK(P("1011") == Poly(0b1101)); // bits left to right are x^0, x^1, ...
    CHECK(P(" 1 + x^2 ") == Poly(0b101));
    CHECK_FALSE(Poly::parse("x^64").has_value());
    CHECK_FALSE(Poly::parse("y").has_value());
    CHECK_FALSE(Poly::parse("1+").has_value());
    CHECK_FALSE(Poly::parse("").has_value());
    CHECK_FALSE(Poly::parse("102").has_value());
}

TEST_CASE("to_string round-trips through parse") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 200; ++round) {
        const Poly p(rng() & 0xffff);
        const auto back = Poly::parse(p.to_string());
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
    CHECK(Poly::zero().to_string() == "0");
    CHECK(Poly(0b111).to_string() == "1+x+x^2");
}

TEST_CASE("degree distinguishes zero; factories build the advertised masks") {
    CHECK_FALSE(Poly::zero().degree().has_value());
    CHECK(Poly::one().degree() == 0);
    CHECK(Poly::xn_minus_1(7).degree() == 7);
    CHECK(Poly::xn_minus_1(7) == P("1+x^7"));
    CHECK(Poly::all_ones(7) == P("1+x+x^2+x^3+x^4+x^5+x^6"));
    CHECK_THROWS_AS(Poly::xn_minus_1(0), std::invalid_argument);
    CHECK_THROWS_AS(Poly::xn_minus_1(64), std::invalid_argument);
}

TEST_CASE("multiplication is carryless and overflow-checked") {
    CHECK(P("1+x") * P("1+x") == P("1+x^2"));
    CHECK(P("1+x") * P("1+x+x^2") == P("1+x^3"));
    CHECK(P("1+x+x^3") * P("1+x^2+x^3") == Poly::all_ones(7));
    const Poly big(std::uint64_t{1} << 63);
    CHECK_THROWS_AS(big * Poly::x(), std::overflow_error);

    std::mt19937_64 rng(22);
    for (int round = 0; round < 200; ++round) {
        const Poly a(rng() & 0x7fffffff), b(rng() & 0x7fffffff), c(rng() & 0x7fffffff);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("divmod and gcd satisfy the Euclidean identities") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 300; ++round) {
        const Poly a(rng() & 0xffffffff);
        const Poly m((rng() & 0xffff) | 1);
        const auto [q, rem] = z2z2u::poly_divmod(a, m);
        CHECK(q * m + rem == a);
        if (!rem.is_zero()) CHECK(*rem.degree() < *m.degree());
        CHECK(a % m == rem);
        CHECK(z2z2u::poly_divides(m, a) == rem.is_zero());

        const Poly g = z2z2u::poly_gcd(a, m);
        CHECK(z2z2u::poly_divides(g, a));
        CHECK(z2z2u::poly_divides(g, m));
    }
    CHECK(z2z2u::poly_gcd(Poly::zero(), P("1+x")) == P("1+x"));
    CHECK_THROWS_AS(z2z2u::poly_gcd(Poly::zero(), Poly::zero()), std::domain_error);
    CHECK(z2z2u::poly_gcd(P("1+x^2"), P("1+x^3")) == P("1+x"));
}

TEST_CASE("modular multiplication folds x^n to 1") {
    CHECK(z2z2u::poly_mul_mod(P("x^6"), P("x^3"), 7) == P("x^2"));
    CHECK(z2z2u::poly_mul_mod(Poly::all_ones(7), P("1+x"), 7) == Poly::zero());
    CHECK(z2z2u::poly_mul_mod(Poly::all_ones(7), Poly::all_ones(7), 7) == Poly::all_ones(7));
    std::mt19937_64 rng(24);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const std::uint64_t lim = (n == 64) ? ~0ull : (1ull << n) - 1;
        const Poly a(rng() & lim), b(rng() & lim);
        CHECK(z2z2u::poly_mul_mod(a, b, n) == (a * b) % Poly::xn_minus_1(n));
    }
}

TEST_CASE("cofactor products reduce double-width results") {
    // ((x^7-1)/all_ones) * l mod f, with (x^7-1)/all_ones = 1+x.
    CHECK(z2z2u::cofactor_product_mod(7, Poly::all_ones(7), P("1+x^2"), P("1+x+x^3")) ==
          (P("1+x") * P("1+x^2")) % P("1+x+x^3"));
    // The 45-coordinate construction: a of degree 11 against x^15-1.
    const Poly a15 = P("1+x^3+x^4+x^6+x^8+x^9+x^10+x^11");
    CHECK(z2z2u::cofactor_product_mod(15, a15, a15, Poly::xn_minus_1(15)) == Poly::zero());
    CHECK_THROWS_AS(z2z2u::cofactor_product_mod(15, P("1+x"), Poly::one(), Poly::zero()),
                    std::domain_error);
}

TEST_CASE("x^n - 1 factors by trial division") {
    const auto f7 = z2z2u::factor_xn_minus_1(7);
    REQUIRE(f7.size() == 3);
    CHECK(f7[0].first == P("1+x"));
    CHECK(f7[1].first == P("1+x+x^3"));
    CHECK(f7[2].first == P("1+x^2+x^3"));
    for (const auto& [p, mult] : f7) CHECK(mult == 1);

    const auto f9 = z2z2u::factor_xn_minus_1(9);
    REQUIRE(f9.size() == 3);
    CHECK(f9[0].first == P("1+x"));
    CHECK(f9[1].first == P("1+x+x^2"));
    CHECK(f9[2].first == P("1+x^3+x^6"));

    // Even lengths repeat factors; 15 splits into five distinct irreducibles.
    const auto f2 = z2z2u::factor_xn_minus_1(2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == P("1+x"));
    CHECK(f2[0].second == 2);
    CHECK(z2z2u::factor_xn_minus_1(15).size() == 5);

    for (int n : {1, 2, 3, 5, 7, 9, 12, 15, 21, 31}) {
        Poly prod = Poly::one();
        for (const auto& [p, mult] : z2z2u::factor_xn_minus_1(n))
            for (int i = 0; i < mult; ++i) prod = prod * p;
        CHECK(prod == Poly::xn_minus_1(n));
    }
}

TEST_CASE("divisor lists are complete, sorted and capped") {
    const auto d7 = z2z2u::divisors_of_xn_minus_1(7);
    CHECK(d7.size() == 8);
    CHECK(d7.front() == Poly::one());
    CHECK(d7.back() == Poly::xn_minus_1(7));
    for (std::size_t i = 0; i < d7.size(); ++i) {
        CHECK(z2z2u::poly_divides(d7[i], Poly::xn_minus_1(7)));
        if (i > 0) {
            const auto prev = std::pair(*d7[i - 1].degree(), d7[i - 1].mask());
            const auto cur = std::pair(*d7[i].degree(), d7[i].mask());
            CHECK(prev < cur);
        }
    }
    CHECK(z2z2u::divisors_of_xn_minus_1(15).size() == 32);
    CHECK(z2z2u::divisors_of_xn_minus_1(9).size() == 8);
    CHECK_THROWS_AS(z2z2u::divisors_of_xn_minus_1(15, 16), z2z2u::CapExceeded);
}

TEST_CASE("ring polynomial products track both components") {
    using z2z2u::RingPoly;
    const RingPoly ga{P("1+x"), P("1")};     // (1+x) + u
    const RingPoly hb{P("x"), P("1+x^2")};   // x + u(1+x^2)
    const auto prod = z2z2u::ring_poly_mul_mod(ga, hb, 5);
    CHECK(prod.p == z2z2u::poly_mul_mod(P("1+x"), P("x"), 5));
    CHECK(prod.q == z2z2u::poly_mul_mod(P("1+x"), P("1+x^2"), 5) +
                        z2z2u::poly_mul_mod(P("1"), P("x"), 5));
}

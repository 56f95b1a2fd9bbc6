#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z2z2u {

// Polynomial over GF(2), packed LSB-first: bit i of the mask is the
// coefficient of x^i.  Degrees are capped at 63, enough for every quotient
// ring x^n - 1 in scope (n <= 63); products that would overflow the cap
// throw.  The zero polynomial has no degree (nullopt marker).
class Poly {
public:
    constexpr Poly() = default;
    constexpr explicit Poly(std::uint64_t mask) : m_(mask) {}

    static constexpr Poly zero() { return Poly(0); }
    static constexpr Poly one() { return Poly(1); }
    static constexpr Poly x() { return Poly(2); }
    static Poly xn_minus_1(int n);  // x^n + 1 (characteristic 2)
    static Poly all_ones(int n);    // 1 + x + ... + x^(n-1)

    [[nodiscard]] constexpr std::uint64_t mask() const { return m_; }
    [[nodiscard]] constexpr bool is_zero() const { return m_ == 0; }
    [[nodiscard]] std::optional<int> degree() const;
    [[nodiscard]] bool coeff(int i) const { return (m_ >> i) & 1u; }

    friend constexpr Poly operator+(Poly a, Poly b) { return Poly(a.m_ ^ b.m_); }
    friend Poly operator*(Poly a, Poly b); // throws std::overflow_error past degree 63
    friend Poly operator%(Poly a, Poly m);
    friend constexpr bool operator==(Poly a, Poly b) = default;

    // Sum-of-monomials form "1+x^2+x^3" or LSB-first bitstring "1011".
    static std::optional<Poly> parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;

private:
    std::uint64_t m_ = 0;
};

// Quotient and remainder of a by m; m must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, Poly m);

// Monic gcd via Euclid; defined unless both arguments are zero.
Poly poly_gcd(Poly a, Poly b);

bool poly_divides(Poly d, Poly a); // d | a

// Product reduced mod x^n - 1 (x^n == 1 folds high bits down).
Poly poly_mul_mod(Poly a, Poly b, int n);

// ((x^s - 1) / a) * l reduced mod f; the product may pass degree 63, so it
// is carried double-width before reduction.  f must be nonzero.
Poly cofactor_product_mod(int s, Poly a, Poly l, Poly f);

// Irreducible factorization of x^n - 1 by trial division, (factor,
// multiplicity) pairs in increasing (degree, mask) order.  For odd n the
// factorization is checked squarefree.
std::vector<std::pair<Poly, int>> factor_xn_minus_1(int n);

// All monic divisors of x^n - 1, sorted by (degree, mask).  Throws
// CapExceeded when the divisor count would pass the cap.
std::vector<Poly> divisors_of_xn_minus_1(int n, std::size_t cap = 1u << 20);

// Polynomial g + u*a over R, as a pair of GF(2) parts.
struct RingPoly {
    Poly p, q; // value p + u*q
};

// (p1+uq1)(p2+uq2) = p1 p2 + u(p1 q2 + q1 p2), each part mod x^n - 1.
RingPoly ring_poly_mul_mod(const RingPoly& a, const RingPoly& b, int n);

} // namespace z2z2u

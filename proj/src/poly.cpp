#include "z2z2u/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "z2z2u/errors.hpp"

namespace z2z2u {

namespace {

using u128 = unsigned __int128;

// Carryless 64x64 -> 128 multiplication.
u128 clmul(std::uint64_t a, std::uint64_t b) {
    u128 acc = 0;
    while (a) {
        const int i = std::countr_zero(a);
        acc ^= static_cast<u128>(b) << i;
        a &= a - 1;
    }
    return acc;
}

int deg128(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi) return 64 + 63 - std::countl_zero(hi);
    const auto lo = static_cast<std::uint64_t>(v);
    return 63 - std::countl_zero(lo);
}

// Remainder of a double-width polynomial by a nonzero m of degree <= 63.
std::uint64_t mod128(u128 a, Poly m) {
    const int dm = m.degree().value();
    while (a >> dm != 0 && deg128(a) >= dm) {
        const int da = deg128(a);
        if (da < dm) break;
        a ^= static_cast<u128>(m.mask()) << (da - dm);
    }
    return static_cast<std::uint64_t>(a);
}

} // namespace

Poly Poly::xn_minus_1(int n) {
    if (n < 1 || n > 63) throw std::invalid_argument("Poly: x^n - 1 needs 1 <= n <= 63");
    return Poly((1ull << n) | 1ull);
}

Poly Poly::all_ones(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("Poly: all-ones length must lie in 1..64");
    return Poly(n == 64 ? ~0ull : (1ull << n) - 1);
}

std::optional<int> Poly::degree() const {
    if (m_ == 0) return std::nullopt;
    return 63 - std::countl_zero(m_);
}

Poly operator*(Poly a, Poly b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    const u128 prod = clmul(a.mask(), b.mask());
    if (prod >> 64 != 0) throw std::overflow_error("Poly: product passes degree 63");
    return Poly(static_cast<std::uint64_t>(prod));
}

Poly operator%(Poly a, Poly m) {
    return poly_divmod(a, m).second;
}

std::pair<Poly, Poly> poly_divmod(Poly a, Poly m) {
    if (m.is_zero()) throw std::domain_error("Poly: division by zero");
    const int dm = m.degree().value();
    std::uint64_t rem = a.mask(), quot = 0;
    while (rem != 0) {
        const int dr = 63 - std::countl_zero(rem);
        if (dr < dm) break;
        quot |= 1ull << (dr - dm);
        rem ^= m.mask() << (dr - dm);
    }
    return {Poly(quot), Poly(rem)};
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("Poly: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        const Poly r = a % b;
        a = b;
        b = r;
    }
    return a; // monic automatically over GF(2)
}

bool poly_divides(Poly d, Poly a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

Poly poly_mul_mod(Poly a, Poly b, int n) {
    if (n < 1 || n > 63) throw std::invalid_argument("Poly: modulus x^n - 1 needs 1 <= n <= 63");
    u128 acc = clmul(a.mask(), b.mask());
    // x^n == 1: fold every bit k >= n down to bit k - n.
    const u128 low = (static_cast<u128>(1) << n) - 1;
    while (acc >> n != 0) acc = (acc & low) ^ (acc >> n);
    return Poly(static_cast<std::uint64_t>(acc));
}

Poly cofactor_product_mod(int s, Poly a, Poly l, Poly f) {
    if (f.is_zero()) throw std::domain_error("Poly: reduction by zero");
    const auto [cof, rem] = poly_divmod(Poly::xn_minus_1(s), a);
    if (!rem.is_zero()) throw std::domain_error("Poly: a does not divide x^s - 1");
    const u128 prod = clmul(cof.mask(), l.mask());
    return Poly(mod128(prod, f));
}

std::optional<Poly> Poly::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) return std::nullopt;
    // A multi-character run of 0/1 is the LSB-first bitstring form.
    if (t.size() > 1 && t.find_first_not_of("01") == std::string::npos) {
        if (t.size() > 64) return std::nullopt;
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] == '1') m |= 1ull << i;
        return Poly(m);
    }
    if (t == "0") return Poly::zero();
    if (t.back() == '+') return std::nullopt;
    std::uint64_t m = 0;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t end = t.find('+', pos);
        if (end == std::string::npos) end = t.size();
        const std::string_view term(t.data() + pos, end - pos);
        if (term.empty()) return std::nullopt;
        if (term == "1") {
            m ^= 1ull;
        } else if (term == "x") {
            m ^= 2ull;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            int e = 0;
            for (char c : term.substr(2)) {
                if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
                e = e * 10 + (c - '0');
                if (e > 63) return std::nullopt;
            }
            m ^= 1ull << e;
        } else {
            return std::nullopt;
        }
        pos = end + 1;
    }
    return Poly(m);
}

std::string Poly::to_string() const {
    if (m_ == 0) return "0";
    std::string out;
    for (int i = 0; i <= 63; ++i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

std::vector<std::pair<Poly, int>> factor_xn_minus_1(int n) {
    Poly rest = Poly::xn_minus_1(n);
    std::vector<std::pair<Poly, int>> factors;
    // Trial division by monic polynomials of increasing (degree, mask); every
    // divisor found this way is irreducible because smaller factors are gone.
    for (int d = 1; d <= n && rest.degree().value_or(0) > 0; ++d) {
        for (std::uint64_t low = 0; low < (1ull << d); ++low) {
            const Poly cand((1ull << d) | low);
            int mult = 0;
            while (poly_divides(cand, rest)) {
                rest = poly_divmod(rest, cand).first;
                ++mult;
            }
            if (mult > 0) factors.emplace_back(cand, mult);
            if (rest.degree().value_or(0) == 0) break;
        }
    }
    if (n % 2 == 1)
        for (const auto& [f, e] : factors)
            if (e != 1) throw std::logic_error("factor_xn_minus_1: x^n - 1 must be squarefree for odd n");
    return factors;
}

std::vector<Poly> divisors_of_xn_minus_1(int n, std::size_t cap) {
    const auto factors = factor_xn_minus_1(n);
    std::size_t count = 1;
    for (const auto& [f, e] : factors) {
        count *= static_cast<std::size_t>(e) + 1;
        if (count > cap) throw CapExceeded("divisors_of_xn_minus_1: divisor count passes cap");
    }
    std::vector<Poly> divs{Poly::one()};
    for (const auto& [f, e] : factors) {
        const std::size_t base = divs.size();
        Poly power = Poly::one();
        for (int i = 1; i <= e; ++i) {
            power = power * f;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
        }
    }
    std::sort(divs.begin(), divs.end(), [](Poly a, Poly b) {
        const int da = a.degree().value(), db = b.degree().value();
        return da != db ? da < db : a.mask() < b.mask();
    });
    return divs;
}

RingPoly ring_poly_mul_mod(const RingPoly& a, const RingPoly& b, int n) {
    return {poly_mul_mod(a.p, b.p, n),
            poly_mul_mod(a.p, b.q, n) + poly_mul_mod(a.q, b.p, n)};
}

} // namespace z2z2u

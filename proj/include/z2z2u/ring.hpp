#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace z2z2u {

// Element p + u*q of the four-element ring R = Z2 + uZ2 with u^2 = 0.
// Addition is componentwise XOR of (p,q); the units are exactly {1, 1+u}
// and both are self-inverse.  eta : R -> Z2, p + uq |-> p is a ring
// homomorphism.  Display tokens: 0, 1, u, w (w = 1+u; "1+u" accepted on
// input).
class RingElem {
public:
    constexpr RingElem() = default;
    constexpr RingElem(bool p, bool q) : p_(p), q_(q) {}

    static constexpr RingElem zero() { return {false, false}; }
    static constexpr RingElem one() { return {true, false}; }
    static constexpr RingElem u() { return {false, true}; }
    static constexpr RingElem w() { return {true, true}; } // 1+u

    [[nodiscard]] constexpr bool p() const { return p_; }
    [[nodiscard]] constexpr bool q() const { return q_; }

    [[nodiscard]] constexpr bool eta() const { return p_; }
    [[nodiscard]] constexpr bool is_zero() const { return !p_ && !q_; }
    [[nodiscard]] constexpr bool is_unit() const { return p_; } // eta(a) = 1

    // Lee weight: 0 -> 0, 1 -> 1, u -> 2, 1+u -> 1.
    [[nodiscard]] constexpr int lee_weight() const { return p_ ? 1 : (q_ ? 2 : 0); }

    // Units are self-inverse; inverting a non-unit is a caller error.
    [[nodiscard]] constexpr RingElem inverse() const {
        if (!is_unit()) throw std::domain_error("RingElem: only 1 and 1+u are invertible");
        return *this;
    }

    friend constexpr RingElem operator+(RingElem a, RingElem b) {
        return {a.p_ != b.p_, a.q_ != b.q_};
    }
    // (p1+uq1)(p2+uq2) = p1 p2 + u(p1 q2 + q1 p2), since u^2 = 0.
    friend constexpr RingElem operator*(RingElem a, RingElem b) {
        return {a.p_ && b.p_, (a.p_ && b.q_) != (a.q_ && b.p_)};
    }
    friend constexpr bool operator==(RingElem a, RingElem b) = default;

    [[nodiscard]] constexpr std::string_view token() const {
        return p_ ? (q_ ? "w" : "1") : (q_ ? "u" : "0");
    }

    static constexpr std::optional<RingElem> parse(std::string_view tok) {
        if (tok == "0") return zero();
        if (tok == "1") return one();
        if (tok == "u") return u();
        if (tok == "w" || tok == "1+u") return w();
        return std::nullopt;
    }

private:
    bool p_ = false, q_ = false;
};

inline std::ostream& operator<<(std::ostream& os, RingElem a) { return os << a.token(); }

} // namespace z2z2u

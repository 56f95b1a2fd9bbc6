#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2z2u/code.hpp"
#include "z2z2u/matrix.hpp"
#include "z2z2u/poly.hpp"

namespace z2z2u {

// Generator data of a cyclic code C = <(f, 0), (l, g + ua)> in
// R_{r,s} = Z2[x]/(x^r - 1) x R[x]/(x^s - 1).  Absent f stands for
// f = x^r - 1, so the first generator vanishes; g = 0 stands for the zero
// residue of x^s - 1, leaving (l, ua) as the second generator.
struct CyclicGens {
    int r = 0;
    int s = 0;
    std::optional<Poly> f;
    Poly l = Poly::zero();
    Poly g = Poly::zero();
    Poly a = Poly::zero();
};

struct CyclicValidation {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    [[nodiscard]] bool ok() const { return errors.empty(); }
};

// Checks the generator conditions: 1 <= r,s <= 63 with s odd, f | x^r - 1,
// a | g | x^s - 1 with a nonzero, deg l < deg f, and
// f | ((x^s - 1)/a) l.  The companion inequality f != ((x^s - 1)/a) l is
// enforced only when f was given explicitly; with f implicit it is reported
// as a warning, since the classified one-weight generators themselves attain
// equality against the implicit f = x^r - 1.
CyclicValidation validate(const CyclicGens& gens);

// validate(), throwing ValidationFailed on any error.
void require_valid(const CyclicGens& gens);

// Minimal R-module spanning set: S1 = x^i (f, 0) for i < deg h_f,
// S2 = x^i (l, g + ua) for i < deg h_g, S3 = x^i (h_g l, u h_g a) for
// i < deg b, with f h_f = x^r - 1, g h_g = x^s - 1 and g = a b.
Mat spanning_set(const CyclicGens& gens);

// Type by the degree formula (r, s; r - t4, s - t2, t2 + t4 - t1 - t3) with
// t1 = deg f, t2 = deg g, t3 = deg a and t4 = deg gcd(f, ((x^s - 1)/g) l).
CodeType cyclic_type(const CyclicGens& gens);

Code cyclic_span(const CyclicGens& gens, std::size_t cap = kDefaultEnumCap);

// True when the simultaneous right rotation maps the code into itself.
bool is_shift_closed(const Code& c);

// The classified one-weight generator set for r = s: l = g = a =
// (x^s - 1)/(x + 1), giving type (s, s; 0, 1, 0) and weight 2s.
CyclicGens one_weight_cyclic(int s);

struct CyclicSearchHit {
    CyclicGens gens;
    CodeType type;
    int m = 0;
};

struct CyclicSearchResult {
    std::vector<CyclicSearchHit> hits;
    bool complete = true;
    std::string cap_reason; // why the search stopped early, when !complete
};

// All one-weight cyclic codes <(l, g + ua)> with implicit f, scanned over
// l (by (degree, bits)), then divisors g of x^s - 1 -- with g = x^s - 1
// standing for the zero residue -- and divisors a | g.  Distinct generator
// tuples spanning the same code are reported once (first tuple in scan
// order wins).  pin_l / pin_a freeze that polynomial instead of scanning
// it; scanning l needs r <= 20.  tuple_cap bounds the number of (l, g, a)
// candidates, enum_cap each candidate's span; hitting either cap returns
// the hits found so far with complete = false.
CyclicSearchResult cyclic_one_weight_search(int r, int s,
                                            std::size_t enum_cap = kDefaultEnumCap,
                                            std::size_t tuple_cap = std::size_t{1} << 20,
                                            std::optional<Poly> pin_l = std::nullopt,
                                            std::optional<Poly> pin_a = std::nullopt);

} // namespace z2z2u

#include "z2z2u/cyclic.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "z2z2u/errors.hpp"
#include "z2z2u/ring.hpp"

namespace z2z2u {

namespace {

// Generator data with both shorthand cases resolved: f is the literal
// polynomial (x^r - 1 when implicit) and g = 0 is the zero residue.
struct Canon {
    Poly f, l, g, a;
    Poly hf, hg, b;
    bool f_explicit = false;
};

Canon canon(const CyclicGens& gens) {
    const Poly xr = Poly::xn_minus_1(gens.r), xs = Poly::xn_minus_1(gens.s);
    Canon c;
    c.f = gens.f.value_or(xr);
    c.f_explicit = gens.f.has_value() && *gens.f != xr;
    c.l = gens.l;
    c.g = gens.g == xs ? Poly::zero() : gens.g;
    c.a = gens.a;
    c.hf = poly_divmod(xr, c.f).first;
    c.hg = c.g.is_zero() ? Poly::one() : poly_divmod(xs, c.g).first;
    c.b = c.g.is_zero() ? poly_divmod(xs, c.a).first : poly_divmod(c.g, c.a).first;
    return c;
}

Vec to_vec(int r, int s, Poly bin, Poly p, Poly q) {
    Vec v(r, s);
    for (int i = 0; i < r; ++i) v.set_bin(i, bin.coeff(i));
    for (int j = 0; j < s; ++j) v.set_ring(j, RingElem(p.coeff(j), q.coeff(j)));
    return v;
}

Poly monomial(int i) { return Poly(std::uint64_t{1} << i); }

// Sorted span plus the common weight, aborting on the first word whose
// weight differs -- a mixed prefix already disqualifies the candidate, so
// most non-hits cost only a handful of words.  nullopt = not one-weight.
std::optional<std::pair<std::vector<Vec>, int>> one_weight_span(const Mat& g, std::size_t cap) {
    std::vector<Vec> words{Vec(g.r, g.s)};
    int m = -1;
    const auto contains = [&](const Vec& v) {
        return std::find(words.begin(), words.end(), v) != words.end();
    };
    for (const Vec& gen : g.rows) {
        std::vector<Vec> reps;
        for (const RingElem d : {RingElem::one(), RingElem::u(), RingElem::w()}) {
            const Vec cand = gen.scaled(d);
            if (cand.is_zero() || contains(cand)) continue;
            bool joins_existing = false;
            for (const Vec& rep : reps)
                if (contains(cand + rep)) {
                    joins_existing = true;
                    break;
                }
            if (!joins_existing) reps.push_back(cand);
        }
        if (reps.empty()) continue;
        if (words.size() * (reps.size() + 1) > cap)
            throw CapExceeded("span: code larger than enumeration cap");
        const std::size_t base = words.size();
        for (const Vec& rep : reps)
            for (std::size_t i = 0; i < base; ++i) {
                const Vec w = words[i] + rep;
                const int wt = w.weight();
                if (m < 0)
                    m = wt;
                else if (wt != m)
                    return std::nullopt;
                words.push_back(w);
            }
    }
    if (m < 0) return std::nullopt; // zero code
    std::sort(words.begin(), words.end());
    return std::pair{std::move(words), m};
}

} // namespace

CyclicValidation validate(const CyclicGens& gens) {
    CyclicValidation v;
    const int r = gens.r, s = gens.s;
    if (r < 1 || r > 63) v.errors.push_back("r must lie in 1..63");
    if (s < 1 || s > 63) v.errors.push_back("s must lie in 1..63");
    if (!v.errors.empty()) return v;
    if (s % 2 == 0) {
        // x^s - 1 must be squarefree for the spanning-set and type theory.
        v.errors.push_back("s must be odd");
        return v;
    }
    const Poly xr = Poly::xn_minus_1(r), xs = Poly::xn_minus_1(s);

    const Poly f = gens.f.value_or(xr);
    if (f.is_zero())
        v.errors.push_back("f must be nonzero");
    else if (!poly_divides(f, xr))
        v.errors.push_back("f must divide x^r - 1");

    const Poly g = gens.g == xs ? Poly::zero() : gens.g;
    if (!g.is_zero() && !poly_divides(g, xs)) v.errors.push_back("g must divide x^s - 1");

    const Poly a = gens.a;
    if (a.is_zero() || a == xs)
        v.errors.push_back("a must be a nonzero divisor of x^s - 1 with degree below s");
    else if (!poly_divides(a, xs))
        v.errors.push_back("a must divide x^s - 1");
    else if (!poly_divides(a, g.is_zero() ? xs : g))
        v.errors.push_back("a must divide g");

    if (!gens.l.is_zero() && !f.is_zero() &&
        gens.l.degree().value() >= f.degree().value_or(0))
        v.errors.push_back("deg l must be below deg f");

    if (!v.errors.empty()) return v;

    if (!cofactor_product_mod(s, a, gens.l, f).is_zero())
        v.errors.push_back("f must divide ((x^s - 1)/a) l");

    // The uniqueness condition f != ((x^s - 1)/a) l.
    bool equal = false;
    if (!gens.l.is_zero()) {
        const Poly cof = poly_divmod(xs, a).first;
        const int dp = cof.degree().value() + gens.l.degree().value();
        if (dp == f.degree().value() && dp <= 63) equal = cof * gens.l == f;
    }
    if (equal) {
        if (gens.f.has_value() && *gens.f != xr)
            v.errors.push_back("f must differ from ((x^s - 1)/a) l");
        else
            v.warnings.push_back("((x^s - 1)/a) l equals x^r - 1, so the "
                                 "representation is not the canonical one");
    }
    return v;
}

void require_valid(const CyclicGens& gens) {
    const CyclicValidation v = validate(gens);
    if (v.ok()) return;
    std::string msg = "cyclic generators invalid:";
    for (const auto& e : v.errors) msg += " " + e + ";";
    throw ValidationFailed(msg);
}

Mat spanning_set(const CyclicGens& gens) {
    require_valid(gens);
    const int r = gens.r, s = gens.s;
    const Canon c = canon(gens);

    Mat m(r, s);
    for (int i = 0; i < c.hf.degree().value_or(0); ++i)
        m.append(to_vec(r, s, poly_mul_mod(c.f, monomial(i), r), Poly::zero(), Poly::zero()));
    for (int i = 0; i < c.hg.degree().value_or(0); ++i)
        m.append(to_vec(r, s, poly_mul_mod(c.l, monomial(i), r),
                        poly_mul_mod(c.g, monomial(i), s), poly_mul_mod(c.a, monomial(i), s)));
    // Third block: x^i (h_g l, u h_g a); h_g l is reduced double-width since
    // the plain product can pass degree 63.
    const Poly hgl = c.g.is_zero() ? c.l % Poly::xn_minus_1(r)
                                   : cofactor_product_mod(s, c.g, c.l, Poly::xn_minus_1(r));
    const Poly hga = poly_mul_mod(c.hg, c.a, s);
    for (int i = 0; i < c.b.degree().value_or(0); ++i)
        m.append(to_vec(r, s, poly_mul_mod(hgl, monomial(i), r), Poly::zero(),
                        poly_mul_mod(hga, monomial(i), s)));
    return m;
}

CodeType cyclic_type(const CyclicGens& gens) {
    require_valid(gens);
    const Canon c = canon(gens);
    const int t1 = c.f.degree().value();
    const int t2 = c.g.is_zero() ? gens.s : c.g.degree().value();
    const int t3 = c.a.degree().value();
    // t4 = deg gcd(f, ((x^s - 1)/g) l), with (x^s - 1)/g read as 1 when g is
    // the zero residue; the product is reduced mod f before the gcd.
    const Poly red = c.g.is_zero() ? c.l % c.f
                                   : cofactor_product_mod(gens.s, c.g, c.l, c.f);
    const int t4 = poly_gcd(c.f, red).degree().value();
    return {gens.r, gens.s, gens.r - t4, gens.s - t2, t2 + t4 - t1 - t3};
}

Code cyclic_span(const CyclicGens& gens, std::size_t cap) {
    return Code::span(spanning_set(gens), cap);
}

bool is_shift_closed(const Code& c) {
    for (const Vec& w : c.words())
        if (!c.contains(w.shifted())) return false;
    return true;
}

CyclicGens one_weight_cyclic(int s) {
    if (s < 1 || s > 63 || s % 2 == 0)
        throw std::invalid_argument("one_weight_cyclic: s must be odd, in 1..63");
    const Poly ones = Poly::all_ones(s);
    return {s, s, std::nullopt, ones, ones, ones};
}

CyclicSearchResult cyclic_one_weight_search(int r, int s, std::size_t enum_cap,
                                            std::size_t tuple_cap, std::optional<Poly> pin_l,
                                            std::optional<Poly> pin_a) {
    if (r < 1 || r > 63 || s < 1 || s > 63 || s % 2 == 0)
        throw std::invalid_argument("cyclic_one_weight_search: need 1 <= r,s <= 63 and odd s");
    if (!pin_l && r > 20)
        throw std::invalid_argument("cyclic_one_weight_search: scanning l needs r <= 20");

    CyclicSearchResult res;
    const Poly xs = Poly::xn_minus_1(s);
    std::vector<Poly> divs;
    try {
        divs = divisors_of_xn_minus_1(s, tuple_cap);
    } catch (const CapExceeded& e) {
        res.complete = false;
        res.cap_reason = e.what();
        return res;
    }

    // Candidates for a per choice of g; g = x^s - 1 denotes the zero residue.
    auto a_fits = [&](const Poly& a, const Poly& g) {
        return a != xs && (!pin_a || a == *pin_a) && (g == xs || poly_divides(a, g));
    };

    // Budget check before scanning.
    unsigned long long per_l = 0;
    for (const Poly& g : divs)
        for (const Poly& a : divs)
            if (a_fits(a, g)) ++per_l;
    const unsigned long long n_l = pin_l ? 1 : (1ull << r);
    if (per_l != 0 && n_l > tuple_cap / per_l) {
        res.complete = false;
        res.cap_reason = "candidate tuple count " + std::to_string(n_l) + " * " +
                         std::to_string(per_l) + " exceeds cap " + std::to_string(tuple_cap);
        return res;
    }

    // Masks ascend exactly in (degree, bits) order; divisors come sorted the
    // same way, so hits appear canonically ordered.
    std::set<std::vector<Vec>> seen;
    for (unsigned long long lm = 0; lm < n_l; ++lm) {
        const Poly l = pin_l ? *pin_l : Poly(lm);
        for (const Poly& g : divs) {
            for (const Poly& a : divs) {
                if (!a_fits(a, g)) continue;
                const CyclicGens gens{r, s, std::nullopt, l,
                                      g == xs ? Poly::zero() : g, a};
                if (!validate(gens).ok()) continue;
                std::optional<std::pair<std::vector<Vec>, int>> span;
                try {
                    span = one_weight_span(spanning_set(gens), enum_cap);
                } catch (const CapExceeded& e) {
                    res.complete = false;
                    res.cap_reason = "at l=" + gens.l.to_string() + " g=" +
                                     gens.g.to_string() + " a=" + gens.a.to_string() + ": " +
                                     e.what();
                    return res;
                }
                if (!span) continue;
                if (!seen.insert(span->first).second) continue;
                res.hits.push_back({gens, cyclic_type(gens), span->second});
            }
        }
    }
    return res;
}

} // namespace z2z2u

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "z2z2u/code.hpp"
#include "z2z2u/cyclic.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/matrix.hpp"
#include "z2z2u/poly.hpp"
#include "z2z2u/ring.hpp"

using namespace z2z2u;

namespace {

Poly P(const char* text) {
    const auto p = Poly::parse(text);
    REQUIRE(p.has_value());
    return *p;
}

bool has_error(const CyclicValidation& v, const char* msg) {
    return std::find(v.errors.begin(), v.errors.end(), msg) != v.errors.end();
}

// Closes the two generators under addition, the coordinate shift and the
// scalar action -- the module operations defining a cyclic code -- and
// returns the fixpoint.  Independent of the spanning-set construction.
std::vector<Vec> module_closure(const CyclicGens& gens) {
    const int r = gens.r, s = gens.s;
    std::set<Vec> words;
    words.insert(Vec(r, s));

    // The first generator is the residue of f, so f = x^r - 1 contributes 0.
    const Poly f = gens.f.value_or(Poly::xn_minus_1(r)) % Poly::xn_minus_1(r);
    Vec vf(r, s);
    for (int i = 0; i < r; ++i) vf.set_bin(i, f.coeff(i));
    const Poly g = gens.g == Poly::xn_minus_1(s) ? Poly::zero() : gens.g;
    Vec vl(r, s);
    for (int i = 0; i < r; ++i) vl.set_bin(i, gens.l.coeff(i));
    for (int j = 0; j < s; ++j) vl.set_ring(j, RingElem(g.coeff(j), gens.a.coeff(j)));
    words.insert(vf);
    words.insert(vl);

    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Vec> snap(words.begin(), words.end());
        for (const Vec& v : snap) {
            for (const Vec& w :
                 {v.shifted(), v.scaled(RingElem::u()), v.scaled(RingElem::w())})
                grew |= words.insert(w).second;
            for (const Vec& w : snap) grew |= words.insert(v + w).second;
        }
    }
    return {words.begin(), words.end()};
}

} // namespace

TEST_CASE("validate reports each generator condition by name") {
    const Poly ones3 = Poly::all_ones(3);

    SUBCASE("even s") {
        const CyclicValidation v = validate({3, 4, std::nullopt, Poly::zero(), Poly::zero(), Poly::one()});
        CHECK(v.errors == std::vector<std::string>{"s must be odd"});
    }
    SUBCASE("range") {
        CHECK(has_error(validate({0, 3, std::nullopt, Poly::zero(), Poly::zero(), Poly::one()}),
                        "r must lie in 1..63"));
        CHECK(has_error(validate({3, 65, std::nullopt, Poly::zero(), Poly::zero(), Poly::one()}),
                        "s must lie in 1..63"));
    }
    SUBCASE("zero f") {
        CHECK(has_error(validate({3, 3, Poly::zero(), Poly::zero(), Poly::zero(), Poly::one()}),
                        "f must be nonzero"));
    }
    SUBCASE("f outside the divisor lattice") {
        CHECK(has_error(validate({3, 3, P("x^2"), Poly::zero(), Poly::zero(), Poly::one()}),
                        "f must divide x^r - 1"));
    }
    SUBCASE("g outside the divisor lattice") {
        CHECK(has_error(validate({3, 3, std::nullopt, Poly::zero(), P("x"), Poly::one()}),
                        "g must divide x^s - 1"));
    }
    SUBCASE("zero a") {
        CHECK(has_error(validate({3, 3, std::nullopt, Poly::zero(), ones3, Poly::zero()}),
                        "a must be a nonzero divisor of x^s - 1 with degree below s"));
    }
    SUBCASE("a does not divide g") {
        CHECK(has_error(validate({3, 3, std::nullopt, Poly::zero(), P("1+x"), ones3}),
                        "a must divide g"));
    }
    SUBCASE("l too wide") {
        CHECK(has_error(validate({3, 3, P("1+x"), P("x"), ones3, ones3}),
                        "deg l must be below deg f"));
    }
    SUBCASE("divisibility condition") {
        const CyclicValidation v = validate({3, 3, P("1+x+x^2"), Poly::one(), Poly::zero(), ones3});
        CHECK(v.errors == std::vector<std::string>{"f must divide ((x^s - 1)/a) l"});
    }
    SUBCASE("uniqueness condition with explicit f") {
        const CyclicValidation v = validate({3, 3, P("1+x"), Poly::one(), Poly::zero(), ones3});
        CHECK(v.errors == std::vector<std::string>{"f must differ from ((x^s - 1)/a) l"});
    }
    SUBCASE("uniqueness condition with implicit f is only a warning") {
        const CyclicValidation v = validate(one_weight_cyclic(3));
        CHECK(v.ok());
        REQUIRE(v.warnings.size() == 1);
        CHECK(v.warnings[0] ==
              "((x^s - 1)/a) l equals x^r - 1, so the representation is not the canonical one");
    }
}

TEST_CASE("require_valid gathers the errors into the exception text") {
    CHECK_NOTHROW(require_valid(one_weight_cyclic(5)));
    CHECK_THROWS_AS(require_valid({3, 4, std::nullopt, Poly::zero(), Poly::zero(), Poly::one()}),
                    ValidationFailed);
}

TEST_CASE("spanning set of the classified one-weight generators") {
    const Mat m = spanning_set(one_weight_cyclic(3));
    REQUIRE(m.row_count() == 1);
    Vec want(3, 3);
    for (int i = 0; i < 3; ++i) {
        want.set_bin(i, true);
        want.set_ring(i, RingElem::w());
    }
    CHECK(m.rows[0] == want);

    const Code c = Code::span(m);
    CHECK(c.size() == 4);
    CHECK(c.one_weight() == std::optional<int>(6));
    CHECK(is_shift_closed(c));
    CHECK(cyclic_type(one_weight_cyclic(3)) == CodeType{3, 3, 0, 1, 0});
}

TEST_CASE("classified one-weight family has weight 2s") {
    for (const int s : {3, 5, 7}) {
        const CyclicGens gens = one_weight_cyclic(s);
        const Code c = cyclic_span(gens);
        CHECK(c.size() == 4);
        CHECK(c.one_weight() == std::optional<int>(2 * s));
        CHECK(cyclic_type(gens) == CodeType{s, s, 0, 1, 0});
        CHECK(is_shift_closed(c));
    }
    CHECK_THROWS_AS(one_weight_cyclic(4), std::invalid_argument);
}

TEST_CASE("spanning set agrees with the raw module closure") {
    const std::vector<CyclicGens> cases = {
        {3, 3, P("1+x"), Poly::zero(), Poly::all_ones(3), Poly::all_ones(3)},
        {3, 3, P("1+x+x^2"), P("x"), P("1+x"), P("1+x")},
        one_weight_cyclic(3),
        {5, 5, Poly::all_ones(5), Poly::zero(), Poly::all_ones(5), Poly::all_ones(5)},
        one_weight_cyclic(5),
        {7, 7, std::nullopt, P("1+x+x^2+x^4"), Poly::zero(), P("1+x+x^2+x^4")},
    };
    for (const CyclicGens& gens : cases) {
        REQUIRE(validate(gens).ok());
        const Code c = cyclic_span(gens);
        CHECK(c.words() == module_closure(gens));
        CHECK(is_shift_closed(c));
        CHECK(cyclic_type(gens) == standard_form(spanning_set(gens)).type);
    }
}

TEST_CASE("is_shift_closed rejects a non-cyclic code") {
    Mat g(3, 1);
    Vec v(3, 1);
    v.set_bin(0, true);
    g.append(v);
    CHECK_FALSE(is_shift_closed(Code::span(g)));
}

TEST_CASE("type formula matches the standard form on valid random tuples") {
    std::mt19937_64 rng(2026);
    int checked = 0;
    const std::vector<std::pair<int, int>> shapes = {{3, 3}, {5, 3}, {4, 5}, {7, 5}, {9, 7}, {8, 3}};
    for (const auto& [r, s] : shapes) {
        const auto fs = divisors_of_xn_minus_1(r, 1 << 12);
        const auto gs = divisors_of_xn_minus_1(s, 1 << 12);
        for (int round = 0; round < 40; ++round) {
            const Poly f = fs[rng() % fs.size()];
            const int df = f.degree().value();
            // l ranges over all residues mod f, divisor of x^r - 1 or not.
            const Poly l = Poly(df == 0 ? 0 : rng() & ((std::uint64_t{1} << df) - 1));
            const Poly g = gs[rng() % gs.size()]; // x^s - 1 denotes the zero residue
            const Poly a = gs[rng() % gs.size()];
            const CyclicGens gens{r, s, f, l, g, a};
            if (!validate(gens).ok()) continue;
            ++checked;
            CHECK(cyclic_type(gens) == standard_form(spanning_set(gens)).type);
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("search lists the one-weight cyclic codes once each") {
    const CyclicSearchResult res = cyclic_one_weight_search(3, 3);
    CHECK(res.complete);
    CHECK_FALSE(res.hits.empty());

    std::set<std::vector<Vec>> spans;
    bool found_classified = false;
    for (const CyclicSearchHit& hit : res.hits) {
        REQUIRE(validate(hit.gens).ok());
        const Code c = cyclic_span(hit.gens);
        CHECK(c.one_weight() == std::optional<int>(hit.m));
        CHECK(is_shift_closed(c));
        CHECK(cyclic_type(hit.gens) == hit.type);
        CHECK(spans.insert(c.words()).second); // no duplicate codes
        const Poly ones = Poly::all_ones(3);
        if (hit.gens.l == ones && hit.gens.g == ones && hit.gens.a == ones) {
            found_classified = true;
            CHECK(hit.m == 6);
            CHECK(hit.type == CodeType{3, 3, 0, 1, 0});
        }
        // Nonzero g pins the classified family.
        if (!hit.gens.g.is_zero()) {
            CHECK(hit.type == CodeType{3, 3, 0, 1, 0});
            CHECK(hit.m == 6);
        }
    }
    CHECK(found_classified);
}

TEST_CASE("pinning l and a reaches lengths the full scan cannot") {
    const Poly l = P("1+x+x^2+x^4");
    const CyclicSearchResult res =
        cyclic_one_weight_search(7, 7, kDefaultEnumCap, std::size_t{1} << 20, l, l);
    CHECK(res.complete);
    const bool found = std::any_of(res.hits.begin(), res.hits.end(), [&](const CyclicSearchHit& h) {
        return h.gens.g.is_zero() && h.m == 12 && h.type == CodeType{7, 7, 3, 0, 0};
    });
    CHECK(found);

    CHECK_THROWS_AS(cyclic_one_weight_search(21, 3), std::invalid_argument); // unpinned l, r > 20
    CHECK_THROWS_AS(cyclic_one_weight_search(3, 4), std::invalid_argument);  // even s
}

TEST_CASE("search degrades to a partial result when a cap trips") {
    const CyclicSearchResult res = cyclic_one_weight_search(3, 3, kDefaultEnumCap, 4);
    CHECK_FALSE(res.complete);
    CHECK_FALSE(res.cap_reason.empty());
    CHECK(res.hits.empty());
}

#include "z2z2u/reference_suite.hpp"

#include <algorithm>
#include <sstream>

#include "z2z2u/bounds.hpp"
#include "z2z2u/code.hpp"
#include "z2z2u/cyclic.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/io.hpp"
#include "z2z2u/matrix.hpp"
#include "z2z2u/one_weight.hpp"
#include "z2z2u/poly.hpp"
#include "z2z2u/ring.hpp"
#include "z2z2u/vec.hpp"

namespace z2z2u {
namespace {

// --- Frozen reference data ---------------------------------------------------

// §2 worked example: the input generator matrix ...
constexpr const char* kSec2Input = R"(r=3 s=4
1 1 0 | 0 u u u
0 1 1 | 1 1+u u 0
0 1 0 | u u u 0
)";

// ... its printed standard form ...
constexpr const char* kSec2StandardForm = R"(r=3 s=4
1 0 0 | 0 u 0 u
0 1 0 | 0 0 u 0
0 0 1 | 1 1+u 0 0
)";

// ... the printed parity-check matrix ...
constexpr const char* kSec2ParityCheck = R"(r=3 s=4
0 0 1 | u 0 0 0
1 0 0 | 1+u 1 0 0
0 1 0 | 0 0 1 0
1 0 0 | 0 0 0 1
)";

// ... and the printed 16-codeword list (as rows; order irrelevant).
constexpr const char* kSec2Words = R"(r=3 s=4
0 0 0 | 0 0 0 0
1 0 0 | 0 u 0 u
0 1 0 | 0 0 u 0
0 0 1 | 1 1+u 0 0
0 0 0 | u u 0 0
0 0 1 | 1+u 1 0 0
1 1 0 | 0 u u u
1 0 1 | 1 1 0 u
0 1 1 | 1 1+u u 0
1 1 1 | 1 1 u u
1 0 0 | u 0 0 u
0 1 0 | u u u 0
1 1 0 | u 0 u u
1 0 1 | 1+u 1+u 0 u
0 1 1 | 1+u 1 u 0
1 1 1 | 1+u 1+u u u
)";

// W_C = x^11 + 3x^8y^3 + x^7y^4 + 2x^6y^5 + 4x^5y^6 + x^4y^7 + 2x^3y^8 + 2x^2y^9
const std::vector<std::uint64_t> kSec2WC = {1, 0, 0, 3, 1, 2, 4, 1, 2, 2, 0, 0};
// W_C-dual = x^11 + 6x^9y^2 + 8x^8y^3 + 16x^7y^4 + 32x^6y^5 + 26x^5y^6 + 24x^4y^7 + 15x^3y^8
const std::vector<std::uint64_t> kSec2WCDual = {1, 0, 6, 8, 16, 32, 26, 24, 15, 0, 0, 0};

// §3: the weight-4 one-weight code and its printed dual generators.
constexpr const char* kSec3OneWeight = "r=2 s=2\n1 1 | 1+u 1+u\n";
constexpr const char* kSec3OneWeightWords = R"(r=2 s=2
0 0 | 0 0
1 1 | 1+u 1+u
1 1 | 1 1
0 0 | u u
)";
constexpr const char* kSec3DualGens = R"(r=2 s=2
1 0 | u 0
0 1 | u 0
0 0 | 1 1
)";

// §3: the simplex-image code of type (3,2;1,1,0).
constexpr const char* kSec3Simplex = R"(r=3 s=2
1 0 1 | 0 u
0 1 1 | 1 1+u
)";

// §5: the perfect code of type (3,2;2,1,0) and its printed dual generators.
constexpr const char* kSec5Perfect = R"(r=3 s=2
1 0 1 | 0 u
0 1 0 | 0 u
0 0 1 | 1 1+u
)";
constexpr const char* kSec5PerfectDual = R"(r=3 s=2
1 0 1 | u 0
1 1 0 | 1+u 1
)";

// §4/§5 cyclic examples: printed generator matrices.
constexpr const char* kSec4AllOnes7 = "r=7 s=7\n1 1 1 1 1 1 1 | 1+u 1+u 1+u 1+u 1+u 1+u 1+u\n";
constexpr const char* kSec5AllOnes9 =
    "r=9 s=9\n1 1 1 1 1 1 1 1 1 | 1+u 1+u 1+u 1+u 1+u 1+u 1+u 1+u 1+u\n";
constexpr const char* kSec5Span21 = R"(r=7 s=7
1 1 1 0 1 0 0 | u u u 0 u 0 0
0 1 1 1 0 1 0 | 0 u u u 0 u 0
0 0 1 1 1 0 1 | 0 0 u u u 0 u
)";
constexpr const char* kSec5Span45 = R"(r=15 s=15
1 0 0 1 1 0 1 0 1 1 1 1 0 0 0 | u 0 0 u u 0 u 0 u u u u 0 0 0
0 1 0 0 1 1 0 1 0 1 1 1 1 0 0 | 0 u 0 0 u u 0 u 0 u u u u 0 0
0 0 1 0 0 1 1 0 1 0 1 1 1 1 0 | 0 0 u 0 0 u u 0 u 0 u u u u 0
0 0 0 1 0 0 1 1 0 1 0 1 1 1 1 | 0 0 0 u 0 0 u u 0 u 0 u u u u
)";

// Tabulated optimal-image generator tuples (g is the zero residue in each).
struct TableRow {
    int r, s;
    const char* l;
    const char* a;
    CodeType type;
    GrayParams gray;
};
const TableRow kTableRows[] = {
    {7, 21, "1+x+x^2+x^4",
     "1+x+x^2+x^4+x^7+x^8+x^9+x^11+x^14+x^15+x^16+x^18",
     {7, 21, 3, 0, 0},
     {49, 3, 28}},
    {31, 31, "1+x^2+x^4+x^5+x^6+x^8+x^9+x^13+x^14+x^15+x^16+x^17+x^20+x^21+x^23+x^26",
     "1+x^2+x^4+x^5+x^6+x^8+x^9+x^13+x^14+x^15+x^16+x^17+x^20+x^21+x^23+x^26",
     {31, 31, 5, 0, 0},
     {93, 5, 48}},
    {27, 15, "1+x+x^3+x^4+x^6+x^7+x^9+x^10+x^12+x^13+x^15+x^16+x^18+x^19+x^21+x^22+x^24+x^25",
     "1+x+x^3+x^4+x^6+x^7+x^9+x^10+x^12+x^13",
     {27, 15, 2, 0, 0},
     {57, 2, 38}},
    {35, 21, "1+x^2+x^3+x^4+x^7+x^9+x^10+x^11+x^14+x^16+x^17+x^18+x^21+x^23+x^24+x^25+x^28+x^30+x^31+x^32",
     "1+x^2+x^3+x^4+x^7+x^9+x^10+x^11+x^14+x^16+x^17+x^18",
     {35, 21, 3, 0, 0},
     {77, 3, 44}},
};

// --- Small helpers -----------------------------------------------------------

Poly poly_of(const char* text) {
    auto p = Poly::parse(text);
    if (!p) throw std::logic_error(std::string("bad frozen polynomial: ") + text);
    return *p;
}

void note(std::string& detail, const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond) note(detail, what);
    return cond;
}

bool same_rows(const Mat& got, const Mat& want, std::string& detail) {
    if (got.r != want.r || got.s != want.s || got.row_count() != want.row_count())
        return expect(false, "matrix shape differs", detail);
    for (std::size_t i = 0; i < got.rows.size(); ++i)
        if (!(got.rows[i] == want.rows[i]))
            return expect(false, "row " + std::to_string(i) + " is " + format_row(got.rows[i]) +
                                     ", want " + format_row(want.rows[i]),
                          detail);
    return true;
}

bool same_words(const Code& c, Mat expected, std::string& detail) {
    std::sort(expected.rows.begin(), expected.rows.end());
    if (c.words() == expected.rows) return true;
    return expect(false, "codeword list differs from the printed one", detail);
}

bool same_enumerator(const std::vector<std::uint64_t>& got,
                     const std::vector<std::uint64_t>& want, std::string& detail) {
    if (got == want) return true;
    return expect(false, "enumerator is " + format_enumerator(got) + ", want " +
                             format_enumerator(want),
                  detail);
}

bool battery_clean(const Mat& gens, const Code& c, std::string& detail) {
    const auto rep = one_weight_battery(gens, c);
    bool ok = true;
    for (const auto& chk : rep.checks)
        if (chk.applicable && !chk.passed)
            ok = expect(false, "battery check failed: " + chk.name, detail);
    return ok;
}

} // namespace

std::vector<ReferenceCheck> run_reference_suite() {
    std::vector<ReferenceCheck> out;
    auto run = [&](const std::string& key, auto&& body) {
        ReferenceCheck rc{key, false, {}};
        try {
            rc.passed = body(rc.detail);
        } catch (const std::exception& e) {
            rc.passed = false;
            note(rc.detail, std::string("exception: ") + e.what());
        }
        out.push_back(std::move(rc));
    };

    run("§2 ring arithmetic", [](std::string& d) {
        const auto z = RingElem::zero(), o = RingElem::one(), u = RingElem::u(), w = RingElem::w();
        bool ok = true;
        ok &= expect(u * u == z, "u*u != 0", d);
        ok &= expect(w * w == o, "(1+u)^2 != 1", d);
        ok &= expect(u * w == u, "u(1+u) != u", d);
        ok &= expect(o + u == w, "1 + u != 1+u", d);
        ok &= expect(!z.eta() && o.eta() && !u.eta() && w.eta(), "eta table wrong", d);
        ok &= expect(z.lee_weight() == 0 && o.lee_weight() == 1 && u.lee_weight() == 2 &&
                         w.lee_weight() == 1,
                     "Lee weights differ from 0,1,2,1", d);
        ok &= expect(o.inverse() == o && w.inverse() == w, "units are not self-inverse", d);
        return ok;
    });

    run("§2 Gray map definition", [](std::string& d) {
        // Phi(x, p + uq) = (x, q, p + q), coordinate-wise on the ring block.
        Vec v(1, 2);
        v.set_bin(0, true);
        v.set_ring(0, RingElem::u());
        v.set_ring(1, RingElem::w());
        const std::vector<std::uint8_t> want = {1, 1, 1, 1, 0};
        bool ok = expect(v.gray() == want, "Phi(1|u,1+u) != (1,1,1,1,0)", d);
        for (std::uint64_t bits = 0; bits < 64; ++bits) {
            Vec t(2, 2);
            t.set_bin(0, bits & 1);
            t.set_bin(1, bits & 2);
            t.set_ring(0, RingElem((bits >> 2) & 1, (bits >> 3) & 1));
            t.set_ring(1, RingElem((bits >> 4) & 1, (bits >> 5) & 1));
            int h = 0;
            for (auto b : t.gray()) h += b;
            ok &= expect(h == t.weight(), "Gray image Hamming weight != Lee-type weight", d);
            if (!ok) break;
        }
        return ok;
    });

    run("§2 example standard form", [](std::string& d) {
        const auto sf = standard_form(parse_matrix_string(kSec2Input));
        bool ok = same_rows(sf.mat, parse_matrix_string(kSec2StandardForm), d);
        ok &= expect(sf.type == CodeType{3, 4, 2, 1, 0},
                     "type is " + format_type(sf.type) + ", want (3,4; 2,1,0)", d);
        return ok;
    });

    run("§2 example type and size", [](std::string& d) {
        const auto c = Code::span(parse_matrix_string(kSec2Input));
        bool ok = expect(c.size() == 16, "|C| != 16", d);
        ok &= expect(c.log2_size() == 4, "log2|C| != 4", d);
        return ok;
    });

    run("§2 example codeword list", [](std::string& d) {
        const auto c = Code::span(parse_matrix_string(kSec2Input));
        return same_words(c, parse_matrix_string(kSec2Words), d);
    });

    run("§2 example W_C", [](std::string& d) {
        const auto c = Code::span(parse_matrix_string(kSec2Input));
        return same_enumerator(c.weight_enumerator(), kSec2WC, d);
    });

    run("§2 example W_C⊥", [](std::string& d) {
        const auto g = parse_matrix_string(kSec2Input);
        bool ok = same_enumerator(macwilliams(kSec2WC, 16), kSec2WCDual, d);
        ok &= same_enumerator(dual_code(g).weight_enumerator(), kSec2WCDual, d);
        return ok;
    });

    run("§2 example parity check", [](std::string& d) {
        const auto g = parse_matrix_string(kSec2Input);
        const auto h = parity_check(g);
        bool ok = same_rows(h, parse_matrix_string(kSec2ParityCheck), d);
        ok &= expect(orthogonal(g, h), "G H^t != 0", d);
        const auto dual = Code::span(h);
        ok &= expect(dual.size() == 128, "|C-dual| != 128", d);
        const auto dt = standard_form(h).type;
        ok &= expect(dt == CodeType{3, 4, 1, 3, 0},
                     "dual type is " + format_type(dt) + ", want (3,4; 1,3,0)", d);
        ok &= expect(dt == CodeType{3, 4, 2, 1, 0}.dual(), "dual-type formula disagrees", d);
        return ok;
    });

    run("§2 example Gray images", [](std::string& d) {
        const auto g = parse_matrix_string(kSec2Input);
        const auto gp = Code::span(g).gray_params();
        const auto gd = dual_code(g).gray_params();
        bool ok = expect(gp == GrayParams{11, 4, 3},
                         "Gray image is " + format_gray(gp) + ", want [11,4,3]", d);
        ok &= expect(gd == GrayParams{11, 7, 2},
                     "dual Gray image is " + format_gray(gd) + ", want [11,7,2]", d);
        return ok;
    });

    run("§3 example one-weight m=4", [](std::string& d) {
        const auto g = parse_matrix_string(kSec3OneWeight);
        const auto c = Code::span(g);
        bool ok = same_words(c, parse_matrix_string(kSec3OneWeightWords), d);
        ok &= expect(c.one_weight() == std::optional<int>(4), "weight != 4", d);
        const auto t = standard_form(g).type;
        ok &= expect(t == CodeType{2, 2, 0, 1, 0},
                     "type is " + format_type(t) + ", want (2,2; 0,1,0)", d);
        ok &= battery_clean(g, c, d);
        return ok;
    });

    run("§3 example dual distance 2", [](std::string& d) {
        const auto g = parse_matrix_string(kSec3OneWeight);
        const auto dual = dual_code(g);
        const auto printed = Code::span(parse_matrix_string(kSec3DualGens));
        bool ok = expect(dual.words() == printed.words(),
                         "dual differs from the span of the printed generators", d);
        const auto dt = standard_form(parse_matrix_string(kSec3DualGens)).type;
        ok &= expect(dt == CodeType{2, 2, 2, 1, 0},
                     "dual type is " + format_type(dt) + ", want (2,2; 2,1,0)", d);
        ok &= expect(dual.min_distance() == 2, "d(C-dual) != 2", d);
        ok &= expect(!dual.one_weight().has_value(), "dual is unexpectedly one-weight", d);
        return ok;
    });

    run("§3 simplex code [7,3,4]", [](std::string& d) {
        const auto g = parse_matrix_string(kSec3Simplex);
        const auto c = Code::span(g);
        const auto t = standard_form(g).type;
        bool ok = expect(t == CodeType{3, 2, 1, 1, 0},
                         "type is " + format_type(t) + ", want (3,2; 1,1,0)", d);
        ok &= expect(c.one_weight() == std::optional<int>(4), "weight != 4", d);
        const auto gp = c.gray_params();
        ok &= expect(gp == GrayParams{7, 3, 4},
                     "Gray image is " + format_gray(gp) + ", want [7,3,4]", d);
        ok &= expect(dual_code(g).min_distance() == 3, "d(C-dual) != 3 despite alpha=1, |C|>=4", d);
        ok &= battery_clean(g, c, d);
        return ok;
    });

    run("§3 replication theorem", [](std::string& d) {
        bool ok = true;
        // (1,1|1+u,1+u) doubled: type (4,4;0,1,0), weight 8.
        const auto g2 = replicate(parse_matrix_string(kSec3OneWeight), 2);
        const auto t2 = standard_form(g2).type;
        ok &= expect(t2 == CodeType{4, 4, 0, 1, 0},
                     "gamma=2 type is " + format_type(t2) + ", want (4,4; 0,1,0)", d);
        ok &= expect(Code::span(g2).one_weight() == std::optional<int>(8),
                     "gamma=2 weight != 8", d);
        // Simplex code tripled: type (9,6;1,1,0), weight 12.
        const auto g3 = replicate(parse_matrix_string(kSec3Simplex), 3);
        const auto t3 = standard_form(g3).type;
        ok &= expect(t3 == CodeType{9, 6, 1, 1, 0},
                     "gamma=3 type is " + format_type(t3) + ", want (9,6; 1,1,0)", d);
        ok &= expect(Code::span(g3).one_weight() == std::optional<int>(12),
                     "gamma=3 weight != 12", d);
        return ok;
    });

    run("§3 odd-weight theorem", [](std::string& d) {
        // <(1,1,1|u)>: two codewords, odd weight 5, r odd, the all-ones|all-u form.
        const auto g = parse_matrix_string("r=3 s=1\n1 1 1 | u\n");
        const auto c = Code::span(g);
        bool ok = expect(c.size() == 2, "|C| != 2", d);
        ok &= expect(c.one_weight() == std::optional<int>(5), "weight != 5", d);
        ok &= battery_clean(g, c, d);
        const auto rep = one_weight_battery(g, c);
        const auto* odd = rep.find("odd-weight-structure");
        ok &= expect(odd && odd->applicable && odd->passed, "odd-case structure check not green", d);
        ok &= expect(rep.alpha == std::optional<std::uint64_t>(5), "alpha != 5", d);
        return ok;
    });

    run("§4 example factorization", [](std::string& d) {
        const auto factors = factor_xn_minus_1(7);
        bool ok = expect(factors.size() == 3, "x^7-1 should have 3 irreducible factors", d);
        const Poly want[] = {poly_of("1+x"), poly_of("1+x+x^3"), poly_of("1+x^2+x^3")};
        for (std::size_t i = 0; i < 3 && ok; ++i)
            ok &= expect(factors[i].first == want[i] && factors[i].second == 1,
                         "factor " + std::to_string(i) + " is " + factors[i].first.to_string(),
                         d);
        ok &= expect(poly_of("1+x+x^3") * poly_of("1+x^2+x^3") == Poly::all_ones(7),
                     "(1+x+x^3)(1+x^2+x^3) != 1+x+...+x^6", d);
        ok &= expect(divisors_of_xn_minus_1(7).size() == 8, "x^7-1 should have 8 divisors", d);
        return ok;
    });

    run("§4 shift operator", [](std::string& d) {
        // Simultaneous right rotation of both blocks.
        const auto m = parse_matrix_string("r=3 s=2\n1 0 0 | u 1+u\n");
        const auto got = m.rows[0].shifted();
        const auto want = parse_matrix_string("r=3 s=2\n0 1 0 | 1+u u\n").rows[0];
        return expect(got == want, "T(1,0,0|u,1+u) is " + format_row(got), d);
    });

    run("§4 example m=14", [](std::string& d) {
        const auto gens = one_weight_cyclic(7);
        const auto val = validate(gens);
        bool ok = expect(val.ok(), "validation errors", d);
        ok &= expect(val.warnings.size() == 1,
                     "expected exactly the equality-against-implicit-f warning", d);
        ok &= same_rows(spanning_set(gens), parse_matrix_string(kSec4AllOnes7), d);
        const auto c = cyclic_span(gens);
        ok &= expect(c.size() == 4, "|C| != 4", d);
        ok &= expect(c.one_weight() == std::optional<int>(14), "weight != 14", d);
        ok &= expect(is_shift_closed(c), "not shift closed", d);
        const auto t = cyclic_type(gens);
        ok &= expect(t == CodeType{7, 7, 0, 1, 0},
                     "type is " + format_type(t) + ", want (7,7; 0,1,0)", d);
        return ok;
    });

    run("§4 classification r=s", [](std::string& d) {
        bool ok = true;
        for (int s : {3, 5, 7}) {
            const auto res = cyclic_one_weight_search(s, s);
            ok &= expect(res.complete, "search hit a cap at s=" + std::to_string(s), d);
            int with_g = 0;
            for (const auto& h : res.hits) {
                if (h.gens.g.is_zero()) continue;
                ++with_g;
                ok &= expect(h.type == CodeType{s, s, 0, 1, 0} && h.m == 2 * s,
                             "unexpected g!=0 hit at s=" + std::to_string(s) + ": type " +
                                 format_type(h.type) + ", m=" + std::to_string(h.m),
                             d);
            }
            ok &= expect(with_g >= 1, "no g!=0 hit found at s=" + std::to_string(s), d);
        }
        return ok;
    });

    run("§4 classification r>s", [](std::string& d) {
        bool ok = true;
        for (auto [r, s] : {std::pair{5, 3}, std::pair{7, 5}}) {
            const auto res = cyclic_one_weight_search(r, s);
            ok &= expect(res.complete, "search hit a cap", d);
            for (const auto& h : res.hits)
                ok &= expect(h.gens.g.is_zero(),
                             "unexpected g!=0 hit at r=" + std::to_string(r) + " s=" +
                                 std::to_string(s),
                             d);
        }
        return ok;
    });

    run("§5 perfect code (3,2;2,1,0)", [](std::string& d) {
        const auto g = parse_matrix_string(kSec5Perfect);
        const auto c = Code::span(g);
        const auto t = standard_form(g).type;
        bool ok = expect(t == CodeType{3, 2, 2, 1, 0},
                         "type is " + format_type(t) + ", want (3,2; 2,1,0)", d);
        const auto gp = c.gray_params();
        const auto sp = sphere_packing(gp.n, gp.k, gp.d);
        ok &= expect(sp.lhs == 128 && sp.rhs == 128, "16*8 = 128 = 2^7 not reproduced", d);
        ok &= expect(sp.perfect, "not flagged perfect", d);
        return ok;
    });

    run("§5 dual attains Plotkin", [](std::string& d) {
        const auto g = parse_matrix_string(kSec5Perfect);
        const auto dual = dual_code(g);
        const auto printed = Code::span(parse_matrix_string(kSec5PerfectDual));
        bool ok = expect(dual.words() == printed.words(),
                         "dual differs from the span of the printed generators", d);
        ok &= expect(dual.one_weight() == std::optional<int>(4), "dual weight != 4", d);
        const auto gp = dual.gray_params();
        ok &= expect(gp == GrayParams{7, 3, 4}, "dual Gray image is " + format_gray(gp), d);
        const auto pl = plotkin(gp.n, gp.k, gp.d);
        ok &= expect(pl.kase == PlotkinEval::Case::above_half && pl.bound == 8,
                     "Plotkin bound != 8", d);
        ok &= expect(pl.attained, "Plotkin attainment not flagged", d);
        return ok;
    });

    run("§5 example [45,4,24]", [](std::string& d) {
        const CyclicGens gens{15, 15, std::nullopt,
                              poly_of("1+x^3+x^4+x^6+x^8+x^9+x^10+x^11"), Poly::zero(),
                              poly_of("1+x^3+x^4+x^6+x^8+x^9+x^10+x^11")};
        bool ok = expect(validate(gens).ok(), "validation errors", d);
        ok &= same_rows(spanning_set(gens), parse_matrix_string(kSec5Span45), d);
        const auto c = cyclic_span(gens);
        ok &= expect(c.one_weight() == std::optional<int>(24), "weight != 24", d);
        const auto gp = c.gray_params();
        ok &= expect(gp == GrayParams{45, 4, 24}, "Gray image is " + format_gray(gp), d);
        ok &= expect(catalog_optimal(45, 4, 24) == std::optional<bool>(true),
                     "[45,4,24] not cataloged optimal", d);
        return ok;
    });

    run("§5 example [27,2,18]", [](std::string& d) {
        const auto gens = one_weight_cyclic(9);
        bool ok = expect(validate(gens).ok(), "validation errors", d);
        ok &= same_rows(spanning_set(gens), parse_matrix_string(kSec5AllOnes9), d);
        const auto c = cyclic_span(gens);
        ok &= expect(c.one_weight() == std::optional<int>(18), "weight != 18", d);
        const auto gp = c.gray_params();
        ok &= expect(gp == GrayParams{27, 2, 18}, "Gray image is " + format_gray(gp), d);
        ok &= expect(catalog_optimal(27, 2, 18) == std::optional<bool>(true),
                     "[27,2,18] not cataloged optimal", d);
        const auto t = cyclic_type(gens);
        ok &= expect(t == CodeType{9, 9, 0, 1, 0},
                     "type is " + format_type(t) + ", want (9,9; 0,1,0)", d);
        return ok;
    });

    run("§5 example [21,3,12]", [](std::string& d) {
        const CyclicGens gens{7, 7, std::nullopt, poly_of("1+x+x^2+x^4"), Poly::zero(),
                              poly_of("1+x+x^2+x^4")};
        bool ok = expect(validate(gens).ok(), "validation errors", d);
        ok &= same_rows(spanning_set(gens), parse_matrix_string(kSec5Span21), d);
        const auto c = cyclic_span(gens);
        ok &= expect(c.one_weight() == std::optional<int>(12), "weight != 12", d);
        const auto gp = c.gray_params();
        ok &= expect(gp == GrayParams{21, 3, 12}, "Gray image is " + format_gray(gp), d);
        ok &= expect(catalog_optimal(21, 3, 12) == std::optional<bool>(true),
                     "[21,3,12] not cataloged optimal", d);
        const auto t = cyclic_type(gens);
        ok &= expect(t == CodeType{7, 7, 3, 0, 0},
                     "type is " + format_type(t) + ", want (7,7; 3,0,0)", d);
        return ok;
    });

    for (int i = 0; i < 4; ++i) {
        const auto& row = kTableRows[i];
        std::ostringstream key;
        key << "Table 1 row " << (i + 1) << " " << format_gray(row.gray);
        run(key.str(), [&row](std::string& d) {
            const CyclicGens gens{row.r, row.s, std::nullopt, poly_of(row.l), Poly::zero(),
                                  poly_of(row.a)};
            bool ok = expect(validate(gens).ok(), "validation errors", d);
            const auto t = cyclic_type(gens);
            ok &= expect(t == row.type,
                         "type is " + format_type(t) + ", want " + format_type(row.type), d);
            const auto c = cyclic_span(gens);
            ok &= expect(is_shift_closed(c), "not shift closed", d);
            ok &= expect(c.one_weight() == std::optional<int>(row.gray.d),
                         "not one-weight with m=" + std::to_string(row.gray.d), d);
            const auto gp = c.gray_params();
            ok &= expect(gp == row.gray, "Gray image is " + format_gray(gp) + ", want " +
                                             format_gray(row.gray),
                         d);
            ok &= expect(catalog_optimal(gp.n, gp.k, gp.d) == std::optional<bool>(true),
                         format_gray(row.gray) + " not cataloged optimal", d);
            const auto st = standard_form(spanning_set(gens)).type;
            ok &= expect(st == row.type, "standard-form type disagrees: " + format_type(st), d);
            return ok;
        });
    }

    return out;
}

} // namespace z2z2u

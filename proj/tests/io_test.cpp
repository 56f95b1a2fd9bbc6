#include "doctest.h"

#include <random>
#include <string>

#include "z2z2u/code.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/io.hpp"
#include "z2z2u/one_weight.hpp"

using namespace z2z2u;

namespace {

std::string parse_failure(const std::string& text) {
    try {
        parse_matrix_string(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("print and parse are mutually inverse") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const int r = static_cast<int>(rng() % 5);
        const int s = static_cast<int>(rng() % 5);
        if (r + s == 0) continue;
        Mat m(r, s);
        for (int k = 0; k < 3; ++k) {
            Vec v(r, s);
            for (int i = 0; i < r; ++i) v.set_bin(i, rng() & 1);
            for (int j = 0; j < s; ++j) v.set_ring(j, RingElem(rng() & 1, rng() & 1));
            m.append(v);
        }
        const std::string text = print_matrix(m);
        const Mat back = parse_matrix_string(text);
        CHECK(back.r == m.r);
        CHECK(back.s == m.s);
        CHECK(back.rows == m.rows);
        CHECK(print_matrix(back) == text);
    }
}

TEST_CASE("parser accepts comments, blank lines and the 1+u alias") {
    const Mat m = parse_matrix_string("# generator matrix\n\nr=1 s=2\n\n0 | 1+u u\n# done\n");
    REQUIRE(m.row_count() == 1);
    CHECK(print_matrix(m) == "r=1 s=2\n0 | w u\n");
}

TEST_CASE("parser reports the offending line and token") {
    CHECK(parse_failure("bogus\n") == "line 1: expected header \"r=<int> s=<int>\", got \"bogus\"");
    CHECK(parse_failure("") == "line 1: missing header \"r=<int> s=<int>\"");
    CHECK(parse_failure("r=0 s=0\n") == "line 1: r and s must satisfy 0 <= r,s <= 64 with r+s >= 1");
    CHECK(parse_failure("r=65 s=1\n") == "line 1: r and s must satisfy 0 <= r,s <= 64 with r+s >= 1");
    CHECK(parse_failure("r=2 s=1\n1 2 | u\n") == "line 2: invalid binary token \"2\"");
    CHECK(parse_failure("r=1 s=1\n1 | v\n") == "line 2: invalid ring token \"v\"");
    CHECK(parse_failure("r=1 s=1\n1 0 u\n") == "line 2: expected '|' after 1 binary tokens, got \"0\"");
    CHECK(parse_failure("r=2 s=2\n1 | u\n") ==
          "line 2: expected 2 binary tokens, '|', 2 ring tokens; got 3 tokens");

    try {
        parse_matrix_string("r=1 s=1\n# filler\n1 | q\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("parse_matrix_file rejects a missing path") {
    CHECK_THROWS_AS(parse_matrix_file("/nonexistent/matrix.txt"), std::runtime_error);
}

TEST_CASE("formatters render types, parameters and rows") {
    CHECK(format_type(CodeType{3, 4, 2, 1, 0}) == "(3,4; 2,1,0)");
    CHECK(format_gray(GrayParams{11, 4, 3}) == "[11,4,3]");
    const Mat m = parse_matrix_string("r=3 s=4\n1 0 0 | 0 u 0 u\n");
    CHECK(format_row(m.rows[0]) == "(1,0,0 | 0,u,0,u)");
}

TEST_CASE("weight enumerators print as bivariate polynomials") {
    const std::vector<std::uint64_t> a = {1, 0, 0, 3, 1, 2, 4, 1, 2, 2, 0, 0};
    CHECK(format_enumerator(a) ==
          "x^11 + 3x^8 y^3 + x^7 y^4 + 2x^6 y^5 + 4x^5 y^6 + x^4 y^7 + 2x^3 y^8 + 2x^2 y^9");
    CHECK(format_enumerator({1}) == "1");
    CHECK(format_enumerator({0, 2}) == "2y");
    CHECK(format_enumerator({1, 1}) == "x + y");
    CHECK(format_enumerator({0, 0}) == "0");
    CHECK(format_enumerator({1, 0, 1}) == "x^2 + y^2");
}

TEST_CASE("JSON reports are deterministic and carry the expected fields") {
    const Mat g = parse_matrix_string("r=2 s=2\n1 1 | 1+u 1+u\n");
    const Code c = Code::span(g);
    const CodeType type = standard_form(g).type;

    const auto j1 = code_report_json(c, type);
    const auto j2 = code_report_json(c, type);
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["type"] == nlohmann::json({2, 2, 0, 1, 0}));
    CHECK(j1["size"] == 4);
    CHECK(j1["minDistance"] == 4);
    CHECK(j1["grayParams"] == nlohmann::json({6, 2, 4}));

    const auto rep = one_weight_battery(g, c);
    const auto jw = one_weight_report_json(rep);
    CHECK(jw["m"] == 4);
    CHECK(jw["alpha"] == 2);
    CHECK(jw["noZeroColumns"] == true);
    CHECK(jw["allPassed"] == true);
    CHECK(jw["checks"].size() == 15);
    CHECK(jw["checks"][0]["name"] == "type-size");

    const Mat zc = parse_matrix_string("r=2 s=1\n1 0 | u\n");
    const auto jz = one_weight_report_json(one_weight_battery(zc, Code::span(zc)));
    CHECK(jz["alpha"].is_null());
    CHECK(jz["noZeroColumns"] == false);
}

TEST_CASE("bounds report covers all three Plotkin cases") {
    const auto perfect = bounds_report_json(7, 4, 3);
    CHECK(perfect["spherePacking"]["lhs"] == "128");
    CHECK(perfect["spherePacking"]["rhs"] == "128");
    CHECK(perfect["spherePacking"]["perfect"] == true);
    CHECK(perfect["plotkin"]["case"] == "not applicable");
    CHECK(perfect["catalogOptimal"].is_null());

    const auto above = bounds_report_json(7, 3, 4);
    CHECK(above["plotkin"]["case"] == "d > n/2");
    CHECK(above["plotkin"]["bound"] == 8);
    CHECK(above["plotkin"]["attained"] == true);

    const auto at_half = bounds_report_json(8, 5, 4);
    CHECK(at_half["plotkin"]["case"] == "paper-form bound 4n (d = n/2)");
    CHECK(at_half["plotkin"]["bound"] == 32);

    const auto cataloged = bounds_report_json(21, 3, 12);
    CHECK(cataloged["catalogOptimal"] == true);
}

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "z2z2u/code.hpp"
#include "z2z2u/matrix.hpp"
#include "z2z2u/one_weight.hpp"

#include "json.hpp"

namespace z2z2u {

// --- Matrix text format -----------------------------------------------------
//
//   line 1:        r=<int> s=<int>
//   further lines: r binary tokens (0/1), a literal '|', s ring tokens
//                  (0/1/u/w, with 1+u accepted as an alias for w)
//
// Blank lines and lines starting with '#' are ignored.  Errors are reported
// as ParseError carrying the 1-based line number and the offending token.

Mat parse_matrix(std::istream& in);
Mat parse_matrix_string(const std::string& text);
Mat parse_matrix_file(const std::string& path);

// Canonical printer; parse_matrix_string(print_matrix(m)) reproduces m.
std::string print_matrix(const Mat& m);

// --- Small formatting helpers (shared by CLI and reports) -------------------

// "(3,4; 2,1,0)"
std::string format_type(const CodeType& t);

// "[11,4,3]"
std::string format_gray(const GrayParams& g);

// "(1,0,0 | 0,u,0,u)"
std::string format_row(const Vec& v);

// "x^11 + 3x^8 y^3 + ..." from coefficients A[0..n]; terms ascend in the
// y-exponent, zero coefficients are skipped.
std::string format_enumerator(const std::vector<std::uint64_t>& a);

// --- JSON report fragments ---------------------------------------------------
//
// Schema: type=[r,s,k0,k1,k2], size, minDistance, weightEnumerator=[A0..An],
// grayParams=[n,k,d].  nlohmann::json keeps object keys sorted, so dumps are
// byte-identical for identical inputs.

nlohmann::json code_report_json(const Code& c, const CodeType& type);

// Mirrors OneWeightReport's fields.
nlohmann::json one_weight_report_json(const OneWeightReport& rep);

// Sphere-packing / Plotkin / catalog verdicts for binary parameters (n,k,d).
nlohmann::json bounds_report_json(int n, int k, int d);

} // namespace z2z2u

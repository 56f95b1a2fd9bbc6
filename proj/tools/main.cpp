#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "z2z2u/bounds.hpp"
#include "z2z2u/code.hpp"
#include "z2z2u/cyclic.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/io.hpp"
#include "z2z2u/matrix.hpp"
#include "z2z2u/one_weight.hpp"
#include "z2z2u/poly.hpp"
#include "z2z2u/reference_suite.hpp"

namespace {

// Exit codes: 0 success, 1 analysis-level failure, 2 input error, 3 cap hit.
constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

using namespace z2z2u;

void print_rows(const Mat& m, std::ostream& out) {
    for (const Vec& v : m.rows) {
        out << " ";
        for (int i = 0; i < m.r; ++i) out << ' ' << (v.bin_at(i) ? '1' : '0');
        out << " |";
        for (int j = 0; j < m.s; ++j) out << ' ' << v.ring_at(j).token();
        out << "\n";
    }
}

std::vector<std::string> rows_as_strings(const Mat& m) {
    std::vector<std::string> out;
    for (const Vec& v : m.rows) {
        std::string line;
        for (int i = 0; i < m.r; ++i) line += (v.bin_at(i) ? "1 " : "0 ");
        line += "|";
        for (int j = 0; j < m.s; ++j) {
            line += ' ';
            line += v.ring_at(j).token();
        }
        out.push_back(line);
    }
    return out;
}

void print_bounds_text(const GrayParams& gp, std::ostream& out) {
    const auto j = bounds_report_json(gp.n, gp.k, gp.d);
    const auto& sp = j["spherePacking"];
    out << "sphere packing " << sp["lhs"].get<std::string>() << " <= "
        << sp["rhs"].get<std::string>() << (sp["perfect"].get<bool>() ? ", perfect" : "") << "\n";
    const auto& pl = j["plotkin"];
    if (!pl.contains("bound"))
        out << "Plotkin not applicable (d <= n/2)\n";
    else
        out << "Plotkin bound " << pl["bound"].get<std::uint64_t>()
            << (pl["attained"].get<bool>() ? ", attained" : ", not attained") << "\n";
    if (j["catalogOptimal"].is_null())
        out << "catalog optimal: not cataloged\n";
    else
        out << "catalog optimal: " << (j["catalogOptimal"].get<bool>() ? "yes" : "no") << "\n";
}

void print_battery_text(const OneWeightReport& rep, std::ostream& out) {
    out << "one-weight m=" << rep.m;
    if (rep.alpha) out << " alpha=" << *rep.alpha;
    out << "\n";
    for (const auto& c : rep.checks) {
        if (!c.applicable)
            out << "  n/a  " << c.name << "\n";
        else
            out << (c.passed ? "  pass " : "  FAIL ") << c.name << "\n";
    }
}

// Runs the one-weight battery when the code is one-weight.
std::optional<OneWeightReport> maybe_battery(const Mat& g, const Code& c) {
    if (c.size() < 2 || !c.one_weight()) return std::nullopt;
    return one_weight_battery(g, c);
}

int cmd_analyze(const std::string& path, bool json, bool expect_one_weight,
                std::size_t enum_cap) {
    const Mat g = parse_matrix_file(path);
    const Code c = Code::span(g, enum_cap);
    if (c.size() < 2) {
        std::cerr << "error: the input generates the zero code; nothing to analyze\n";
        return kExitInput;
    }
    const auto sf = standard_form(g);
    const Mat h = parity_check(g);
    const Code dual = Code::span(h, enum_cap);
    const auto gp = c.gray_params();
    const auto gpd = dual.gray_params();
    const auto battery = maybe_battery(g, c);

    if (json) {
        nlohmann::json j = code_report_json(c, sf.type);
        j["standardForm"] = rows_as_strings(sf.mat);
        j["parityCheck"] = rows_as_strings(h);
        j["dual"] = code_report_json(dual, standard_form(h).type);
        j["bounds"] = bounds_report_json(gp.n, gp.k, gp.d);
        j["oneWeight"] = battery ? one_weight_report_json(*battery) : nlohmann::json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "type " << format_type(sf.type) << "\n";
        std::cout << "size " << c.size() << "\n";
        std::cout << "standard form:\n";
        print_rows(sf.mat, std::cout);
        std::cout << "parity check:\n";
        print_rows(h, std::cout);
        std::cout << "minimum distance " << c.min_distance() << "\n";
        std::cout << "weight enumerator " << format_enumerator(c.weight_enumerator()) << "\n";
        std::cout << "Gray image " << format_gray(gp) << "\n";
        print_bounds_text(gp, std::cout);
        std::cout << "dual type " << format_type(standard_form(h).type) << "\n";
        std::cout << "dual size " << dual.size() << "\n";
        std::cout << "dual minimum distance " << dual.min_distance() << "\n";
        std::cout << "dual weight enumerator " << format_enumerator(dual.weight_enumerator())
                  << "\n";
        std::cout << "dual Gray image " << format_gray(gpd) << "\n";
        if (battery)
            print_battery_text(*battery, std::cout);
        else
            std::cout << "one-weight no\n";
    }

    if (expect_one_weight && !battery) {
        std::cerr << "analysis failure: the code is not one-weight\n";
        return kExitAnalysis;
    }
    return kExitOk;
}

// Parses a polynomial flag; "x^<n>-1" denotes the zero residue mod x^n - 1.
Poly parse_poly_flag(const std::string& text, const std::string& flag, int n) {
    if (text == "x^" + std::to_string(n) + "-1") return Poly::zero();
    const auto p = Poly::parse(text);
    if (!p) throw std::invalid_argument("invalid polynomial for " + flag + ": \"" + text + "\"");
    return *p;
}

int cmd_cyclic(int r, int s, const std::string& f_text, const std::string& l_text,
               const std::string& g_text, const std::string& a_text, bool json,
               std::size_t enum_cap) {
    if (r < 1 || r > 63 || s < 1 || s > 63) {
        std::cerr << "error: need 1 <= r,s <= 63\n";
        return kExitInput;
    }
    CyclicGens gens{r, s, std::nullopt, Poly::zero(), Poly::zero(), Poly::zero()};
    if (!f_text.empty() && f_text != "absent") {
        const Poly f = parse_poly_flag(f_text, "--f", r);
        gens.f = f.is_zero() ? Poly::xn_minus_1(r) : f;
    }
    gens.l = parse_poly_flag(l_text, "--l", r);
    gens.g = parse_poly_flag(g_text, "--g", s);
    gens.a = parse_poly_flag(a_text, "--a", s);

    const auto val = validate(gens);
    if (!val.ok()) {
        for (const auto& e : val.errors) std::cerr << "error: " << e << "\n";
        return kExitInput;
    }

    const Mat span_rows = spanning_set(gens);
    const auto type = cyclic_type(gens);
    const Code c = cyclic_span(gens, enum_cap);
    const auto gp = c.gray_params();
    const auto battery = maybe_battery(span_rows, c);

    if (json) {
        nlohmann::json j = code_report_json(c, type);
        j["warnings"] = val.warnings;
        j["spanningSet"] = rows_as_strings(span_rows);
        j["bounds"] = bounds_report_json(gp.n, gp.k, gp.d);
        j["oneWeight"] = battery ? one_weight_report_json(*battery) : nlohmann::json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& w : val.warnings) std::cout << "warning: " << w << "\n";
        std::cout << "spanning set:\n";
        print_rows(span_rows, std::cout);
        std::cout << "type " << format_type(type) << "\n";
        std::cout << "size " << c.size() << "\n";
        std::cout << "minimum distance " << c.min_distance() << "\n";
        std::cout << "weight enumerator " << format_enumerator(c.weight_enumerator()) << "\n";
        std::cout << "Gray image " << format_gray(gp) << "\n";
        print_bounds_text(gp, std::cout);
        if (battery)
            print_battery_text(*battery, std::cout);
        else
            std::cout << "one-weight no\n";
    }
    return kExitOk;
}

int cmd_search(int r, int s, const std::string& l_text, const std::string& a_text,
               bool nonzero_g, bool json, std::size_t enum_cap, std::size_t tuple_cap) {
    std::optional<Poly> pin_l, pin_a;
    if (!l_text.empty()) pin_l = parse_poly_flag(l_text, "--l", r);
    if (!a_text.empty()) pin_a = parse_poly_flag(a_text, "--a", s);

    const auto res = cyclic_one_weight_search(r, s, enum_cap, tuple_cap, pin_l, pin_a);
    std::vector<const CyclicSearchHit*> hits;
    for (const auto& h : res.hits)
        if (!nonzero_g || !h.gens.g.is_zero()) hits.push_back(&h);

    if (json) {
        nlohmann::json j;
        j["r"] = r;
        j["s"] = s;
        j["complete"] = res.complete;
        if (!res.complete) j["capReason"] = res.cap_reason;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto* h : hits) {
            const Code c = cyclic_span(h->gens, enum_cap);
            const auto gp = c.gray_params();
            nlohmann::json e;
            e["l"] = h->gens.l.to_string();
            e["g"] = h->gens.g.to_string();
            e["a"] = h->gens.a.to_string();
            e["type"] = {h->type.r, h->type.s, h->type.k0, h->type.k1, h->type.k2};
            e["m"] = h->m;
            e["grayParams"] = {gp.n, gp.k, gp.d};
            const auto opt = catalog_optimal(gp.n, gp.k, gp.d);
            e["catalogOptimal"] = opt ? nlohmann::json(*opt) : nlohmann::json(nullptr);
            arr.push_back(e);
        }
        j["hits"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "search r=" << r << " s=" << s;
        if (pin_l) std::cout << " l=" << pin_l->to_string();
        if (pin_a) std::cout << " a=" << pin_a->to_string();
        if (nonzero_g) std::cout << " (g != 0 only)";
        std::cout << "\n";
        for (const auto* h : hits) {
            const Code c = cyclic_span(h->gens, enum_cap);
            const auto gp = c.gray_params();
            const auto opt = catalog_optimal(gp.n, gp.k, gp.d);
            std::cout << "l=" << h->gens.l.to_string() << " g=" << h->gens.g.to_string()
                      << " a=" << h->gens.a.to_string() << "  type " << format_type(h->type)
                      << "  m=" << h->m << "  Gray " << format_gray(gp) << "  "
                      << (opt ? (*opt ? "optimal" : "suboptimal") : "not cataloged") << "\n";
        }
        if (hits.empty()) {
            std::cout << "no one-weight cyclic codes found\n";
            std::cout << "note: with g != 0, one-weight cyclic codes exist only for r = s,\n"
                         "      namely l = g = a = (x^s-1)/(x+1) of type (s,s; 0,1,0) with "
                         "m = 2s;\n"
                         "      r != s leaves only the g = 0 family, and none fits here\n";
        } else {
            std::cout << hits.size() << (hits.size() == 1 ? " code" : " codes") << " found\n";
        }
    }

    if (!res.complete) {
        std::cerr << "search incomplete: " << res.cap_reason << "\n";
        return kExitCap;
    }
    return kExitOk;
}

int cmd_verify_paper() {
    const auto checks = run_reference_suite();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        if (c.passed) {
            ++passed;
            std::cout << "PASS " << c.key << "\n";
        } else {
            std::cout << "FAIL " << c.key << ": " << c.detail << "\n";
        }
    }
    std::cout << passed << "/" << checks.size() << " reference checks passed\n";
    return passed == checks.size() ? kExitOk : kExitAnalysis;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear and cyclic codes over Z2^r x (Z2+uZ2)^s: construction, "
                 "weight analysis, duality, one-weight classification, bounds"};
    app.require_subcommand(1);

    std::string matrix_path, f_text, l_text, g_text, a_text;
    int r = 0, s = 0;
    bool json = false, expect_one_weight = false, nonzero_g = false;
    std::size_t enum_cap = kDefaultEnumCap;
    std::size_t tuple_cap = std::size_t{1} << 20;

    auto* analyze = app.add_subcommand("analyze", "Analyze a code given by a generator matrix");
    analyze->add_option("--matrix", matrix_path, "matrix file (r=/s= header, token rows)")
        ->required();
    analyze->add_flag("--json", json, "emit a JSON report");
    analyze->add_flag("--expect-one-weight", expect_one_weight,
                      "exit 1 when the code is not one-weight");
    analyze->add_option("--enum-cap", enum_cap, "codeword enumeration cap")
        ->envname("Z2Z2U_ENUM_CAP");

    auto* cyclic = app.add_subcommand("cyclic", "Analyze a cyclic code from generator polynomials");
    cyclic->add_option("--r", r, "binary block length")->required();
    cyclic->add_option("--s", s, "ring block length (odd)")->required();
    cyclic->add_option("--f", f_text, "first generator; \"absent\" or x^r-1 for the default");
    cyclic->add_option("--l", l_text, "binary part of the second generator")->required();
    cyclic->add_option("--g", g_text, "free part; 0 or x^s-1 for the zero residue")->required();
    cyclic->add_option("--a", a_text, "u-part of the second generator")->required();
    cyclic->add_flag("--json", json, "emit a JSON report");
    cyclic->add_option("--enum-cap", enum_cap, "codeword enumeration cap")
        ->envname("Z2Z2U_ENUM_CAP");

    auto* search = app.add_subcommand("search", "Search one-weight cyclic codes for given r, s");
    search->add_option("--r", r, "binary block length")->required();
    search->add_option("--s", s, "ring block length (odd)")->required();
    search->add_option("--l", l_text, "pin l instead of scanning all residues");
    search->add_option("--a", a_text, "pin a instead of scanning all divisors");
    search->add_flag("--nonzero-g", nonzero_g, "report only hits with g != 0");
    search->add_flag("--json", json, "emit a JSON report");
    search->add_option("--enum-cap", enum_cap, "codeword enumeration cap")
        ->envname("Z2Z2U_ENUM_CAP");
    search->add_option("--tuple-cap", tuple_cap, "generator tuple budget")
        ->envname("Z2Z2U_DIVISOR_CAP");

    auto* verify = app.add_subcommand("verify-paper", "Recompute every reference value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(matrix_path, json, expect_one_weight, enum_cap);
        if (cyclic->parsed())
            return cmd_cyclic(r, s, f_text, l_text, g_text, a_text, json, enum_cap);
        if (search->parsed())
            return cmd_search(r, s, l_text, a_text, nonzero_g, json, enum_cap, tuple_cap);
        if (verify->parsed()) return cmd_verify_paper();
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

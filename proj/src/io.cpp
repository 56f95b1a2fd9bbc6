#include "z2z2u/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "z2z2u/bounds.hpp"
#include "z2z2u/errors.hpp"

namespace z2z2u {
namespace {

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {out.rbegin(), out.rend()};
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Parses "key=<int>" and returns the value, or -1 if the token is malformed.
int parse_kv_int(const std::string& tok, const std::string& key) {
    if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
        tok[key.size()] != '=')
        return -1;
    int value = 0;
    for (std::size_t i = key.size() + 1; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return -1;
        value = value * 10 + (tok[i] - '0');
        if (value > 1000) return -1;
    }
    return value;
}

} // namespace

Mat parse_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;

    // Header: "r=<int> s=<int>".
    int r = -1, s = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokenize(line);
        if (toks.size() != 2 || (r = parse_kv_int(toks[0], "r")) < 0 ||
            (s = parse_kv_int(toks[1], "s")) < 0)
            throw ParseError(lineno, "expected header \"r=<int> s=<int>\", got \"" + line + "\"");
        break;
    }
    if (r < 0) throw ParseError(lineno + 1, "missing header \"r=<int> s=<int>\"");
    if (r + s == 0 || r > 64 || s > 64)
        throw ParseError(lineno, "r and s must satisfy 0 <= r,s <= 64 with r+s >= 1");

    Mat m(r, s);
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokenize(line);
        if (toks.size() != static_cast<std::size_t>(r + s + 1))
            throw ParseError(lineno, "expected " + std::to_string(r) + " binary tokens, '|', " +
                                         std::to_string(s) + " ring tokens; got " +
                                         std::to_string(toks.size()) + " tokens");
        if (toks[r] != "|")
            throw ParseError(lineno, "expected '|' after " + std::to_string(r) +
                                         " binary tokens, got \"" + toks[r] + "\"");
        Vec v(r, s);
        for (int i = 0; i < r; ++i) {
            if (toks[i] == "1")
                v.set_bin(i, true);
            else if (toks[i] != "0")
                throw ParseError(lineno, "invalid binary token \"" + toks[i] + "\"");
        }
        for (int j = 0; j < s; ++j) {
            auto e = RingElem::parse(toks[r + 1 + j]);
            if (!e)
                throw ParseError(lineno, "invalid ring token \"" + toks[r + 1 + j] + "\"");
            v.set_ring(j, *e);
        }
        m.append(v);
    }
    return m;
}

Mat parse_matrix_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_matrix(ss);
}

Mat parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return parse_matrix(in);
}

std::string print_matrix(const Mat& m) {
    std::ostringstream out;
    out << "r=" << m.r << " s=" << m.s << "\n";
    for (const Vec& v : m.rows) {
        for (int i = 0; i < m.r; ++i) out << (v.bin_at(i) ? "1 " : "0 ");
        out << "|";
        for (int j = 0; j < m.s; ++j) out << ' ' << v.ring_at(j).token();
        out << "\n";
    }
    return out.str();
}

std::string format_type(const CodeType& t) {
    std::ostringstream out;
    out << "(" << t.r << "," << t.s << "; " << t.k0 << "," << t.k1 << "," << t.k2 << ")";
    return out.str();
}

std::string format_gray(const GrayParams& g) {
    std::ostringstream out;
    out << "[" << g.n << "," << g.k << "," << g.d << "]";
    return out.str();
}

std::string format_row(const Vec& v) {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < v.r(); ++i) out << (i ? "," : "") << (v.bin_at(i) ? "1" : "0");
    if (v.r() > 0 && v.s() > 0) out << " | ";
    for (int j = 0; j < v.s(); ++j) out << (j ? "," : "") << v.ring_at(j).token();
    out << ")";
    return out.str();
}

std::string format_enumerator(const std::vector<std::uint64_t>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    std::ostringstream out;
    bool first = true;
    for (int w = 0; w <= n; ++w) {
        if (a[w] == 0) continue;
        if (!first) out << " + ";
        first = false;
        const int e = n - w;
        const bool has_xy = e > 0 || w > 0;
        if (a[w] != 1 || !has_xy) out << a[w];
        if (e >= 1) out << "x" << (e > 1 ? "^" + std::to_string(e) : "");
        if (w >= 1) out << (e >= 1 ? " " : "") << "y" << (w > 1 ? "^" + std::to_string(w) : "");
    }
    if (first) out << "0";
    return out.str();
}

nlohmann::json code_report_json(const Code& c, const CodeType& type) {
    nlohmann::json j;
    j["type"] = {type.r, type.s, type.k0, type.k1, type.k2};
    j["size"] = c.size();
    j["minDistance"] = c.min_distance();
    j["weightEnumerator"] = c.weight_enumerator();
    auto g = c.gray_params();
    j["grayParams"] = {g.n, g.k, g.d};
    return j;
}

nlohmann::json one_weight_report_json(const OneWeightReport& rep) {
    nlohmann::json j;
    j["type"] = {rep.type.r, rep.type.s, rep.type.k0, rep.type.k1, rep.type.k2};
    j["m"] = rep.m;
    j["noZeroColumns"] = rep.no_zero_columns;
    if (rep.alpha)
        j["alpha"] = *rep.alpha;
    else
        j["alpha"] = nullptr;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}});
    j["checks"] = checks;
    j["allPassed"] = rep.all_passed();
    return j;
}

nlohmann::json bounds_report_json(int n, int k, int d) {
    nlohmann::json j;
    auto sp = sphere_packing(n, k, d);
    j["spherePacking"] = {{"lhs", u128_to_string(sp.lhs)},
                          {"rhs", u128_to_string(sp.rhs)},
                          {"satisfied", sp.satisfied},
                          {"perfect", sp.perfect}};
    auto pl = plotkin(n, k, d);
    nlohmann::json pj;
    switch (pl.kase) {
        case PlotkinEval::Case::none:
            pj["case"] = "not applicable";
            break;
        case PlotkinEval::Case::at_half:
            pj["case"] = "paper-form bound 4n (d = n/2)";
            pj["bound"] = pl.bound;
            pj["attained"] = pl.attained;
            break;
        case PlotkinEval::Case::above_half:
            pj["case"] = "d > n/2";
            pj["bound"] = pl.bound;
            pj["attained"] = pl.attained;
            break;
    }
    j["plotkin"] = pj;
    auto opt = catalog_optimal(n, k, d);
    if (opt)
        j["catalogOptimal"] = *opt;
    else
        j["catalogOptimal"] = nullptr;
    return j;
}

} // namespace z2z2u

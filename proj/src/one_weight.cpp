#include "z2z2u/one_weight.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "z2z2u/errors.hpp"
#include "z2z2u/ring.hpp"

namespace z2z2u {

namespace {

struct Family {
    int r, s, k0, k1, k2;
    [[nodiscard]] int rb() const { return r - k0; }      // binary columns past the pivots
    [[nodiscard]] int sb() const { return s - k1 - k2; } // ring columns past both pivot groups
};

// Rows of the standard-form template [I A1 | 0 0 uT; 0 S | I A B1+uB2;
// 0 0 | 0 uI uD], decoded from a packed choice of the free entries.

Vec make_free_row(const Family& f, int idx, std::uint64_t bits) {
    Vec v(f.r, f.s);
    v.set_ring(idx, RingElem::one());
    int b = 0;
    for (int i = 0; i < f.rb(); ++i) v.set_bin(f.k0 + i, (bits >> b++) & 1);
    for (int i = 0; i < f.k2; ++i)
        if ((bits >> b++) & 1) v.set_ring(f.k1 + i, RingElem::one());
    for (int i = 0; i < f.sb(); ++i) {
        const bool p = (bits >> b++) & 1;
        const bool q = (bits >> b++) & 1;
        v.set_ring(f.k1 + f.k2 + i, RingElem(p, q));
    }
    return v;
}

Vec make_u_row(const Family& f, int idx, std::uint64_t bits) {
    Vec v(f.r, f.s);
    v.set_ring(f.k1 + idx, RingElem::u());
    for (int i = 0; i < f.sb(); ++i)
        if ((bits >> i) & 1) v.set_ring(f.k1 + f.k2 + i, RingElem::u());
    return v;
}

Vec make_bin_row(const Family& f, int idx, std::uint64_t bits) {
    Vec v(f.r, f.s);
    v.set_bin(idx, true);
    int b = 0;
    for (int i = 0; i < f.rb(); ++i) v.set_bin(f.k0 + i, (bits >> b++) & 1);
    for (int i = 0; i < f.sb(); ++i)
        if ((bits >> b++) & 1) v.set_ring(f.k1 + f.k2 + i, RingElem::u());
    return v;
}

// Grows a span by one generator while insisting every new word matches the
// running weight m (-1 before the first nonzero word).  Small word lists
// only, so membership is a linear scan.
bool try_extend(std::vector<Vec>& words, int& m, const Vec& gen) {
    const auto contains = [&](const Vec& v) {
        return std::find(words.begin(), words.end(), v) != words.end();
    };
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
    const std::size_t base = words.size();
    for (const Vec& rep : reps)
        for (std::size_t i = 0; i < base; ++i) {
            const Vec w = words[i] + rep;
            const int wt = w.weight();
            if (m < 0)
                m = wt;
            else if (wt != m)
                return false;
            words.push_back(w);
        }
    return true;
}

void search_family(const Family& f, std::vector<OneWeightHit>& hits) {
    const int free_bits = f.rb() + f.k2 + 2 * f.sb();
    const int u_bits = f.sb();
    const int bin_bits = f.rb() + f.sb();
    if (free_bits > 30 || bin_bits > 30)
        throw std::invalid_argument("one_weight_template_search: family too wide");
    const int total = f.k1 + f.k2 + f.k0;

    std::vector<Vec> rows_acc;
    // Row slots in order free, u, binary; a subcode of a one-weight code is
    // one-weight, so prefixes that already mix weights are pruned.
    const auto rec = [&](auto&& self, int slot, const std::vector<Vec>& words, int m) -> void {
        if (slot == total) {
            Mat gmat(f.r, f.s);
            for (const Vec& v : rows_acc) gmat.append(v);
            hits.push_back({gmat, CodeType{f.r, f.s, f.k0, f.k1, f.k2}, m});
            return;
        }
        const bool is_free = slot < f.k1;
        const bool is_u = !is_free && slot < f.k1 + f.k2;
        const int nbits = is_free ? free_bits : (is_u ? u_bits : bin_bits);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nbits); ++bits) {
            const Vec row = is_free ? make_free_row(f, slot, bits)
                           : is_u  ? make_u_row(f, slot - f.k1, bits)
                                   : make_bin_row(f, slot - f.k1 - f.k2, bits);
            std::vector<Vec> next = words;
            int m_next = m;
            if (!try_extend(next, m_next, row)) continue;
            rows_acc.push_back(row);
            self(self, slot + 1, next, m_next);
            rows_acc.pop_back();
        }
    };
    rec(rec, 0, std::vector<Vec>{Vec(f.r, f.s)}, -1);
}

} // namespace

bool OneWeightReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return !c.applicable || c.passed; });
}

const CheckResult* OneWeightReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Mat replicate(const Mat& g, int gamma) {
    if (gamma < 1) throw std::invalid_argument("replicate: gamma must be positive");
    Mat out(g.r * gamma, g.s * gamma);
    for (const Vec& v : g.rows) {
        Vec w(out.r, out.s);
        for (int c = 0; c < gamma; ++c) {
            for (int i = 0; i < g.r; ++i) w.set_bin(c * g.r + i, v.bin_at(i));
            for (int j = 0; j < g.s; ++j) w.set_ring(c * g.s + j, v.ring_at(j));
        }
        out.append(w);
    }
    return out;
}

OneWeightReport one_weight_battery(const Mat& g, const Code& c) {
    const auto mw = c.one_weight();
    if (!mw) throw NotOneWeight("one_weight_battery: code is not one-weight");

    OneWeightReport rep;
    rep.m = *mw;
    rep.type = standard_form(g).type;
    rep.no_zero_columns = !c.has_zero_column();

    const std::uint64_t size = c.size();
    const int n = c.length();
    const int m = rep.m;
    const bool nzc = rep.no_zero_columns;
    if (nzc && size >= 2 && static_cast<std::uint64_t>(n) % (size - 1) == 0)
        rep.alpha = static_cast<std::uint64_t>(n) / (size - 1);

    const auto add = [&](const char* name, bool applicable, bool passed) {
        rep.checks.push_back({name, applicable, passed});
    };

    add("type-size", true, (std::uint64_t{1} << rep.type.log2_size()) == size);

    // m = alpha 2^(k-1), n = alpha (2^k - 1); both folded into alpha's
    // definition plus 2m = alpha |C|.
    add("weight-formula", nzc,
        rep.alpha.has_value() && static_cast<std::uint64_t>(m) * 2 == *rep.alpha * size);

    {
        std::uint64_t total = 0;
        for (const Vec& w : c.words()) total += static_cast<std::uint64_t>(w.weight());
        add("sum-of-weights", nzc, total * 2 == size * static_cast<std::uint64_t>(n));
    }

    { // odd m forces r odd and C = <(1...1 | u...u)>
        bool ok = true;
        if (m % 2 == 1) {
            Vec all(c.r(), c.s());
            for (int i = 0; i < c.r(); ++i) all.set_bin(i, true);
            for (int j = 0; j < c.s(); ++j) all.set_ring(j, RingElem::u());
            ok = c.r() % 2 == 1 && size == 2 && c.contains(all);
        }
        add("odd-weight-structure", nzc && m % 2 == 1, ok);
    }

    const auto a_spec = c.weight_enumerator();

    add("dual-distance-2", nzc, !nzc || macwilliams_coeff(a_spec, size, 1) == 0);

    if (nzc && rep.alpha) { // B_2 = alpha (alpha - 1)(|C| - 1)/2, zero iff alpha = 1
        const std::uint64_t b2 = macwilliams_coeff(a_spec, size, 2);
        const std::uint64_t lambda = *rep.alpha * (*rep.alpha - 1) * (size - 1) / 2;
        add("dual-lambda", true, b2 == lambda && (b2 == 0) == (*rep.alpha == 1));
    } else {
        add("dual-lambda", false, true);
    }

    if (nzc && rep.alpha == std::uint64_t{1} && size >= 4) {
        // alpha = 1, |C| >= 4: d(dual) = 3 exactly, with B_3 = kappa.
        const std::uint64_t b3 = macwilliams_coeff(a_spec, size, 3);
        const std::uint64_t kappa = (size - 1) * (size - 2) / 6;
        const Code dual = dual_code(g);
        add("dual-distance-3", true, b3 == kappa && kappa >= 1 && dual.min_distance() == 3);
    } else {
        add("dual-distance-3", false, true);
    }

    { // unit coordinates per codeword: none, or exactly m/2
        bool ok = true;
        for (const Vec& w : c.words()) {
            const int units = std::popcount(w.p_word());
            if (units != 0 && units * 2 != m) {
                ok = false;
                break;
            }
        }
        add("unit-count", true, ok);
    }

    { // independent pairs of free words: shared unit positions, m/4 + m/4 split
        const bool app = size <= 4096;
        bool pos_ok = true, split_ok = true;
        if (app) {
            std::vector<const Vec*> free_words;
            for (const Vec& w : c.words())
                if (w.p_word() != 0) free_words.push_back(&w);
            for (std::size_t i = 0; i < free_words.size(); ++i)
                for (std::size_t j = i + 1; j < free_words.size(); ++j) {
                    const Vec& v = *free_words[i];
                    const Vec& w = *free_words[j];
                    if (w == v.scaled(RingElem::w())) continue; // w in Rv
                    if (v.p_word() != w.p_word()) {
                        pos_ok = false;
                        continue;
                    }
                    const std::uint64_t units = v.p_word() & w.p_word();
                    const std::uint64_t diff_plane = v.q_word() ^ w.q_word();
                    const int same = std::popcount(units & ~diff_plane);
                    const int diff = std::popcount(units & diff_plane);
                    if (4 * same != m || 4 * diff != m) split_ok = false;
                }
        }
        add("free-pair-positions", app, pos_ok);
        add("free-pair-split", app, split_ok);
    }

    add("k1-bound", true, rep.type.k1 <= 1);

    {
        const bool app = nzc && c.r() >= 1 && c.s() >= 1;
        add("non-separability", app, !app || !c.is_separable());
    }

    { // doubling both blocks keeps the type and doubles the weight
        const bool app = 2 * c.r() <= 64 && 2 * c.s() <= 64;
        bool ok = true;
        if (app) {
            const Mat g2 = replicate(g, 2);
            const Code c2 = Code::span(g2);
            const CodeType expect{2 * c.r(), 2 * c.s(), rep.type.k0, rep.type.k1, rep.type.k2};
            ok = standard_form(g2).type == expect && c2.one_weight() == std::optional<int>(2 * m);
        }
        add("replication", app, ok);
    }

    { // equidistance and the Gray image sharing the single weight
        const bool app = size <= 4096;
        bool eq_ok = true;
        if (app) {
            const auto& ws = c.words();
            for (std::size_t i = 0; i < ws.size() && eq_ok; ++i)
                for (std::size_t j = i + 1; j < ws.size(); ++j)
                    if ((ws[i] + ws[j]).weight() != m) {
                        eq_ok = false;
                        break;
                    }
        }
        add("equidistance", app, eq_ok);

        bool gray_ok = true;
        for (const Vec& w : c.words()) {
            if (w.is_zero()) continue;
            int hw = 0;
            for (const std::uint8_t bit : w.gray()) hw += bit;
            if (hw != m) {
                gray_ok = false;
                break;
            }
        }
        add("gray-one-weight", true, gray_ok);
    }

    return rep;
}

std::vector<OneWeightHit> one_weight_template_search(int max_r, int max_s, int max_k) {
    if (max_r < 1 || max_s < 1 || max_k < 1)
        throw std::invalid_argument("one_weight_template_search: bounds must be positive");
    std::vector<OneWeightHit> hits;
    for (int r = 1; r <= max_r; ++r)
        for (int s = 1; s <= max_s; ++s)
            for (int k0 = 0; k0 <= std::min(r, max_k); ++k0)
                for (int k1 = 0; k0 + 2 * k1 <= max_k && k1 <= s; ++k1)
                    for (int k2 = 0; k0 + 2 * k1 + k2 <= max_k && k1 + k2 <= s; ++k2) {
                        if (k0 + 2 * k1 + k2 == 0) continue;
                        search_family({r, s, k0, k1, k2}, hits);
                    }
    return hits;
}

} // namespace z2z2u

#include "adskit/sequences.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "adskit/gf.hpp"

namespace adskit {

SeqBits char_seq(const std::vector<Elem>& D, std::uint64_t n) {
    SeqBits s;
    s.n = n;
    s.bits.assign(n, 0);
    for (Elem d : D) {
        if (d >= n) throw std::invalid_argument("support element out of range");
        s.bits[d] = 1;
    }
    return s;
}

std::vector<Elem> support(const SeqBits& s) {
    std::vector<Elem> D;
    for (std::uint64_t t = 0; t < s.n; ++t)
        if (s.bits[t]) D.push_back(t);
    return D;
}

std::int64_t crosscorr(const SeqBits& s, const SeqBits& u, std::uint64_t w) {
    if (s.n != u.n) throw std::invalid_argument("cross correlation needs equal periods");
    std::int64_t acc = 0;
    for (std::uint64_t t = 0; t < s.n; ++t)
        acc += (s.bits[(t + w) % s.n] == u.bits[t]) ? 1 : -1;
    return acc;
}

std::int64_t autocorr(const SeqBits& s, std::uint64_t w) { return crosscorr(s, s, w); }

CorrSpectrum autocorr_spectrum(const SeqBits& s) {
    CorrSpectrum out;
    out.n = s.n;
    out.values.resize(s.n);
    for (std::uint64_t w = 0; w < s.n; ++w) out.values[w] = autocorr(s, w);
    std::set<std::int64_t> off(out.values.begin() + 1, out.values.end());
    std::set<std::int64_t> all(out.values.begin(), out.values.end());
    out.levels = all.size();
    auto within = [&](std::initializer_list<std::int64_t> allowed) {
        return std::all_of(off.begin(), off.end(), [&](std::int64_t v) {
            return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
        });
    };
    if (s.n <= 1) {
        out.optimal = out.ideal = false;
        return out;
    }
    switch (s.n % 4) {
        case 3: out.optimal = within({-1}); break;
        case 1: out.optimal = within({1, -3}); break;
        case 2: out.optimal = within({-2, 2}); break;
        case 0: out.optimal = within({0, 4}) || within({0, -4}); break;
    }
    out.ideal = (s.n % 4 == 3) && within({-1});
    return out;
}

std::optional<AdsVerdict> ads_from_sequence(const SeqBits& s) {
    auto spec = autocorr_spectrum(s);
    std::map<std::int64_t, std::uint64_t> mult;
    for (std::uint64_t w = 1; w < s.n; ++w) ++mult[spec.values[w]];
    if (mult.size() != 2) return std::nullopt;
    auto lo = mult.begin();          // smaller correlation value <-> d = lambda
    auto hi = std::next(lo);
    if (hi->first - lo->first != 4) return std::nullopt;
    std::uint64_t k = 0;
    for (auto b : s.bits) k += b;
    // C = n - 4(k - d)  =>  d = k - (n - C)/4
    std::int64_t n = std::int64_t(s.n);
    if ((n - lo->first) % 4 != 0) return std::nullopt;
    std::int64_t lambda = std::int64_t(k) - (n - lo->first) / 4;
    if (lambda < 0) return std::nullopt;
    AdsVerdict a;
    a.v = s.n;
    a.k = k;
    a.lambda = std::uint64_t(lambda);
    a.t = lo->second;
    auto zn = GroupCtx::cyclic(s.n);
    auto cls = classify(*zn, support(s));
    if (!cls.ads || cls.ads->lambda != a.lambda || cls.ads->t != a.t)
        throw std::logic_error("sequence bridge disagrees with the difference spectrum");
    a.S = cls.ads->S;
    return a;
}

SeqBits interleave(const SeqBits& seed, std::uint64_t delta) {
    auto grade = autocorr_spectrum(seed);
    if (!grade.ideal)
        throw std::invalid_argument("interleave needs an ideal-autocorrelation seed");
    const std::uint64_t l = seed.n;
    SeqBits u;
    u.n = 4 * l;
    u.bits.resize(u.n);
    for (std::uint64_t t = 0; t < u.n; ++t) {
        std::uint64_t row = t % 4, col = t % l;
        std::uint8_t bit;
        switch (row) {
            case 0: bit = seed.bits[col]; break;
            case 1: bit = seed.bits[(col + delta) % l]; break;
            case 2: bit = 1 - seed.bits[col]; break;
            default: bit = seed.bits[(col + delta) % l]; break;
        }
        u.bits[t] = bit;
    }
    std::map<std::int64_t, std::uint64_t> mult;
    for (std::uint64_t w = 1; w < u.n; ++w) ++mult[autocorr(u, w)];
    bool ok = mult.size() == 2 && mult.count(-4) && mult.at(-4) == l - 1 &&
              mult.count(0) && mult.at(0) == 3 * l;
    if (!ok) throw std::logic_error("interleaved spectrum missed -4 x(l-1), 0 x3l");
    return u;
}

InterleaveSupport interleave_support(const std::vector<Elem>& seed_set, std::uint64_t l,
                                     std::uint64_t delta) {
    auto zl = GroupCtx::cyclic(l);
    auto seed_cls = classify(*zl, seed_set);
    std::uint64_t k = seed_set.size();
    bool ph = seed_cls.ds && l % 4 == 3 &&
              ((2 * k == l - 1 && 4 * seed_cls.ds->lambda == l - 3) ||
               (2 * k == l + 1 && 4 * seed_cls.ds->lambda == l + 1));
    if (!ph)
        throw std::invalid_argument("interleave_support needs a Paley-Hadamard seed set");

    SeqBits u = interleave(char_seq(seed_set, l), delta);
    std::vector<Elem> D = support(u);

    InterleaveSupport out;
    std::set<Elem> row[4];
    for (Elem x : D) row[x % 4].insert(x % l);

    // Expected decomposition: rows 1 and 3 carry C - delta, row 2 the
    // complement of C.
    std::set<Elem> C(seed_set.begin(), seed_set.end());
    std::set<Elem> Cd, Cstar;
    for (Elem c : C) Cd.insert((c + l - delta % l) % l);
    for (Elem x = 0; x < l; ++x)
        if (!C.count(x)) Cstar.insert(x);
    if (row[0] != C || row[1] != Cd || row[2] != Cstar || row[3] != Cd)
        throw std::logic_error("interleave support decomposition mismatch");

    // Same statement inside Z_{4l} via the cosets of l:
    //   (l+1)C u ((l+1)(C-delta)+3l) u ((l+1)C*+2l) u ((l+1)(C-delta)+l).
    std::set<Elem> formula;
    for (Elem y : C) formula.insert((l + 1) * y % (4 * l));
    for (Elem y : Cd) formula.insert(((l + 1) * y + 3 * l) % (4 * l));
    for (Elem y : Cstar) formula.insert(((l + 1) * y + 2 * l) % (4 * l));
    for (Elem y : Cd) formula.insert(((l + 1) * y + l) % (4 * l));
    if (formula != std::set<Elem>(D.begin(), D.end()))
        throw std::logic_error("interleave support coset formula mismatch");

    out.row0.assign(row[0].begin(), row[0].end());
    out.row1.assign(row[1].begin(), row[1].end());
    out.row2.assign(row[2].begin(), row[2].end());
    out.row3.assign(row[3].begin(), row[3].end());

    ConstructedSet cs;
    cs.family = "interleave_support";
    cs.provenance = "four-row interleaving of a Paley-Hadamard seed";
    cs.group = GroupCtx::cyclic(4 * l);
    cs.set = D;
    if (2 * k == l - 1)
        cs.claims.push_back({"ADS",
                             {std::int64_t(4 * l), std::int64_t(2 * l - 1),
                              std::int64_t(l - 2), std::int64_t(l - 1)},
                             {}});
    else
        cs.claims.push_back({"ADS",
                             {std::int64_t(4 * l), std::int64_t(2 * l + 1),
                              std::int64_t(l), std::int64_t(l - 1)},
                             {}});
    verify_claims(cs);
    out.cs = std::move(cs);
    return out;
}

SeqBits mseq(std::uint64_t t) {
    if (t < 2) throw std::invalid_argument("mseq needs t >= 2");
    auto f2 = FieldCtx::make(2, t);
    const auto& m = f2->modulus();  // x^t + sum m_i x^i
    std::uint64_t n = (std::uint64_t(1) << t) - 1;
    SeqBits s;
    s.n = n;
    s.bits.resize(n);
    std::vector<std::uint8_t> reg(t, 1);  // all-ones start state
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint8_t out = reg[0];
        std::uint8_t fb = 0;
        for (std::uint64_t j = 0; j < t; ++j)
            if (m[j]) fb ^= reg[j];
        for (std::uint64_t j = 0; j + 1 < t; ++j) reg[j] = reg[j + 1];
        reg[t - 1] = fb;
        s.bits[i] = 1 - out;  // complemented: support size 2^{t-1} - 1
    }
    // sanity: the register must cycle through all 2^t - 1 nonzero states
    std::uint64_t ones = 0;
    for (auto b : s.bits) ones += b;
    if (ones != (std::uint64_t(1) << (t - 1)) - 1)
        throw std::logic_error("LFSR did not reach full period");
    return s;
}

SeqBits parse_seq(const std::string& line) {
    SeqBits s;
    for (char c : line) {
        if (c == '0') s.bits.push_back(0);
        else if (c == '1') s.bits.push_back(1);
        else if (c == '\n' || c == '\r' || c == ' ') continue;
        else throw std::invalid_argument("sequence files are lines of 0/1");
    }
    s.n = s.bits.size();
    if (s.n == 0) throw std::invalid_argument("empty sequence");
    return s;
}

std::string format_seq(const SeqBits& s) {
    std::string out;
    out.reserve(s.n);
    for (auto b : s.bits) out.push_back(b ? '1' : '0');
    return out;
}

}  // namespace adskit

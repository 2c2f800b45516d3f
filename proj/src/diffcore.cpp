#include "adskit/diffcore.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace adskit {

DiffSpectrum diff_spectrum(const GroupCtx& ctx, const std::vector<Elem>& D) {
    DiffSpectrum s;
    s.v = ctx.order();
    s.k = D.size();
    s.counts.assign(s.v, 0);
    std::vector<Elem> negs(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) negs[i] = ctx.neg(D[i]);
    for (Elem a : D)
        for (Elem nb : negs) s.counts[ctx.add(a, nb)] += 1;
    s.counts[0] = s.k;  // drop the k trivial (a,a) pairs into the definition
    return s;
}

Classification classify(const GroupCtx& ctx, const std::vector<Elem>& D) {
    return classify(ctx, D, diff_spectrum(ctx, D));
}

Classification classify(const GroupCtx& ctx, const std::vector<Elem>& D,
                        const DiffSpectrum& spec) {
    Classification out;
    const std::uint64_t v = spec.v, k = spec.k;
    if (v <= 1) {
        out.ds = DsVerdict{v, k, 0};
        return out;
    }

    std::uint64_t lo = UINT64_MAX, hi = 0;
    std::set<std::uint64_t> distinct;
    for (std::uint64_t x = 1; x < v; ++x) {
        distinct.insert(spec.counts[x]);
        lo = std::min(lo, spec.counts[x]);
        hi = std::max(hi, spec.counts[x]);
    }

    if (distinct.size() == 1) {
        out.ds = DsVerdict{v, k, lo};
    } else if (distinct.size() == 2 && hi == lo + 1) {
        AdsVerdict a;
        a.v = v; a.k = k; a.lambda = lo;
        for (std::uint64_t x = 1; x < v; ++x)
            if (spec.counts[x] == lo) a.S.push_back(x);
        a.t = a.S.size();
        out.ads = std::move(a);
    }

    // PDS: constant on D \ {0} and on the nonzero complement.
    std::vector<char> inD(v, 0);
    for (Elem d : D) inD[d] = 1;
    std::set<std::uint64_t> on, off;
    for (std::uint64_t x = 1; x < v; ++x)
        (inD[x] ? on : off).insert(spec.counts[x]);
    if (on.size() == 1 && off.size() == 1) {
        PdsVerdict p;
        p.v = v; p.k = k;
        p.lambda = *on.begin();
        p.mu = *off.begin();
        bool has_zero = !D.empty() && inD[0];
        bool symmetric = true;
        for (Elem d : D)
            if (!inD[ctx.neg(d)]) { symmetric = false; break; }
        p.regular = !has_zero && symmetric;
        p.paley_type = (v % 4 == 1) && k == (v - 1) / 2 && v >= 5 &&
                       p.lambda == (v - 5) / 4 && p.mu == (v - 1) / 4;
        out.pds = p;
    }
    return out;
}

std::pair<std::vector<Elem>, std::vector<Elem>>
lambda_sets(const GroupCtx& ctx, const std::vector<Elem>& D) {
    auto spec = diff_spectrum(ctx, D);
    auto cls = classify(ctx, D, spec);
    if (!cls.ads) throw std::domain_error("lambda_sets: set is not an ADS");
    std::vector<Elem> rest;
    std::vector<char> inS(spec.v, 0);
    for (Elem x : cls.ads->S) inS[x] = 1;
    for (std::uint64_t x = 1; x < spec.v; ++x)
        if (!inS[x]) rest.push_back(x);
    return {cls.ads->S, rest};
}

std::vector<Elem> complement(const GroupCtx& ctx, const std::vector<Elem>& D) {
    std::vector<char> inD(ctx.order(), 0);
    for (Elem d : D) inD[d] = 1;
    std::vector<Elem> out;
    out.reserve(ctx.order() - D.size());
    for (std::uint64_t x = 0; x < ctx.order(); ++x)
        if (!inD[x]) out.push_back(x);

    auto before = classify(ctx, D);
    if (before.ads) {
        auto after = classify(ctx, out);
        const auto& a = *before.ads;
        bool ok = after.ads && after.ads->k == a.v - a.k &&
                  after.ads->lambda == a.v - 2 * a.k + a.lambda && after.ads->t == a.t;
        if (!ok) throw std::logic_error("complement parameter law violated");
    }
    return out;
}

std::vector<Elem> affine_image(std::uint64_t v, std::uint64_t a, std::uint64_t b,
                               const std::vector<Elem>& D) {
    if (std::gcd(a, v) != 1)
        throw std::invalid_argument("affine multiplier must be a unit mod v");
    std::vector<Elem> out;
    out.reserve(D.size());
    for (Elem d : D) out.push_back((a * d + b) % v);
    std::sort(out.begin(), out.end());

    auto zv = GroupCtx::cyclic(v);
    auto before = classify(*zv, D);
    auto after = classify(*zv, out);
    if (before.ads) {
        bool ok = after.ads && after.ads->k == before.ads->k &&
                  after.ads->lambda == before.ads->lambda && after.ads->t == before.ads->t;
        if (!ok) throw std::logic_error("affine image changed ADS parameters");
    }
    if (before.ds) {
        bool ok = after.ds && after.ds->lambda == before.ds->lambda;
        if (!ok) throw std::logic_error("affine image changed DS parameters");
    }
    return out;
}

std::optional<DdsVerdict> dds_classify(const GroupCtx& ctx, const std::vector<Elem>& H,
                                       const std::vector<Elem>& D) {
    std::vector<char> inH(ctx.order(), 0);
    for (Elem h : H) inH[h] = 1;
    if (H.empty() || !inH[0]) throw std::invalid_argument("H must contain the identity");
    for (Elem a : H) {
        if (!inH[ctx.neg(a)]) throw std::invalid_argument("H is not closed under negation");
        for (Elem b : H)
            if (!inH[ctx.add(a, b)]) throw std::invalid_argument("H is not a subgroup");
    }

    auto spec = diff_spectrum(ctx, D);
    std::set<std::uint64_t> on, off;
    for (std::uint64_t x = 1; x < ctx.order(); ++x)
        (inH[x] ? on : off).insert(spec.counts[x]);
    if (on.size() != 1 || off.size() != 1) return std::nullopt;
    DdsVerdict d;
    d.v = ctx.order();
    d.m = H.size();
    d.k = D.size();
    d.lambda1 = *on.begin();
    d.lambda2 = *off.begin();
    d.davis_ads = (d.lambda1 > d.lambda2 ? d.lambda1 - d.lambda2 : d.lambda2 - d.lambda1) == 1;
    return d;
}

std::vector<std::int64_t> groupring_product(const GroupCtx& ctx,
                                            const std::vector<Elem>& A,
                                            const std::vector<Elem>& B) {
    std::vector<std::int64_t> out(ctx.order(), 0);
    std::vector<Elem> negs(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) negs[i] = ctx.neg(B[i]);
    for (Elem a : A)
        for (Elem nb : negs) out[ctx.add(a, nb)] += 1;
    return out;
}

std::string describe(const Classification& c) {
    std::string out;
    auto app = [&](const std::string& s) {
        if (!out.empty()) out += "; ";
        out += s;
    };
    if (c.ds)
        app("DS(" + std::to_string(c.ds->v) + "," + std::to_string(c.ds->k) + "," +
            std::to_string(c.ds->lambda) + ")");
    if (c.ads)
        app("ADS(" + std::to_string(c.ads->v) + "," + std::to_string(c.ads->k) + "," +
            std::to_string(c.ads->lambda) + "," + std::to_string(c.ads->t) + ")");
    if (c.pds)
        app("PDS(" + std::to_string(c.pds->v) + "," + std::to_string(c.pds->k) + "," +
            std::to_string(c.pds->lambda) + "," + std::to_string(c.pds->mu) + ")");
    if (out.empty()) out = "none";
    return out;
}

}  // namespace adskit

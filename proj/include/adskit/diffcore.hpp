#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adskit/groups.hpp"

namespace adskit {

// d_D(x) = |(D+x) n D| for every x, indexed by canonical element index.
// counts[0] = k; the nonzero entries sum to k(k-1) and are symmetric
// under negation.
struct DiffSpectrum {
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    std::vector<std::uint64_t> counts;
};

struct DsVerdict {
    std::uint64_t v, k, lambda;
};

struct AdsVerdict {
    std::uint64_t v, k, lambda, t;
    std::vector<Elem> S;  // the t nonzero elements hit lambda times (alias H)
};

struct PdsVerdict {
    std::uint64_t v, k, lambda, mu;
    bool regular;     // 0 not in D and D = -D
    bool paley_type;  // (v, (v-1)/2, (v-5)/4, (v-1)/4)
};

struct DdsVerdict {
    std::uint64_t v, m, k, lambda1, lambda2;
    bool davis_ads;  // |lambda1 - lambda2| = 1
};

struct Classification {
    std::optional<DsVerdict> ds;
    std::optional<AdsVerdict> ads;
    std::optional<PdsVerdict> pds;
    bool none() const { return !ds && !ads && !pds; }
};

DiffSpectrum diff_spectrum(const GroupCtx& ctx, const std::vector<Elem>& D);

// All applicable verdicts for D; a set can be several things at once
// (a Paley set is simultaneously a PDS and an ADS).
Classification classify(const GroupCtx& ctx, const std::vector<Elem>& D);
Classification classify(const GroupCtx& ctx, const std::vector<Elem>& D,
                        const DiffSpectrum& spec);

// (S, complement of S in the nonzero elements) for an ADS; S is the set
// where d_D takes the smaller value lambda.  Throws when D is not an ADS.
std::pair<std::vector<Elem>, std::vector<Elem>>
lambda_sets(const GroupCtx& ctx, const std::vector<Elem>& D);

// G \ D.  When D is a (v,k,lambda,t)-ADS, asserts the complement is a
// (v, v-k, v-2k+lambda, t)-ADS.
std::vector<Elem> complement(const GroupCtx& ctx, const std::vector<Elem>& D);

// {a d + b mod v}; requires gcd(a, v) = 1; asserts parameters preserved.
std::vector<Elem> affine_image(std::uint64_t v, std::uint64_t a, std::uint64_t b,
                               const std::vector<Elem>& D);

// Divisible-difference-set reading of D relative to the subgroup H
// (membership verified).  nullopt when the spectrum is not constant on
// H \ {0} and on G \ H.
std::optional<DdsVerdict> dds_classify(const GroupCtx& ctx, const std::vector<Elem>& H,
                                       const std::vector<Elem>& D);

// Coefficients of A(X) B(X^-1): entry h counts pairs (a,b) with a-b = h.
std::vector<std::int64_t> groupring_product(const GroupCtx& ctx,
                                            const std::vector<Elem>& A,
                                            const std::vector<Elem>& B);

std::string describe(const Classification& c);

}  // namespace adskit

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adskit/diffcore.hpp"
#include "adskit/groups.hpp"

namespace adskit {

// One claim about a constructed set.  params:
//   DS  (v, k, lambda)
//   ADS (v, k, lambda, t)
//   PDS (v, k, lambda, mu)
//   DDS (v, m, k, lambda1, lambda2)   -- relative to `subgroup`
struct Claim {
    std::string type;
    std::vector<std::int64_t> params;
    std::vector<Elem> subgroup;  // DDS only
};

// A generator output: the set, what it claims to be, and whether the claim
// has been re-checked against the difference spectrum.  Generators never
// return unverified sets; a mismatch is a hard error.
struct ConstructedSet {
    std::string family;
    std::string provenance;
    std::shared_ptr<const GroupCtx> group;
    std::vector<Elem> set;
    std::vector<Claim> claims;
    bool verified = false;
    std::vector<std::string> notes;
};

// Checks every claim against classify()/dds_classify() and sets `verified`.
// Throws std::logic_error naming the first mismatched claim.
void verify_claims(ConstructedSet& cs);

}  // namespace adskit

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace adskit {

class GroupCtx;

// GF(p^alpha) with a fixed modulus polynomial and primitive element.
//
// Elements are encoded as base-p integers of their coefficient vectors
// (constant term = low digit), so the canonical ordering of elements is
// plain integer order of the codes.
//
// Modulus selection: the lexicographically least monic irreducible of
// degree alpha (by element code of its lower coefficients) whose root is
// primitive; gamma is then the residue class of the indeterminate.  If no
// scanned modulus has a primitive root, the least irreducible is kept and
// gamma falls back to the least primitive element.  For alpha = 1 the
// field is Z_p and gamma is the least primitive root.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    static constexpr std::uint64_t kDefaultOrderBound = 1000000;

    static std::shared_ptr<const FieldCtx>
    make(std::uint64_t p, std::uint64_t alpha,
         std::uint64_t order_bound = kDefaultOrderBound,
         std::optional<std::uint64_t> gamma_override = std::nullopt);

    // Accepts any prime power q.
    static std::shared_ptr<const FieldCtx>
    make_q(std::uint64_t q, std::uint64_t order_bound = kDefaultOrderBound,
           std::optional<std::uint64_t> gamma_override = std::nullopt);

    std::uint64_t p() const { return p_; }
    std::uint64_t alpha() const { return alpha_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t gamma() const { return gamma_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    // gamma^e for 0 <= e < q-1 (table lookup).
    std::uint64_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
    // Exponent of x base gamma; throws std::domain_error on x = 0.
    std::uint64_t dlog(std::uint64_t x) const;

    std::shared_ptr<const GroupCtx> as_group() const;

    std::vector<std::uint32_t> digits(std::uint64_t a) const;
    std::uint64_t from_digits(const std::vector<std::uint32_t>& d) const;

private:
    FieldCtx() = default;
    void build_tables();

    std::uint64_t p_ = 0, alpha_ = 0, q_ = 0, gamma_ = 0;
    std::vector<std::uint32_t> modulus_;  // c0..c_alpha, monic
    std::vector<std::uint64_t> exp_;      // gamma^i, i = 0..q-2
    std::vector<std::uint32_t> dlog_;     // element code -> exponent; [0] unused
};

bool is_prime(std::uint64_t n);
// Returns (p, alpha) if n = p^alpha for a prime p, else nullopt.
std::optional<std::pair<std::uint64_t, std::uint64_t>> prime_power(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace adskit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adskit/constructed.hpp"
#include "adskit/cyclotomy.hpp"

namespace adskit {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// ---- single-field cyclotomic generators -------------------------------

// Nonzero squares of GF(q).  q = 1 (mod 4): Paley PDS
// (q,(q-1)/2,(q-5)/4,(q-1)/4), which is also an ADS with t = (q-1)/2.
// q = 3 (mod 4): the Paley-Hadamard difference set (q,(q-1)/2,(q-3)/4),
// also skew (G = D u -D u {0}).
ConstructedSet paley_qr(std::uint64_t q);

enum class CycFamily {
    quartic,           // C_0^4; q = 5 (mod 8), partition s^2 in {25, 9}; or q = 9
    quartic_zero,      // C_0^4 u {0}; q = 5 (mod 8), s^2 in {1, 49}
    quartic_zero_neg,  // C_2^4 u {0} = -(C_0^4 u {0}); same condition
    quartic_pair,      // C_i^4 u C_{i+1}^4; q = 5 (mod 8), q = s^2 + 4
    octic,             // C_0^8; conditions as published (no instance known at desk scale)
    dpw_union_sq,      // C_0^8 u C_1^8 u C_2^8 u C_5^8; q = l^2, l = t^2+2 = 3 (mod 8)
    octic_zero,        // C_0^8 u {0}; p = 9 + 64y^2 = 1 + 8b^2, y, b odd
    cubic,             // C_0^3; q in {7, 19, 25}
    cubic_zero,        // C_0^3 u {0}; q in {13, 37}
};

ConstructedSet cyclotomic_ads(std::uint64_t q, CycFamily family, std::uint64_t index = 0);
std::optional<CycFamily> cyc_family_from_name(const std::string& name);
std::string cyc_family_name(CycFamily family);

// Union of |I| = (q+-1)/2 classes of order q+1 in GF(q^2): a PDS with
// lambda = |I|(|I|-1) + q - 2|I| and mu = |I|(|I|-1).  The 1-dimensional
// subspace products S_i S_j are checked along the way.
ConstructedSet ck_pds(std::uint64_t q, const std::vector<std::uint64_t>& I);

// ---- difference-set <-> almost-difference-set element transfer --------

enum class TransferDirection {
    ds_minus_elem,        // (v,(v+3)/4,(v+3)/16)-DS minus d  -> ADS, t=(v-1)/2
    ads_plus_elem_to_ds,  // (v,(v-1)/4,(v-13)/16,(v-1)/2)-ADS plus d -> DS
    ds_plus_elem,         // (v,(v-1)/4,(v-5)/16)-DS plus d   -> ADS, t=(v-1)/2
    ads_minus_elem_to_ds, // (v,(v+3)/4,(v-5)/16,(v-1)/2)-ADS minus d -> DS
};

ConstructedSet ds_ads_transfer(TransferDirection dir, std::uint64_t v,
                               const std::vector<Elem>& D, Elem d);

// ---- function-based generators -----------------------------------------

// Support of i -> [gamma^i + 1 is a nonsquare] in Z_{q-1}.
ConstructedSet gmw_like_support(std::uint64_t q);

// Graph of x -> x^s over GF(p^m) inside GF(p^m) x GF(p^m); an
// (p^{2m}, p^m, 0, p^m - 1)-ADS exactly when x^s has perfect nonlinearity.
ConstructedSet pn_graph_ads(std::uint64_t p, std::uint64_t m, std::uint64_t s);
Rational pf_value(std::uint64_t p, std::uint64_t m, std::uint64_t s);
bool pn_exponent_admissible(std::uint64_t p, std::uint64_t m, std::uint64_t s);

// ---- Paley-Hadamard difference sets (ideal-autocorrelation supports) ---

enum class PhKind { qr, singer, twin_prime, hall_sextic };

// qr:          p = 3 (mod 4) prime, quadratic residues in Z_p
// singer:      support of the period 2^t-1 register sequence
// twin_prime:  p, p+2 prime, character-product set mapped to Z_{p(p+2)}
// hall_sextic: p = 4s^2+27 prime, C_0^6 u C_1^6 u C_3^6
ConstructedSet paley_hadamard_ds(PhKind kind, std::uint64_t param);

// ---- direct product generators ------------------------------------------

// (D2 x D1*) u (D2* x D1) in B x A for a (v,k,lambda)-DS D1 and a
// (4u^2, 2u^2-u, u^2-u)-DS D2; a DDS relative to {0} x A.
ConstructedSet jungnickel_dds(std::shared_ptr<const GroupCtx> A, const std::vector<Elem>& D1,
                              std::shared_ptr<const GroupCtx> B, const std::vector<Elem>& D2);

// Jungnickel with D2 = {i} in Z_4 and a Paley-Hadamard D1 in Z_l.
ConstructedSet cor55(std::uint64_t l, const std::vector<Elem>& D1, std::uint64_t i);

// ({0} x (C_i u C_j)) u ({1} x (C_l u C_j)) [u {(0,0)}] in GF(2) x GF(q),
// q = 5 (mod 8) with partition q = x^2 + 4y^2, y = 1 or x = 1; the class
// triple must be one of the admissible ones for the resolved partition.
ConstructedSet dhm_quartic(std::uint64_t q, std::uint64_t i, std::uint64_t j, std::uint64_t l,
                           bool with_zero);

// ({0} x C_0^2) u ({1,2,3} x C_1^2) u {(0,0),(1,0),(3,0)} in Z_4 x GF(q),
// q = 3 (mod 4): a (4q, 2q+1, q, q-1)-ADS.
ConstructedSet zlz_z4q(std::uint64_t q);

// {(a,b): a,b both nonzero squares or both nonsquares} in GF(p) x GF(q);
// an ADS exactly for q in {p-2, p, p+2}.  include_row adds GF(p) x {0}:
// then never an ADS, and for q = p+2 the twin-prime difference set.
ConstructedSet zlz_pq_squares(std::uint64_t p, std::uint64_t q, bool include_row);

// ({0,2} x A) u ({1} x B) u ({3} x B*) in Z_4 x Z_l for Paley-Hadamard
// A, B of the same order.
ConstructedSet tang_ding(std::uint64_t l, const std::vector<Elem>& A,
                         const std::vector<Elem>& B);

// (E x F) u (-E x -F) u (GF(q) x {0}) for Paley skew-Hadamard sets in
// GF(q), GF(q+4), q = 3 (mod 4).
ConstructedSet dpw_skew(std::uint64_t q);

// ---- exhaustive search ---------------------------------------------------

struct SearchOptions {
    std::optional<std::int64_t> lambda;
    std::optional<std::int64_t> t;
    std::uint64_t budget = 100000000;  // subsets examined
    bool dedup = true;                 // canonicalize by translation (+ units in Z_v)
};

// Complete list of subsets of size k classifying as DS/ADS/PDS subject to
// the constraints, canonicalized and sorted.  Throws when the subset count
// exceeds the budget.
std::vector<ConstructedSet> brute_search(std::shared_ptr<const GroupCtx> ctx, std::uint64_t k,
                                         const SearchOptions& opt = {});

// Canonical representative of D under translations (and unit multiplications
// for cyclic groups): the lexicographically least sorted image.
std::vector<Elem> canonical_form(const GroupCtx& ctx, const std::vector<Elem>& D);

}  // namespace adskit

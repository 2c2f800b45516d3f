#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "adskit/gf.hpp"

namespace adskit {

// Cyclotomic classes C_i^e of GF(q)*, q = ef+1, with respect to the field's
// fixed primitive element: C_0 = <gamma^e>, C_i = gamma^i C_0.
class CycCtx {
public:
    static CycCtx make(std::shared_ptr<const FieldCtx> field, std::uint64_t e);

    const FieldCtx& field() const { return *field_; }
    std::shared_ptr<const FieldCtx> field_ptr() const { return field_; }
    std::uint64_t e() const { return e_; }
    std::uint64_t f() const { return f_; }

    // Class index of a nonzero element (dlog mod e).
    std::uint64_t class_of(std::uint64_t x) const;
    const std::vector<std::uint64_t>& cls(std::uint64_t i) const { return classes_.at(i); }

    // (i,j)_e = |(C_i + 1) n C_j|, counted directly.
    std::uint64_t cyc_number_direct(std::uint64_t i, std::uint64_t j) const;

    // Index of -C_i: i itself when f is even, i + e/2 mod e when f is odd.
    std::uint64_t class_negation(std::uint64_t i) const;

private:
    std::shared_ptr<const FieldCtx> field_;
    std::uint64_t e_ = 0, f_ = 0;
    std::vector<std::int32_t> class_of_;  // element code -> class; [0] = -1
    std::vector<std::vector<std::uint64_t>> classes_;
};

// Integer representations parameterizing the closed-form cyclotomic numbers.
struct QuadPartition {
    enum class Form { s2_4t2, c2_27d2_of_4q, x2_4y2, affine_rep };
    Form form;
    std::int64_t first = 0;    // s, c, or x (sign-normalized); offset result y for affine
    std::int64_t second = 0;   // tp, d, or y (>= 0)
};

// s2_4t2:        q = s^2 + 4 tp^2, s = 1 mod 4, tp >= 0 (proper rep preferred).
// c2_27d2_of_4q: 4q = c^2 + 27 d^2, c = 1 mod 3, d >= 0 (proper rep preferred).
// x2_4y2:        q = x^2 + 4 y^2, x = 1 mod 4, y >= 0 (proper rep preferred).
// affine_rep:    q = offset + scale * y^2, y >= 0; first = y.
std::optional<QuadPartition> quadratic_partition(std::uint64_t q, QuadPartition::Form form,
                                                 std::int64_t offset = 0,
                                                 std::int64_t scale = 0);

// Closed-form (i,j)_e for e in {2,3,4}; sign = +/-1 resolves the ambiguous
// sign of d (e=3) or tp (e=4).  Throws when the value is not a nonnegative
// integer (misuse or wrong partition).
std::int64_t cyc_number_closed(std::uint64_t q, std::uint64_t e, std::uint64_t i,
                               std::uint64_t j, const QuadPartition& part, int sign);

// Resolves the sign by matching the single pilot number (0,1)_e against the
// direct count under the context's gamma.
int resolve_sign(const CycCtx& cctx, const QuadPartition& part);

// Partition matching the closed forms for this order (s2_4t2 for e=2,4;
// c2_27d2_of_4q for e=3), plus the matching pilot sign.
std::pair<QuadPartition, int> resolved_partition(const CycCtx& cctx);

// Coefficients of D(X)D(X^-1) over {1} u {classes} for D = U_{i in I} C_i^e
// (optionally with 0 adjoined), computed from cyclotomic numbers only.
struct UnionDiffCoeffs {
    std::int64_t identity = 0;
    std::vector<std::int64_t> per_class;
};
UnionDiffCoeffs union_diff_coeffs(const CycCtx& cctx, const std::vector<std::uint64_t>& I,
                                  bool with_zero);

}  // namespace adskit

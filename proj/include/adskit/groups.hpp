#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace adskit {

class FieldCtx;

// Canonical element index 0..v-1.  Index 0 is always the identity.
using Elem = std::uint64_t;

// Finite abelian group: Z_v, a direct product of groups, or the additive
// group of a finite field.  Immutable after construction; safe to share.
//
// Canonical index for products is mixed-radix over the factor indices
// (first factor most significant), so enumeration is lexicographic over
// factor tuples.  Field elements use the field's base-p coefficient code.
class GroupCtx {
public:
    enum class Kind { cyclic, product, field_additive };

    static std::shared_ptr<const GroupCtx> cyclic(std::uint64_t v);
    static std::shared_ptr<const GroupCtx>
    product(std::vector<std::shared_ptr<const GroupCtx>> factors);
    static std::shared_ptr<const GroupCtx>
    field_additive(std::shared_ptr<const FieldCtx> field);

    // Parses a group descriptor: `zv:<v>`, `gf:<q>`, and products joined
    // with `x` (ASCII) or a multiplication sign.
    static std::shared_ptr<const GroupCtx> parse(const std::string& spec);

    Kind kind() const { return kind_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::shared_ptr<const GroupCtx>>& factors() const { return factors_; }
    const std::shared_ptr<const FieldCtx>& field() const { return field_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    // All v elements in canonical order, identity first.
    std::vector<Elem> enumerate() const;

    // Decompose / recompose a product element into factor indices.
    std::vector<Elem> split(Elem a) const;
    Elem join(const std::vector<Elem>& parts) const;

    // Elements print as decimal integers for cyclic and field groups and as
    // parenthesized tuples for products; parse accepts the same forms.
    std::string format(Elem a) const;
    Elem parse_elem(const std::string& text) const;

    std::string descriptor() const;

private:
    GroupCtx() = default;
    void check_elem(Elem a) const;

    Kind kind_ = Kind::cyclic;
    std::uint64_t order_ = 1;
    std::vector<std::shared_ptr<const GroupCtx>> factors_;
    std::vector<std::uint64_t> radix_;  // product: order of the trailing factors
    std::shared_ptr<const FieldCtx> field_;
};

// Chinese-remainder isomorphism Z_{4l} -> Z_4 x Z_l for odd l.
class CrtMap {
public:
    explicit CrtMap(std::uint64_t l);
    std::uint64_t l() const { return l_; }
    std::pair<std::uint64_t, std::uint64_t> forward(std::uint64_t x) const;
    std::uint64_t inverse(std::uint64_t a, std::uint64_t b) const;

private:
    std::uint64_t l_;
    std::uint64_t lift_a_;  // 1 mod 4, 0 mod l
    std::uint64_t lift_b_;  // 0 mod 4, 1 mod l
};

// Set-file helpers: one set per line, elements comma separated, tuples as
// `(a,b)`; nested parentheses are honored when splitting.
std::vector<Elem> parse_elem_list(const GroupCtx& ctx, const std::string& line);
std::string format_elem_list(const GroupCtx& ctx, const std::vector<Elem>& set);

}  // namespace adskit

#include "adskit/groups.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "adskit/gf.hpp"

namespace adskit {

std::shared_ptr<const GroupCtx> GroupCtx::cyclic(std::uint64_t v) {
    if (v == 0) throw std::invalid_argument("cyclic group order must be positive");
    auto g = std::shared_ptr<GroupCtx>(new GroupCtx());
    g->kind_ = Kind::cyclic;
    g->order_ = v;
    return g;
}

std::shared_ptr<const GroupCtx>
GroupCtx::product(std::vector<std::shared_ptr<const GroupCtx>> factors) {
    if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
    if (factors.size() == 1) return factors[0];
    auto g = std::shared_ptr<GroupCtx>(new GroupCtx());
    g->kind_ = Kind::product;
    g->factors_ = std::move(factors);
    g->order_ = 1;
    for (const auto& f : g->factors_) g->order_ *= f->order();
    g->radix_.assign(g->factors_.size(), 1);
    for (std::size_t i = g->factors_.size(); i-- > 1;)
        g->radix_[i - 1] = g->radix_[i] * g->factors_[i]->order();
    return g;
}

std::shared_ptr<const GroupCtx>
GroupCtx::field_additive(std::shared_ptr<const FieldCtx> field) {
    auto g = std::shared_ptr<GroupCtx>(new GroupCtx());
    g->kind_ = Kind::field_additive;
    g->order_ = field->q();
    g->field_ = std::move(field);
    return g;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

// Split on a lone 'x' token or a UTF-8 multiplication sign.
std::vector<std::string> split_factors(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 0; i < spec.size();) {
        if (spec.compare(i, 2, "\xc3\x97") == 0) {  // U+00D7
            parts.push_back(cur); cur.clear(); i += 2;
        } else if (spec[i] == 'x' &&
                   (i == 0 || spec[i - 1] == ' ') &&
                   (i + 1 == spec.size() || spec[i + 1] == ' ')) {
            parts.push_back(cur); cur.clear(); ++i;
        } else {
            cur.push_back(spec[i]); ++i;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("expected a number, got empty string");
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk in number: " + s);
    return v;
}

}  // namespace

std::shared_ptr<const GroupCtx> GroupCtx::parse(const std::string& spec) {
    auto parts = split_factors(spec);
    std::vector<std::shared_ptr<const GroupCtx>> factors;
    for (auto& raw : parts) {
        std::string part = trim(raw);
        if (part.rfind("zv:", 0) == 0) {
            factors.push_back(cyclic(parse_u64(part.substr(3))));
        } else if (part.rfind("gf:", 0) == 0) {
            factors.push_back(field_additive(FieldCtx::make_q(parse_u64(part.substr(3)))));
        } else {
            throw std::invalid_argument("bad group descriptor token: '" + part + "'");
        }
    }
    return product(std::move(factors));
}

void GroupCtx::check_elem(Elem a) const {
    if (a >= order_) throw std::invalid_argument("element index out of range for this group");
}

Elem GroupCtx::add(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    switch (kind_) {
        case Kind::cyclic:
            return (a + b) % order_;
        case Kind::field_additive:
            return field_->add(a, b);
        case Kind::product: {
            Elem out = 0;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                Elem fa = (a / radix_[i]) % factors_[i]->order();
                Elem fb = (b / radix_[i]) % factors_[i]->order();
                out += factors_[i]->add(fa, fb) * radix_[i];
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

Elem GroupCtx::neg(Elem a) const {
    check_elem(a);
    switch (kind_) {
        case Kind::cyclic:
            return a == 0 ? 0 : order_ - a;
        case Kind::field_additive:
            return field_->neg(a);
        case Kind::product: {
            Elem out = 0;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                Elem fa = (a / radix_[i]) % factors_[i]->order();
                out += factors_[i]->neg(fa) * radix_[i];
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Elem> GroupCtx::enumerate() const {
    std::vector<Elem> out(order_);
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
}

std::vector<Elem> GroupCtx::split(Elem a) const {
    check_elem(a);
    if (kind_ != Kind::product) return {a};
    std::vector<Elem> parts(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        parts[i] = (a / radix_[i]) % factors_[i]->order();
    return parts;
}

Elem GroupCtx::join(const std::vector<Elem>& parts) const {
    if (kind_ != Kind::product) {
        if (parts.size() != 1) throw std::invalid_argument("join: not a product group");
        return parts[0];
    }
    if (parts.size() != factors_.size())
        throw std::invalid_argument("join: wrong tuple arity");
    Elem out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (parts[i] >= factors_[i]->order())
            throw std::invalid_argument("join: component out of range");
        out += parts[i] * radix_[i];
    }
    return out;
}

std::string GroupCtx::format(Elem a) const {
    check_elem(a);
    if (kind_ != Kind::product) return std::to_string(a);
    std::string out = "(";
    auto parts = split(a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->format(parts[i]);
    }
    out += ")";
    return out;
}

Elem GroupCtx::parse_elem(const std::string& text) const {
    std::string s = trim(text);
    if (kind_ != Kind::product) {
        Elem a = parse_u64(s);
        check_elem(a);
        return a;
    }
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("product element must be a tuple: " + s);
    std::string body = s.substr(1, s.size() - 2);
    std::vector<std::string> comps;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        if (c == '(') { ++depth; cur += c; }
        else if (c == ')') { --depth; cur += c; }
        else if (c == ',' && depth == 0) { comps.push_back(cur); cur.clear(); }
        else cur += c;
    }
    comps.push_back(cur);
    if (comps.size() != factors_.size())
        throw std::invalid_argument("tuple arity mismatch: " + s);
    std::vector<Elem> parts(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        parts[i] = factors_[i]->parse_elem(comps[i]);
    return join(parts);
}

std::string GroupCtx::descriptor() const {
    switch (kind_) {
        case Kind::cyclic:
            return "zv:" + std::to_string(order_);
        case Kind::field_additive:
            return "gf:" + std::to_string(order_);
        case Kind::product: {
            std::string out;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) out += " x ";
                out += factors_[i]->descriptor();
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

CrtMap::CrtMap(std::uint64_t l) : l_(l), lift_a_(0), lift_b_(0) {
    if (l % 2 == 0) throw std::invalid_argument("CrtMap needs odd l (gcd(4,l) = 1)");
    // lift_a = 1 mod 4, 0 mod l: a multiple of l that is 1 mod 4.
    for (std::uint64_t c = 0; c < 4; ++c)
        if (c * l % 4 == 1) lift_a_ = c * l;
    // lift_b = 0 mod 4, 1 mod l: a multiple of 4 that is 1 mod l.
    for (std::uint64_t c = 0; c < l; ++c)
        if (4 * c % l == 1) lift_b_ = 4 * c;
}

std::pair<std::uint64_t, std::uint64_t> CrtMap::forward(std::uint64_t x) const {
    x %= 4 * l_;
    return {x % 4, x % l_};
}

std::uint64_t CrtMap::inverse(std::uint64_t a, std::uint64_t b) const {
    return (a % 4 * lift_a_ + b % l_ * lift_b_) % (4 * l_);
}

std::vector<Elem> parse_elem_list(const GroupCtx& ctx, const std::string& line) {
    std::vector<Elem> out;
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(ctx.parse_elem(t));
        cur.clear();
    };
    for (char c : line) {
        if (c == '(') { ++depth; cur += c; }
        else if (c == ')') { --depth; cur += c; }
        else if (c == ',' && depth == 0) flush();
        else cur += c;
    }
    flush();
    return out;
}

std::string format_elem_list(const GroupCtx& ctx, const std::vector<Elem>& set) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += ctx.format(set[i]);
    }
    return out;
}

}  // namespace adskit

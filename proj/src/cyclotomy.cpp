#include "adskit/cyclotomy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adskit {

CycCtx CycCtx::make(std::shared_ptr<const FieldCtx> field, std::uint64_t e) {
    std::uint64_t q = field->q();
    if (e == 0 || (q - 1) % e != 0)
        throw std::invalid_argument("class order e must divide q-1");
    CycCtx c;
    c.field_ = std::move(field);
    c.e_ = e;
    c.f_ = (q - 1) / e;
    c.class_of_.assign(q, -1);
    c.classes_.assign(e, {});
    for (auto& cl : c.classes_) cl.reserve(c.f_);
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        std::uint64_t x = c.field_->exp(i);
        std::uint64_t cls = i % e;
        c.class_of_[x] = std::int32_t(cls);
        c.classes_[cls].push_back(x);
    }
    return c;
}

std::uint64_t CycCtx::class_of(std::uint64_t x) const {
    if (x == 0 || x >= class_of_.size())
        throw std::domain_error("class_of needs a nonzero field element");
    return std::uint64_t(class_of_[x]);
}

std::uint64_t CycCtx::cyc_number_direct(std::uint64_t i, std::uint64_t j) const {
    if (i >= e_ || j >= e_) throw std::invalid_argument("class index out of range");
    std::uint64_t count = 0;
    for (std::uint64_t x : classes_[i]) {
        std::uint64_t y = field_->add(x, 1);
        if (y != 0 && std::uint64_t(class_of_[y]) == j) ++count;
    }
    return count;
}

std::uint64_t CycCtx::class_negation(std::uint64_t i) const {
    if (i >= e_) throw std::invalid_argument("class index out of range");
    if (f_ % 2 == 0) return i;
    return (i + e_ / 2) % e_;  // ef is even, so e is even here
}

namespace {

bool perfect_square(std::int64_t n, std::int64_t* root = nullptr) {
    if (n < 0) return false;
    auto r = std::int64_t(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (root) *root = r;
    return r * r == n;
}

// All (a, b >= 0) with q = a^2 + scale*b^2 and a in the residue class
// `res` mod `mod` (sign of a chosen to satisfy the congruence).
std::vector<std::pair<std::int64_t, std::int64_t>>
representations(std::int64_t target, std::int64_t scale, std::int64_t res, std::int64_t mod) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t a = 0; a * a <= target; ++a) {
        std::int64_t rem = target - a * a;
        if (rem % scale != 0) continue;
        std::int64_t b;
        if (!perfect_square(rem / scale, &b)) continue;
        for (std::int64_t s : {a, -a}) {
            if (((s % mod) + mod) % mod == res) {
                out.emplace_back(s, b);
                break;  // at most one sign matches for odd s; a = 0 handled once
            }
        }
    }
    return out;
}

}  // namespace

std::optional<QuadPartition> quadratic_partition(std::uint64_t q, QuadPartition::Form form,
                                                 std::int64_t offset, std::int64_t scale) {
    using Form = QuadPartition::Form;
    if (form == Form::affine_rep) {
        if (scale <= 0) throw std::invalid_argument("affine_rep needs a positive scale");
        std::int64_t rem = std::int64_t(q) - offset;
        std::int64_t y;
        if (rem >= 0 && rem % scale == 0 && perfect_square(rem / scale, &y))
            return QuadPartition{form, y, 0};
        return std::nullopt;
    }

    std::int64_t target, sc, res, mod;
    switch (form) {
        case Form::s2_4t2:
        case Form::x2_4y2:
            target = std::int64_t(q); sc = 4; res = 1; mod = 4;
            break;
        case Form::c2_27d2_of_4q:
            target = 4 * std::int64_t(q); sc = 27; res = 1; mod = 3;
            break;
        default:
            throw std::logic_error("unreachable");
    }
    auto reps = representations(target, sc, res, mod);
    if (reps.empty()) return std::nullopt;
    // Prefer the proper representation (leading component coprime to q);
    // prime powers of the right residue have exactly one.
    for (const auto& [a, b] : reps)
        if (std::gcd(std::uint64_t(std::abs(a)), q) == 1)
            return QuadPartition{form, a, b};
    return QuadPartition{form, reps[0].first, reps[0].second};
}

std::int64_t cyc_number_closed(std::uint64_t q, std::uint64_t e, std::uint64_t i,
                               std::uint64_t j, const QuadPartition& part, int sign) {
    if ((q - 1) % e != 0) throw std::invalid_argument("e must divide q-1");
    std::uint64_t f = (q - 1) / e;
    std::int64_t num = 0, den = 1;
    const std::int64_t Q = std::int64_t(q);
    if (e == 2) {
        i %= 2; j %= 2;
        if (f % 2 == 0) {
            num = (i == 0 && j == 0) ? std::int64_t(f) - 2 : std::int64_t(f);
            den = 2;
        } else {
            num = (i == 0 && j == 1) ? std::int64_t(f) + 1 : std::int64_t(f) - 1;
            den = 2;
        }
    } else if (e == 3) {
        if (part.form != QuadPartition::Form::c2_27d2_of_4q)
            throw std::invalid_argument("order 3 needs the 4q = c^2 + 27d^2 partition");
        std::int64_t c = part.first, d = sign * part.second;
        // value letters by (row, col):
        //   A B C
        //   B C D
        //   C D B
        static const char tab[3][3] = {{'A','B','C'},{'B','C','D'},{'C','D','B'}};
        switch (tab[i % 3][j % 3]) {
            case 'A': num = Q - 8 + c; den = 9; break;
            case 'B': num = 2 * Q - 4 - c - 9 * d; den = 18; break;
            case 'C': num = 2 * Q - 4 - c + 9 * d; den = 18; break;
            case 'D': num = Q + 1 + c; den = 9; break;
        }
    } else if (e == 4) {
        if (part.form != QuadPartition::Form::s2_4t2)
            throw std::invalid_argument("order 4 needs the q = s^2 + 4t^2 partition");
        std::int64_t s = part.first, t = sign * part.second;
        char letter;
        if (f % 2 == 1) {
            static const char tab[4][4] = {{'A','B','C','D'},
                                           {'E','E','D','B'},
                                           {'A','E','A','E'},
                                           {'E','D','B','E'}};
            letter = tab[i % 4][j % 4];
            switch (letter) {
                case 'A': num = Q - 7 + 2 * s; break;
                case 'B': num = Q + 1 + 2 * s - 8 * t; break;
                case 'C': num = Q + 1 - 6 * s; break;
                case 'D': num = Q + 1 + 2 * s + 8 * t; break;
                case 'E': num = Q - 3 - 2 * s; break;
            }
        } else {
            static const char tab[4][4] = {{'A','B','C','D'},
                                           {'B','D','E','E'},
                                           {'C','E','C','E'},
                                           {'D','E','E','B'}};
            letter = tab[i % 4][j % 4];
            switch (letter) {
                case 'A': num = Q - 11 - 6 * s; break;
                case 'B': num = Q - 3 + 2 * s + 8 * t; break;
                case 'C': num = Q - 3 + 2 * s; break;
                case 'D': num = Q - 3 + 2 * s - 8 * t; break;
                case 'E': num = Q + 1 - 2 * s; break;
            }
        }
        den = 16;
    } else {
        throw std::invalid_argument("closed forms cover only e in {2,3,4}");
    }
    if (num % den != 0 || num < 0)
        throw std::domain_error("closed form gave a non-integral or negative value; "
                                "wrong partition or sign for q=" + std::to_string(q));
    return num / den;
}

int resolve_sign(const CycCtx& cctx, const QuadPartition& part) {
    std::uint64_t q = cctx.field().q();
    std::uint64_t pilot = cctx.cyc_number_direct(0, 1);
    for (int sign : {+1, -1}) {
        try {
            if (cyc_number_closed(q, cctx.e(), 0, 1, part, sign) == std::int64_t(pilot))
                return sign;
        } catch (const std::domain_error&) {
        }
    }
    throw std::domain_error("no sign choice matches the pilot count for q=" +
                            std::to_string(q));
}

std::pair<QuadPartition, int> resolved_partition(const CycCtx& cctx) {
    std::uint64_t q = cctx.field().q();
    std::optional<QuadPartition> part;
    switch (cctx.e()) {
        case 2:
            part = QuadPartition{QuadPartition::Form::s2_4t2, 0, 0};  // unused by e=2
            return {*part, +1};
        case 3:
            part = quadratic_partition(q, QuadPartition::Form::c2_27d2_of_4q);
            break;
        case 4:
            part = quadratic_partition(q, QuadPartition::Form::s2_4t2);
            break;
        default:
            throw std::invalid_argument("closed forms cover only e in {2,3,4}");
    }
    if (!part) throw std::domain_error("no quadratic partition exists for q=" +
                                       std::to_string(q));
    return {*part, resolve_sign(cctx, *part)};
}

UnionDiffCoeffs union_diff_coeffs(const CycCtx& cctx, const std::vector<std::uint64_t>& I,
                                  bool with_zero) {
    if (I.empty()) throw std::invalid_argument("union_diff_coeffs needs a nonempty index set");
    std::uint64_t e = cctx.e(), f = cctx.f();
    UnionDiffCoeffs out;
    out.per_class.assign(e, 0);
    out.identity = std::int64_t(f) * std::int64_t(I.size());
    const bool f_even = (f % 2 == 0);
    for (std::uint64_t i : I) {
        for (std::uint64_t j : I) {
            for (std::uint64_t k = 0; k < e; ++k) {
                std::uint64_t row = f_even ? (j + e - i) % e : (j + e / 2 + e - i) % e;
                std::uint64_t col = (k + e - i) % e;
                out.per_class[k] += std::int64_t(cctx.cyc_number_direct(row, col));
            }
        }
    }
    if (with_zero) {
        // (D + 1)(D^-1 + 1) adds D(X) + D(X^-1) + 1.
        out.identity += 1;
        for (std::uint64_t i : I) {
            out.per_class[i] += 1;
            out.per_class[cctx.class_negation(i)] += 1;
        }
    }
    return out;
}

}  // namespace adskit

#include "adskit/filters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace adskit {

namespace {

std::string tuple_str(const ParamSet& p) {
    return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
           std::to_string(p.lambda) + "," + std::to_string(p.t) + ")";
}

std::string vec_str(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

TestResult pass(std::string d = "") { return {Verdict::pass, std::move(d)}; }
TestResult ruled(std::string d) { return {Verdict::ruled_out, std::move(d)}; }
TestResult na(std::string d) { return {Verdict::not_applicable, std::move(d)}; }

}  // namespace

bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    auto r = std::int64_t(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

bool is_sum_of_two_squares(std::int64_t n) {
    if (n < 0) return false;
    for (std::int64_t a = 0; a * a <= n; ++a)
        if (is_perfect_square(n - a * a)) return true;
    return false;
}

bool is_x2_y2_xy(std::int64_t n) {
    if (n < 0) return false;
    // x^2 + xy + y^2 = n forces 3 y^2 <= 4 n.
    std::int64_t bound = std::int64_t(std::sqrt(4.0 * double(n) / 3.0)) + 2;
    for (std::int64_t x = 0; x <= bound; ++x)
        for (std::int64_t y = -bound; y <= bound; ++y)
            if (x * x + y * y + x * y == n) return true;
    return false;
}

const TestResult* FeasibilityReport::find(const std::string& id) const {
    for (const auto& [name, res] : tests)
        if (name == id) return &res;
    return nullptr;
}

TestResult counting_test(const ParamSet& p) {
    std::int64_t lhs = p.k * (p.k - 1);
    std::int64_t rhs = p.lambda * p.t + (p.lambda + 1) * (p.v - 1 - p.t);
    if (lhs == rhs) return pass(std::to_string(lhs) + " = " + std::to_string(rhs));
    return ruled("k(k-1) = " + std::to_string(lhs) + " but lambda t + (lambda+1)(v-1-t) = " +
                 std::to_string(rhs));
}

TestResult parity_t1_test(const ParamSet& p) {
    if (p.t != 1) return na("t != 1");
    if (p.k % 2 == 0) return na("k even");
    if (p.v % 8 == 4) return ruled("v = 4 (mod 8) with k odd, t = 1");
    if (p.v % 8 == 2 && ((p.lambda % 4) + 4) % 4 == 2)
        return ruled("v = 2 (mod 8) and lambda = 2 (mod 4)");
    if (p.v % 8 == 6 && ((p.lambda % 4) + 4) % 4 == 0)
        return ruled("v = 6 (mod 8) and lambda = 0 (mod 4)");
    return pass();
}

TestResult parity_tv2_test(const ParamSet& p) {
    if (p.t != p.v - 2) return na("t != v-2");
    if (p.k % 2 == 0) return na("k even");
    if (p.v % 8 == 4) return ruled("v = 4 (mod 8) with k odd, t = v-2");
    if (p.v % 8 == 2 && ((p.lambda % 4) + 4) % 4 == 1)
        return ruled("v = 2 (mod 8) and lambda = 1 (mod 4)");
    if (p.v % 8 == 6 && ((p.lambda % 4) + 4) % 4 == 3)
        return ruled("v = 6 (mod 8) and lambda = 3 (mod 4)");
    return pass();
}

namespace {

// Lexicographically greatest representative of b under rotation/reflection;
// the defining equations are invariant under both.
std::vector<std::int64_t> canonical_b(std::vector<std::int64_t> b) {
    std::vector<std::int64_t> best = b;
    std::size_t w = b.size();
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t r = 0; r < w; ++r) {
            std::rotate(b.begin(), b.begin() + 1, b.end());
            if (b > best) best = b;
        }
        std::reverse(b.begin(), b.end());
    }
    return best;
}

}  // namespace

TestResult hall_mod_w_test(const ParamSet& p, std::int64_t w, bool symmetric_s) {
    if (w < 2) return na("w < 2");
    if (p.v % w != 0) throw std::invalid_argument("w must divide v");
    if (w > 12) return na("w above cap 12");
    const std::int64_t k = p.k, t = p.t, vw = p.v / w, L1 = p.lambda + 1;
    const std::int64_t sq_full = k - L1 + L1 * vw;  // sum b_i^2 + c_0

    // c is fully determined by b:
    //   c_0 = sq_full - sum b_i^2,  c_j = L1*vw - sum_i b_i b_{i-j}.
    std::vector<std::int64_t> b(w, 0);
    std::vector<std::int64_t> wit_b, wit_c;
    std::function<bool(std::int64_t, std::int64_t, std::int64_t)> dfs =
        [&](std::int64_t pos, std::int64_t left, std::int64_t sqsum) -> bool {
        if (sqsum > sq_full) return false;
        if (pos == w) {
            if (left != 0) return false;
            std::int64_t c0 = sq_full - sqsum;
            if (c0 < 0 || c0 > t) return false;
            std::vector<std::int64_t> c(w);
            c[0] = c0;
            std::int64_t csum = c0;
            for (std::int64_t j = 1; j < w; ++j) {
                std::int64_t conv = 0;
                for (std::int64_t i = 0; i < w; ++i) conv += b[i] * b[(i - j + w) % w];
                c[j] = L1 * vw - conv;
                if (c[j] < 0 || c[j] > t) return false;
                csum += c[j];
            }
            if (csum != t) return false;
            if (symmetric_s)
                for (std::int64_t j = 1; j < w; ++j)
                    if (c[j] != c[(w - j) % w]) return false;
            wit_b = canonical_b(b);
            wit_c = c;
            return true;
        }
        for (std::int64_t val = left; val >= 0; --val) {
            b[pos] = val;
            if (dfs(pos + 1, left - val, sqsum + val * val)) return true;
        }
        return false;
    };
    if (dfs(0, k, 0))
        return pass("c=" + vec_str(wit_c) + ", b=" + vec_str(wit_b));
    return ruled("no nonnegative integer solution for w=" + std::to_string(w));
}

TestResult binary_char_test(const ParamSet& p) {
    if (p.v % 2 != 0) return na("v odd");
    const std::int64_t k = p.k, lam = p.lambda, t = p.t, v = p.v;
    if (t == 1) {
        if (v % 4 != 0) {
            if (!is_perfect_square(k - lam))
                return ruled("k-lambda = " + std::to_string(k - lam) + " is not a square");
        } else {
            if (!is_perfect_square(k - lam - 2))
                return ruled("k-lambda-2 = " + std::to_string(k - lam - 2) +
                             " is not a square");
        }
        if (v % 8 == 4 && !is_sum_of_two_squares(k - lam))
            return ruled("k-lambda = " + std::to_string(k - lam) +
                         " is not a sum of two squares (v = 4 mod 8)");
        return pass();
    }
    std::vector<std::int64_t> cand;
    if (t % 2 == 0) {
        for (std::int64_t l = 0; l <= t / 2; ++l) cand.push_back(k - lam - (t + 1 - 4 * l));
    } else if (v % 4 == 0) {
        for (std::int64_t l = 0; l <= (t - 1) / 2; ++l) cand.push_back(k - lam - (t + 1 - 4 * l));
    } else {
        for (std::int64_t l = 0; l <= (t - 1) / 2; ++l) cand.push_back(k - lam - (t - 1 - 4 * l));
    }
    for (std::int64_t c : cand)
        if (is_perfect_square(c)) return pass(std::to_string(c) + " is a square");
    return ruled("candidate set " + vec_str(cand) + " is square free");
}

TestResult ternary_char_tests(const ParamSet& p) {
    if (p.v % 3 != 0) return na("3 does not divide v");
    const std::int64_t k = p.k, lam = p.lambda, t = p.t, r = p.v - 1 - p.t;
    std::vector<std::int64_t> side1, side2;
    {
        std::int64_t lmax = (t % 2 == 1) ? (t - 1) / 2 : t / 2;
        for (std::int64_t l = 0; l <= lmax; ++l) side1.push_back(k - (lam + 1) - (t - 3 * l));
    }
    {
        std::int64_t lmax = (r % 2 == 1) ? (r - 1) / 2 : r / 2;
        for (std::int64_t l = 0; l <= lmax; ++l) side2.push_back(k - lam + (r - 3 * l));
    }
    bool ok1 = std::any_of(side1.begin(), side1.end(), is_x2_y2_xy);
    bool ok2 = std::any_of(side2.begin(), side2.end(), is_x2_y2_xy);
    if (ok1 && ok2) return pass();
    std::string why;
    if (!ok1) why = "t-side set " + vec_str(side1) + " avoids x^2+y^2+xy";
    if (!ok2) {
        if (!why.empty()) why += "; ";
        why += "(v-1-t)-side set " + vec_str(side2) + " avoids x^2+y^2+xy";
    }
    return ruled(why);
}

FeasibilityReport run_all(const ParamSet& p_in, const std::vector<std::int64_t>& w_list,
                          bool symmetric_s) {
    FeasibilityReport rep;
    ParamSet p = p_in;
    if (p.t <= 0 || p.t >= p.v - 1)
        throw std::invalid_argument("ADS feasibility needs 0 < t < v-1");
    if (p.k > p.v / 2) {
        // complement law
        p = ParamSet{p.v, p.v - p.k, p.v - 2 * p.k + p.lambda, p.t};
        rep.tests.emplace_back("normalize",
                               pass("complemented to " + tuple_str(p)));
    }
    rep.params = p;
    if (p.lambda < 0) {
        rep.tests.emplace_back("counting",
                               ruled("complement lambda " + std::to_string(p.lambda) +
                                     " is negative"));
        rep.ruled_out = true;
        return rep;
    }
    rep.tests.emplace_back("counting", counting_test(p));
    rep.tests.emplace_back("parity_t1", parity_t1_test(p));
    rep.tests.emplace_back("parity_tv2", parity_tv2_test(p));
    for (std::int64_t w : w_list) {
        if (w < 2 || p.v % w != 0) {
            rep.tests.emplace_back("hall_w" + std::to_string(w), na("w does not divide v"));
            continue;
        }
        rep.tests.emplace_back("hall_w" + std::to_string(w),
                               hall_mod_w_test(p, w, symmetric_s));
    }
    rep.tests.emplace_back("binary_char",
                           p.v % 2 == 0 ? binary_char_test(p) : na("v odd"));
    rep.tests.emplace_back("ternary_char", ternary_char_tests(p));
    for (const auto& [_, res] : rep.tests)
        if (res.verdict == Verdict::ruled_out) rep.ruled_out = true;
    return rep;
}

TestResult paley_pds_param_check(std::int64_t v, std::int64_t k, std::int64_t lambda,
                                 std::int64_t mu) {
    if (mu != lambda + 1) throw std::invalid_argument("check applies only to mu = lambda+1");
    auto paley = [&](std::int64_t kk, std::int64_t ll, std::int64_t mm) {
        return v % 4 == 1 && 2 * kk == v - 1 && 4 * ll == v - 5 && 4 * mm == v - 1;
    };
    if (paley(k, lambda, mu)) return pass("Paley parameters");
    if (v == 243 && k == 22 && lambda == 1 && mu == 2) return pass("sporadic (243,22,1,2)");
    // complemented reading: (v, v-1-k, v-2k-2+mu, v-2k+lambda) has mu' = lambda' + 1
    std::int64_t ck = v - 1 - k, cl = v - 2 * k - 2 + mu, cm = v - 2 * k + lambda;
    if (paley(ck, cl, cm)) return pass("complement has Paley parameters");
    if (v == 243 && ck == 22 && cl == 1 && cm == 2)
        return pass("complement is the sporadic (243,22,1,2)");
    return ruled("not Paley-type and not the sporadic (243,22,1,2), up to complementation");
}

std::vector<ParamSet> t1_candidates(std::int64_t vmax) {
    std::vector<ParamSet> out;
    for (std::int64_t v = 2; v <= vmax; ++v)
        for (std::int64_t k = 1; k <= v / 2; k += 2) {
            std::int64_t num = k * k - k - v + 2;
            if (num >= 0 && num % (v - 1) == 0) out.push_back({v, k, num / (v - 1), 1});
        }
    return out;
}

std::vector<ParamSet> tv2_candidates(std::int64_t vmax) {
    std::vector<ParamSet> out;
    for (std::int64_t v = 4; v <= vmax; ++v)
        for (std::int64_t k = 1; k <= v / 2; k += 2) {
            std::int64_t num = k * k - k - 1;
            if (num >= 0 && num % (v - 1) == 0) out.push_back({v, k, num / (v - 1), v - 2});
        }
    return out;
}

}  // namespace adskit

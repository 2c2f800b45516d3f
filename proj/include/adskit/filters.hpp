#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace adskit {

struct ParamSet {
    std::int64_t v = 0, k = 0, lambda = 0, t = 0;
};

enum class Verdict { pass, ruled_out, not_applicable };

struct TestResult {
    Verdict verdict = Verdict::not_applicable;
    std::string detail;  // instantiated witness or reason
};

// Per-test verdicts; overall ruled out as soon as any test rules out.
struct FeasibilityReport {
    ParamSet params;
    std::vector<std::pair<std::string, TestResult>> tests;
    bool ruled_out = false;
    const TestResult* find(const std::string& id) const;
};

// k(k-1) = lambda t + (lambda+1)(v-1-t).
TestResult counting_test(const ParamSet& p);

// Mod-8 residue rule-outs for t = 1 (k odd):
//   v = 4 (mod 8); v = 2 (mod 8) with lambda = 2 (mod 4);
//   v = 6 (mod 8) with lambda = 0 (mod 4).
TestResult parity_t1_test(const ParamSet& p);
// Dual rule for t = v-2 (k odd): lambda = 1 resp. 3 (mod 4).
TestResult parity_tv2_test(const ParamSet& p);

// Hall-polynomial feasibility mod X^w - 1: existence of nonnegative integers
// (b_i) with sum b_i = k whose autocorrelations force a residue profile
// (c_j) of S with sum c_j = t, c_j >= 0.  `symmetric_s` additionally imposes
// c_j = c_{w-j} (from S = -S); off by default since the underlying statement
// does not require it.
TestResult hall_mod_w_test(const ParamSet& p, std::int64_t w, bool symmetric_s = false);

// Quadratic-character square condition for even v (t = 1 uses the stronger
// special case: k-lambda square when 4 does not divide v; k-lambda-2 square
// when it does; k-lambda a sum of two squares when v = 4 (mod 8)).
TestResult binary_char_test(const ParamSet& p);

// Cubic-character condition for 3 | v: candidate sets on both the t side and
// the (v-1-t) side must each contain a value of the form x^2 + y^2 + xy.
TestResult ternary_char_tests(const ParamSet& p);

// Runs the whole battery; parameter sets with k > v/2 are first normalized
// through the complement law (v, v-k, v-2k+lambda, t).
FeasibilityReport run_all(const ParamSet& p, const std::vector<std::int64_t>& w_list,
                          bool symmetric_s = false);

// Regular PDS with mu = lambda+1 must be Paley-type
// (v,(v-1)/2,(v-5)/4,(v-1)/4), v = 1 (mod 4), or the sporadic (243,22,1,2),
// up to complementation.
TestResult paley_pds_param_check(std::int64_t v, std::int64_t k, std::int64_t lambda,
                                 std::int64_t mu);

// Candidate parameter tables: k odd, counting-feasible, up to complementation.
std::vector<ParamSet> t1_candidates(std::int64_t vmax);
std::vector<ParamSet> tv2_candidates(std::int64_t vmax);

bool is_perfect_square(std::int64_t n);
bool is_sum_of_two_squares(std::int64_t n);
bool is_x2_y2_xy(std::int64_t n);

}  // namespace adskit

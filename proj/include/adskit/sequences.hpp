#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adskit/constructed.hpp"
#include "adskit/diffcore.hpp"

namespace adskit {

// Periodic binary sequence; indexing is mod n.
struct SeqBits {
    std::uint64_t n = 0;
    std::vector<std::uint8_t> bits;
};

struct CorrSpectrum {
    std::uint64_t n = 0;
    std::vector<std::int64_t> values;  // C_s(w), w = 0..n-1
    std::uint64_t levels = 0;          // distinct values including the peak
    bool optimal = false;
    bool ideal = false;
};

SeqBits char_seq(const std::vector<Elem>& D, std::uint64_t n);
std::vector<Elem> support(const SeqBits& s);

std::int64_t crosscorr(const SeqBits& s, const SeqBits& u, std::uint64_t w);
std::int64_t autocorr(const SeqBits& s, std::uint64_t w);

// Full spectrum with the optimal/ideal grading: ideal means n = 3 (mod 4)
// and every off-peak value is -1; optimal means the off-peak values sit in
// the minimal set for n mod 4 ({-1}; {1,-3}; {-2,2}; {0,4} or {0,-4}).
CorrSpectrum autocorr_spectrum(const SeqBits& s);

// Bridge from a three-level spectrum back to an ADS verdict for the support;
// nullopt when the sequence does not qualify.  Cross-checked against the
// difference spectrum of the support.
std::optional<AdsVerdict> ads_from_sequence(const SeqBits& s);

// Four-row interleaving of an ideal-autocorrelation seed of period l
// (l = 3 mod 4): rows (s, s(.+delta), complement(s), s(.+delta)) read along
// t -> (t mod 4, t mod l).  The period-4l output has off-peak values -4
// (l-1 times) and 0 (3l times); asserted.
SeqBits interleave(const SeqBits& seed, std::uint64_t delta);

struct InterleaveSupport {
    ConstructedSet cs;          // the support in Z_{4l}, verified ADS
    std::vector<Elem> row0, row1, row2, row3;  // images under x -> (x mod 4, x mod l)
};

// Support of the interleaved sequence for a Paley-Hadamard seed set C in Z_l.
// The support decomposes as {0}xC u {1}x(C-delta) u {2}xC* u {3}x(C-delta),
// i.e. in Z_{4l}: (l+1)C u ((l+1)(C-delta)+3l) u ((l+1)C*+2l) u
// ((l+1)(C-delta)+l); both forms are asserted against the computed support.
InterleaveSupport interleave_support(const std::vector<Elem>& seed_set, std::uint64_t l,
                                     std::uint64_t delta);

// Maximal-length shift-register sequence of period 2^t - 1 (complemented so
// the support is the (2^t-1, 2^{t-1}-1, 2^{t-2}-1) difference set), from the
// least primitive polynomial of degree t over GF(2) with all-ones seed.
SeqBits mseq(std::uint64_t t);

// Sequence files: a single line of '0'/'1'.
SeqBits parse_seq(const std::string& line);
std::string format_seq(const SeqBits& s);

}  // namespace adskit

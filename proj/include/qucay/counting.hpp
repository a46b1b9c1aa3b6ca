// Counting functions for paths of length two: the pair counts S_n(r), D_n(r)
// over Q_n x Q_n, consecutive-residue tables for odd prime powers, and the
// zero characterization predicates for odd n.

#ifndef QUCAY_COUNTING_HPP
#define QUCAY_COUNTING_HPP

#include "qucay/modring.hpp"

namespace qucay {

// Ordered-pair counts: s = #{(x,y) in Q_n^2 : x+y=r}, d = #{(x,y) : x-y=r}.
struct PairCounts {
    int64_t s = 0;
    int64_t d = 0;

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

// Counts of consecutive unit pairs (x, x+1) mod p^m by residuacity class:
// cpp both quadratic, cpm quadratic then non-quadratic, cmp the reverse,
// cmm both non-quadratic.
struct AladovTable {
    int64_t cpp = 0;
    int64_t cpm = 0;
    int64_t cmp = 0;
    int64_t cmm = 0;

    friend bool operator==(const AladovTable&, const AladovTable&) = default;
};

// Closed forms for odd p:
//   p = 1 mod 4: cpp = (p-5)p^(m-1)/4, cpm = cmp = cmm = (p-1)p^(m-1)/4
//   p = 3 mod 4: cpm = (p+1)p^(m-1)/4, cpp = cmp = cmm = (p-3)p^(m-1)/4
// Rejects p = 2.
AladovTable aladov_counts(int64_t p, int m);

// Same table by direct enumeration mod p^m (test oracle).
AladovTable aladov_oracle(int64_t p, int m);

// Closed-form S and D for an odd prime power, classifying r as quadratic
// unit / non-quadratic unit / zero divisor (multiples of p, including 0).
PairCounts sd_prime_power(int64_t p, int m, Residue r);

// S_n(r), D_n(r) for odd n as the product of per-factor counts through the
// CRT split. Rejects even n; those are served by the oracle only.
PairCounts sd_counts(const Modulus& mod, Residue r);

// Exhaustive ordered-pair count over Q_n x Q_n; valid for every n.
PairCounts sd_oracle(const Modulus& mod, Residue r);

// All residues at once, one pass over Q_n x Q_n.
std::vector<PairCounts> sd_oracle_all(const Modulus& mod);

// Zero characterization for odd n.
//   S_n(r) = 0  iff  (3|n and r != 2 mod 3) or (5|n and r = +-1 mod 5)
//                 or (some p_j = 3 mod 4 divides both n and r)
//   D_n(r) = 0  iff  (3|n and r != 0 mod 3) or (5|n and r = +-1 mod 5)
struct ZeroPredicate {
    bool s_is_zero = false;
    bool d_is_zero = false;
};
ZeroPredicate sd_zero_predicate(const Modulus& mod, Residue r);

} // namespace qucay

#endif

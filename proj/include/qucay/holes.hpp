// Perfectness classification of G_n and construction of odd-hole
// certificates: Paley-factor holes found by bounded search, the three
// explicit two-prime five-vertex constructions, lifting to prime powers and
// extension to composite n by sign-matched closed walks.

#ifndef QUCAY_HOLES_HPP
#define QUCAY_HOLES_HPP

#include "qucay/modring.hpp"

#include <optional>
#include <string>

namespace qucay {

enum class HoleCase { PaleyFactor, TwoPrimesA, TwoPrimesB, TwoPrimesC, BruteForce };

std::string hole_case_name(HoleCase c);

struct OddHoleCertificate {
    int64_t n = 1;
    std::vector<Residue> vertices; // odd count >= 5, cyclically adjacent, chordless
    HoleCase provenance = HoleCase::BruteForce;
    // Lift data: hole born in G_nu, lifted to G_mu, extended over the
    // coprime cofactor big_n (n = mu * big_n).
    int64_t nu = 1;
    int64_t mu = 1;
    int64_t big_n = 1;
    // Arc orientation of each cycle edge in Gamma_n: +1 when the forward
    // difference is a quadratic unit. Recorded, not asserted.
    std::vector<int> orientations;
};

enum class PerfectnessReason { Even, PrimePower3Mod4, HoleExists };

struct PerfectnessVerdict {
    bool perfect = false;
    PerfectnessReason reason = PerfectnessReason::HoleExists;
    std::optional<OddHoleCertificate> certificate; // attached when imperfect
};

// Theorem verdict: perfect iff n even or n = p^m with p = 3 mod 4.
// When imperfect and with_certificate is set, construct_odd_hole runs and
// the result is validated with is_induced_odd_cycle before it is attached.
// Requires n >= 2.
PerfectnessVerdict perfectness(const Modulus& mod, bool with_certificate = true);

// The constructive side of the perfectness characterization. Requires n odd
// and not a power of a prime = 3 mod 4; such G_n always contain an odd hole,
// so any internal failure is a logic error.
OddHoleCertificate construct_odd_hole(const Modulus& mod);

// Certificate checker: vertices distinct, cyclically adjacent in G_n,
// chordless, odd length >= 5. Uses connection-set membership only.
bool is_induced_odd_cycle(const Modulus& mod, const std::vector<Residue>& vertices);

// Exhaustive DFS over induced paths rooted at 0 in any circulant graph given
// by its difference mask; tries lengths 5 then 7 up to max_len. Deterministic
// (vertices scanned in increasing order).
std::optional<std::vector<int64_t>> find_odd_hole_circulant(
    int64_t n, const std::vector<uint8_t>& diff_mask, int max_len,
    bool root_at_edge01 = false);

inline constexpr int64_t kHoleSearchCap = 120;

// Independent oracle for the negative direction; n beyond the cap or
// max_len > 7 is rejected.
std::optional<OddHoleCertificate> brute_force_hole_search(const Modulus& mod, int max_len);

} // namespace qucay

#endif

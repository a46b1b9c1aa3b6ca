// Signed-walk engine: decompose a residue as a +-1-signed sum of steps drawn
// from Q_n or from the full unit group, optionally with a prescribed sign
// pattern. Minimal lengths coincide with Cayley-graph distances; engines are
// layered dynamic programs with predecessor reconstruction.

#ifndef QUCAY_WALKS_HPP
#define QUCAY_WALKS_HPP

#include "qucay/modring.hpp"

#include <optional>
#include <string>

namespace qucay {

enum class StepSetKind { QuadraticUnits, AllUnits };

std::vector<Residue> step_set(const Modulus& mod, StepSetKind kind);

struct SignedWalk {
    int64_t n = 1;
    Residue target = 0;
    std::vector<int> signs;      // entries +1 / -1
    std::vector<Residue> steps;  // same length, each from the declared set
    StepSetKind kind = StepSetKind::QuadraticUnits;

    std::size_t length() const { return steps.size(); }
    Residue evaluate() const; // sum of sign*step mod n
    std::string render() const; // "r = +u1 -u2 ... (mod n)"
};

// Exact-length reachable sets: layer k holds the residues expressible as
// s_1 u_1 + ... + s_k u_k with the prescribed signs. layers[0] = {0}.
std::vector<std::vector<uint8_t>> signed_reach_layers(const Modulus& mod,
                                                      const std::vector<int>& signs,
                                                      StepSetKind kind);

// A shortest signed walk reaching r; its length equals the BFS distance from
// 0 to r in Cay(Z_n, +-StepSet). r = 0 gives the empty walk. nullopt when r
// is unreachable (degenerate moduli only). Deterministic: at each position
// the numerically smallest usable step is taken, sign + preferred over -.
std::optional<SignedWalk> min_signed_walk(const Modulus& mod, Residue r, StepSetKind kind);

// A walk matching the prescribed sign pattern exactly, or nullopt when no
// such walk exists. Feasibility and reconstruction run on the same layered
// sets. Guaranteed feasible for n coprime to 6, quadratic steps, and
// pattern length >= udiam(Gamma_n).
std::optional<SignedWalk> walk_with_signs(const Modulus& mod, Residue r,
                                          const std::vector<int>& signs, StepSetKind kind);

// Appends extra/2 cancelling (+u, -u) pairs, u the smallest step; the target
// is unchanged. Rejects odd extra.
SignedWalk pad_closed_walk(const SignedWalk& w, int extra);

} // namespace qucay

#endif

// Circulant Cayley graphs on Z_n built from the quadratic units: the
// undirected graph G_n (steps T_n) and the digraph Gamma_n (steps Q_n),
// BFS diameter, uniform diameter, the closed-form diameter theorems and
// tensor-product factorization tests.

#ifndef QUCAY_CAYLEY_HPP
#define QUCAY_CAYLEY_HPP

#include "qucay/modring.hpp"

#include <optional>
#include <string>

namespace qucay {

// A circulant graph stored implicitly by its step set; vertices are Z_n and
// a -> b is an arc iff b - a is a step. Loopless: 0 is never a step.
struct CirculantGraph {
    Modulus modulus;
    std::vector<Residue> steps;     // sorted, nonzero
    std::vector<uint8_t> step_mask; // size n
    bool directed = false;

    bool adjacent(Residue a, Residue b) const {
        return step_mask[static_cast<std::size_t>(modulus.reduce(b - a))] != 0;
    }
};

CirculantGraph quadratic_graph(const Modulus& mod);         // G_n  = Cay(Z_n, T_n)
CirculantGraph quadratic_digraph(const Modulus& mod);       // Gamma_n = Cay(Z_n, Q_n)
CirculantGraph circulant_from_steps(const Modulus& mod, std::vector<Residue> steps,
                                    bool directed);

// Max distance from vertex 0 (equals the diameter by vertex-transitivity);
// nullopt when some vertex is unreachable from 0.
std::optional<int> bfs_eccentricity_zero(const CirculantGraph& g);

struct DiameterReport {
    int formula_value = 0;
    std::string case_label;        // which theorem clause fired
    std::optional<int> bfs_value;  // filled in verification mode
};

// Closed-form diameter of G_n per the odd and even case lists. The even
// clauses are tested in their stated precedence order (24 | n first, then
// odd multiples of 12, multiples of 10 not 12, 8K, 6K, 4K, 2K, 4, 2).
// n = 1 reports diameter 0 with label "trivial-1".
DiameterReport diameter_formula(const Modulus& mod);

// Formula plus BFS cross-check; throws std::logic_error on any mismatch.
DiameterReport diameter_report(const Modulus& mod);

// Least d such that every vertex is reachable from every vertex by a walk of
// length exactly d, computed by iterating exact-length reachable sets from
// {0}. Returns nullopt when the set sequence cycles without covering Z_n
// (always the case for n divisible by 2 or 3). Iteration is capped at 2n
// with seen-state memoization.
std::optional<int> uniform_diameter(const CirculantGraph& gamma);

// Theorem criterion: G_M (x) G_N = G_MN iff -1 in Q_M or -1 in Q_N.
// Throws unless gcd(M, N) = 1.
bool tensor_factorizes(const Modulus& m_mod, const Modulus& n_mod);

// Small dense (di-)graph used to verify decompositions by explicit edge-set
// comparison; loops are allowed (the complete pseudograph has them).
struct DenseGraph {
    int64_t n = 0;
    std::vector<uint8_t> adj; // row-major n x n

    bool at(int64_t a, int64_t b) const {
        return adj[static_cast<std::size_t>(a * n + b)] != 0;
    }
    void set(int64_t a, int64_t b, bool v) {
        adj[static_cast<std::size_t>(a * n + b)] = v ? 1 : 0;
    }

    friend bool operator==(const DenseGraph&, const DenseGraph&) = default;
};

DenseGraph adjacency_graph(const CirculantGraph& g);
DenseGraph pseudo_clique(int64_t m); // complete graph with loops
// Edge iff both projections are edges; vertex (a, b) is numbered a*B.n + b.
DenseGraph tensor_product(const DenseGraph& a, const DenseGraph& b);

struct CliqueRefinement {
    int64_t base;   // G_base
    int64_t clique; // (x) K-with-loops on this many vertices
};

struct TensorDecomposition {
    std::vector<int64_t> split_factors;    // prime powers p^m with p = 1 mod 4
    int64_t residual = 1;                  // product of the remaining factors
    bool residual_splits = false;          // residual factors over prime powers
    std::vector<int64_t> residual_factors; // prime powers of the residual
    std::vector<CliqueRefinement> refinements;
};

// Splits off every p = 1 mod 4 prime power as a tensor factor, reports
// whether the residual splits further (at most one factor not 1 mod 4, or
// two of them with n = 2 mod 4), and lists the pseudo-clique refinements
// G_{p^m} = G_p (x) K_{p^(m-1)} and G_{2^m} = G_8 (x) K_{2^(m-3)}.
TensorDecomposition full_tensor_decomposition(const Modulus& mod);

std::string decomposition_summary(const TensorDecomposition& d);

} // namespace qucay

#endif

// The symplectic group Sp_2m(Z_n): elementary symplectic row operations,
// derived row-addition powers expanded through signed walks, unit Bezout
// coefficients, and the full reduction of a symplectic matrix to the
// identity in O(m^2) elementary operations independent of n.
//
// Rows and columns are 0-based in memory; the text format is 1-based. The
// paired index of row j is j+m mod 2m.

#ifndef QUCAY_SYMP_HPP
#define QUCAY_SYMP_HPP

#include "qucay/modring.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace qucay {

struct SympMatrix {
    int m = 1;
    int64_t n = 1;
    std::vector<int64_t> a; // row-major (2m) x (2m), entries in [0, n)

    static SympMatrix identity(int m, int64_t n);
    static SympMatrix zero(int m, int64_t n);

    int dim() const { return 2 * m; }
    int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r * dim() + c)]; }
    int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r * dim() + c)]; }

    friend bool operator==(const SympMatrix&, const SympMatrix&) = default;
};

SympMatrix matmul(const SympMatrix& x, const SympMatrix& y);

// The form sigma = [[0, -I], [I, 0]].
SympMatrix symplectic_form(int m, int64_t n);

// Exact congruence check S^T sigma S = sigma (mod n).
bool is_symplectic(const SympMatrix& s);

// Elementary symplectic row operations:
//   Scale M_j^alpha : row j *= alpha, row j+m *= alpha^-1   (alpha a unit)
//   Swap  E_{j,k}   : swap(j,k) then negate row k if k = j+m, else also swap
//                     the mate rows (j+m, k+m)
//   Add   C_{j,k}^e : add row j to row k (e = +-1), with the companion mate
//                     operation dictated by the position of (j,k)
struct RowOp {
    enum class Kind { Scale, Swap, Add };
    Kind kind = Kind::Add;
    int j = 0;          // 0-based row indices
    int k = 0;
    int64_t alpha = 1;  // Scale only
    int exponent = 1;   // Add only, +1 or -1
};

SympMatrix rowop_matrix(const RowOp& op, int m, int64_t n);

// apply(op, S) = rowop_matrix(op) * S, implemented as row operations.
SympMatrix apply(const RowOp& op, const SympMatrix& s);

struct OpProgram {
    int m = 1;
    int64_t n = 1;
    std::vector<RowOp> ops; // applied top to bottom as left multiplications
};

// Left-multiplies S by every op in order.
SympMatrix replay(const OpProgram& prog, SympMatrix s);
// Product of the op matrices (replay applied to the identity).
SympMatrix program_matrix(const OpProgram& prog);
// The reversed program of inverse ops: replay(prog, S) = I gives a
// factorization of S as the product of the inverted ops.
OpProgram inverted_program(const OpProgram& prog);

// Unit-coefficient Bezout data. Binary form: a*x = gamma (mod n) with a a
// unit and gamma = gcd(x, n). Ternary form: a*x + b*y = gamma (mod n) with
// both a and b units and gamma = gcd(x, y, n).
struct BezoutCertificate {
    int64_t x = 0;
    int64_t y = 0; // ternary only
    int64_t n = 1;
    int64_t a = 1;
    int64_t b = 1; // ternary only
    int64_t gamma = 0;
    bool ternary = false;
};

// Always solvable. gamma = gcd(x, n) with gcd(0, n) = n (= 0 mod n).
BezoutCertificate bezout_unit(int64_t x, int64_t n);

// Solvable unless 2 divides n/gamma while gcd(x,n)/gamma and gcd(y,n)/gamma
// are both odd, in which case no unit pair exists at all (the two unit
// coefficients force an even combination); nullopt is returned exactly for
// those inputs. The search is complete: a certificate is found whenever one
// exists.
std::optional<BezoutCertificate> bezout_unit_pair(int64_t x, int64_t y, int64_t n);

// A single derived row addition in place of a Euclid run: coefficients r and
// g with y + r*x = g (mod n) and g a unit multiple of gcd(x, y, n). Always
// solvable; prefers the unit-pair certificate when it exists.
struct GcdStep {
    int64_t r = 0;
    int64_t g = 0;
};
GcdStep unit_gcd_step(int64_t x, int64_t y, int64_t n);

// Elementary program multiplying to C_{j,k}^alpha. Uses the conjugation
// identity directly when alpha is a usable unit, otherwise a signed walk:
// quadratic steps for the mate pair k = j+m (length <= 12), unit steps
// otherwise (length <= 3). alpha = 0 gives the empty program; M factors
// with value 1 are elided.
OpProgram expand_c_power(int j, int k, int64_t alpha, int m, int64_t n);

// One stage of the reduction: clears columns k and k+m (0-based) down to
// standard basis vectors, assuming columns k+1..m-1 and k+m+1..2m-1 are
// standard already. Returns the reduced matrix and the emitted program.
std::pair<SympMatrix, OpProgram> reduce_column_pair(const SympMatrix& s, int k);

// Fixed elementary-operation budget: decompose emits at most
// kDecomposeOpBound * m^2 ops for every modulus n.
inline constexpr int kDecomposeOpBound = 161;

// Full reduction: replay(decompose(S), S) = I. Throws on non-symplectic
// input.
OpProgram decompose(const SympMatrix& s);

// Deterministic product of `count` uniformly sampled elementary generators.
SympMatrix random_symplectic(int m, int64_t n, int count, uint64_t seed);

// Text format, one op per line, 1-based indices:
//   M <j> <alpha> | E <j> <k> | C <j> <k> <+1|-1>
// '#' starts a comment.
std::string to_ops_text(const OpProgram& prog);
OpProgram parse_ops_text(const std::string& text, int m, int64_t n);

// Matrix JSON: {"n": .., "m": .., "rows": [[..]..]}.
std::string to_matrix_json(const SympMatrix& s);
SympMatrix matrix_from_json(const std::string& text);

} // namespace qucay

#endif

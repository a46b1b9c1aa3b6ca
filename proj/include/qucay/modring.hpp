// Exact arithmetic in Z_n: factorization, CRT split/combine, units,
// quadratic units, modular inverses and square roots.
//
// All values of residue type are kept in the canonical range [0, n).
// Everything here is a pure function over immutable inputs; thread-safe.

#ifndef QUCAY_MODRING_HPP
#define QUCAY_MODRING_HPP

#include <cstdint>
#include <vector>

namespace qucay {

using std::int64_t;

struct Factor {
    int64_t prime;
    int exponent;
    int64_t power; // prime^exponent, cached

    friend bool operator==(const Factor&, const Factor&) = default;
};

// A positive modulus together with its prime-power factorization.
// Factorization is by trial division; intended for desk scale (n up to ~10^6).
class Modulus {
public:
    explicit Modulus(int64_t n);

    int64_t value() const { return n_; }
    const std::vector<Factor>& factors() const { return factors_; }

    // Canonical representative of x in [0, n); accepts negative inputs.
    int64_t reduce(int64_t x) const;

    bool is_unit(int64_t r) const;
    bool divisible_by(int64_t p) const { return n_ % p == 0; }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.n_ == b.n_; }

private:
    int64_t n_;
    std::vector<Factor> factors_; // primes strictly increasing, exponents >= 1
};

// Residues are canonical int64 values in [0, n); the owning Modulus is passed
// explicitly to the operations that need its factorization.
using Residue = int64_t;

struct CrtVector {
    std::vector<Residue> components; // one per prime-power factor, same order
};

Modulus factorize(int64_t n); // rejects n <= 0

CrtVector crt_split(const Modulus& mod, Residue r);
Residue crt_combine(const Modulus& mod, const CrtVector& v);

// Q_n = { u^2 : u a unit mod n }, sorted ascending. Computed by direct
// squaring so it can serve as an oracle for the CRT-based membership test.
// Convention for the degenerate ring: Q_1 = {0} (the unit group of Z_1 is
// the trivial group on 0).
std::vector<Residue> quadratic_units(const Modulus& mod);

// T_n = Q_n u (-Q_n), sorted ascending.
std::vector<Residue> connection_set(const Modulus& mod);

// Membership in Q_n decided per prime-power factor:
//   odd p : r a unit with quadratic-residue Legendre symbol mod p
//   p = 2 : r = 1 (m=1), r = 1 mod 4 (m=2), r = 1 mod 8 (m>=3)
bool is_quadratic_unit(const Modulus& mod, Residue r);

// True iff -1 is in Q_n, decided by the factor criterion: every odd prime
// factor is 1 mod 4 and n is not a multiple of 4.
bool minus_one_is_quadratic(const Modulus& mod);

// Plain extended-Euclid inverse; throws std::domain_error unless gcd(x,n)=1.
int64_t mod_inverse(int64_t x, int64_t n);

int64_t pow_mod(int64_t base, int64_t exp, int64_t n);
int64_t gcd64(int64_t a, int64_t b);

// A unit u with u^2 = q (mod n); the smallest such root for n <= 20000,
// otherwise assembled factor-by-factor through the CRT. Throws
// std::domain_error if q is not a quadratic unit.
Residue sqrt_in_units(const Modulus& mod, Residue q);

} // namespace qucay

#endif

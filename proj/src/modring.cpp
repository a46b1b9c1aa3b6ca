#include "qucay/modring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qucay {

Modulus::Modulus(int64_t n) : n_(n) {
    if (n <= 0)
        throw std::invalid_argument("Modulus: n must be positive, got " + std::to_string(n));
    int64_t rest = n;
    for (int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        Factor f{p, 0, 1};
        while (rest % p == 0) {
            rest /= p;
            f.exponent += 1;
            f.power *= p;
        }
        factors_.push_back(f);
    }
    if (rest > 1) factors_.push_back(Factor{rest, 1, rest});
}

int64_t Modulus::reduce(int64_t x) const {
    int64_t r = x % n_;
    return r < 0 ? r + n_ : r;
}

bool Modulus::is_unit(int64_t r) const {
    if (n_ == 1) return true; // unit group of Z_1 is {0}
    return gcd64(reduce(r), n_) == 1;
}

Modulus factorize(int64_t n) { return Modulus(n); }

int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t n) {
    if (n == 1) return 0;
    int64_t r = 1;
    base %= n;
    if (base < 0) base += n;
    while (exp > 0) {
        if (exp & 1) r = r * base % n;
        base = base * base % n;
        exp >>= 1;
    }
    return r;
}

CrtVector crt_split(const Modulus& mod, Residue r) {
    CrtVector v;
    v.components.reserve(mod.factors().size());
    int64_t x = mod.reduce(r);
    for (const Factor& f : mod.factors()) v.components.push_back(x % f.power);
    return v;
}

Residue crt_combine(const Modulus& mod, const CrtVector& v) {
    const auto& fs = mod.factors();
    if (v.components.size() != fs.size())
        throw std::invalid_argument("crt_combine: component count does not match factor count");
    // Fold pairwise: x = a (mod M), x = b (mod N)  ->  a + M*((b-a)*M^-1 mod N).
    int64_t x = 0, m = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        int64_t p = fs[i].power;
        int64_t b = ((v.components[i] % p) + p) % p;
        if (i == 0) {
            x = b;
            m = p;
            continue;
        }
        int64_t diff = (b - x) % p;
        if (diff < 0) diff += p;
        int64_t t = diff * mod_inverse(m % p, p) % p;
        x += m * t;
        m *= p;
    }
    return mod.reduce(x);
}

std::vector<Residue> quadratic_units(const Modulus& mod) {
    const int64_t n = mod.value();
    if (n == 1) return {0};
    std::vector<uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (int64_t u = 1; u < n; ++u) {
        if (gcd64(u, n) != 1) continue;
        seen[static_cast<std::size_t>(u * u % n)] = 1;
    }
    std::vector<Residue> q;
    for (int64_t r = 0; r < n; ++r)
        if (seen[static_cast<std::size_t>(r)]) q.push_back(r);
    return q;
}

std::vector<Residue> connection_set(const Modulus& mod) {
    const int64_t n = mod.value();
    std::vector<Residue> q = quadratic_units(mod);
    std::vector<uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (Residue r : q) {
        seen[static_cast<std::size_t>(r)] = 1;
        seen[static_cast<std::size_t>(mod.reduce(-r))] = 1;
    }
    std::vector<Residue> t;
    for (int64_t r = 0; r < n; ++r)
        if (seen[static_cast<std::size_t>(r)]) t.push_back(r);
    return t;
}

namespace {

bool is_quadratic_unit_prime_power(const Factor& f, int64_t r) {
    if (f.prime == 2) {
        if (r % 2 == 0) return false;
        if (f.exponent == 1) return true;
        if (f.exponent == 2) return r % 4 == 1;
        return r % 8 == 1;
    }
    if (r % f.prime == 0) return false;
    // Quadratic residuacity mod p^m is decided mod p (Euler's criterion).
    return pow_mod(r % f.prime, (f.prime - 1) / 2, f.prime) == 1;
}

} // namespace

bool is_quadratic_unit(const Modulus& mod, Residue r) {
    if (mod.value() == 1) return true; // Q_1 = {0}
    int64_t x = mod.reduce(r);
    for (const Factor& f : mod.factors())
        if (!is_quadratic_unit_prime_power(f, x % f.power)) return false;
    return true;
}

bool minus_one_is_quadratic(const Modulus& mod) {
    if (mod.value() % 4 == 0) return false;
    for (const Factor& f : mod.factors())
        if (f.prime % 4 == 3) return false;
    return true;
}

int64_t mod_inverse(int64_t x, int64_t n) {
    if (n == 1) return 0;
    int64_t a = ((x % n) + n) % n, b = n;
    int64_t s0 = 1, s1 = 0;
    while (b != 0) {
        int64_t q = a / b;
        int64_t t = a - q * b;
        a = b;
        b = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (a != 1)
        throw std::domain_error("mod_inverse: argument is not a unit (gcd = " + std::to_string(a) + ")");
    return ((s0 % n) + n) % n;
}

Residue sqrt_in_units(const Modulus& mod, Residue q) {
    const int64_t n = mod.value();
    if (n == 1) return 0;
    int64_t target = mod.reduce(q);
    if (!is_quadratic_unit(mod, target))
        throw std::domain_error("sqrt_in_units: argument is not a quadratic unit");
    if (n <= 20000) {
        for (int64_t u = 1; u < n; ++u)
            if (gcd64(u, n) == 1 && u * u % n == target) return u;
        throw std::logic_error("sqrt_in_units: no root found for quadratic unit");
    }
    // Larger n: find a root modulo each prime-power factor, then combine.
    CrtVector parts = crt_split(mod, target);
    CrtVector roots;
    roots.components.reserve(parts.components.size());
    for (std::size_t i = 0; i < parts.components.size(); ++i) {
        const Factor& f = mod.factors()[i];
        int64_t root = -1;
        for (int64_t u = 1; u < f.power; ++u) {
            if (u % f.prime == 0) continue;
            if (u * u % f.power == parts.components[i]) {
                root = u;
                break;
            }
        }
        if (root < 0) throw std::logic_error("sqrt_in_units: factor root missing");
        roots.components.push_back(root);
    }
    return crt_combine(mod, roots);
}

} // namespace qucay

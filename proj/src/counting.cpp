#include "qucay/counting.hpp"

#include <stdexcept>

namespace qucay {

namespace {

int64_t ipow(int64_t p, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= p;
    return r;
}

void require_odd_prime(int64_t p) {
    if (p == 2) throw std::invalid_argument("closed forms cover odd primes only");
    if (p < 3) throw std::invalid_argument("p must be an odd prime");
}

} // namespace

AladovTable aladov_counts(int64_t p, int m) {
    require_odd_prime(p);
    if (m < 1) throw std::invalid_argument("aladov_counts: exponent must be >= 1");
    const int64_t scale = ipow(p, m - 1);
    AladovTable t;
    if (p % 4 == 1) {
        t.cpp = (p - 5) * scale / 4;
        t.cpm = t.cmp = t.cmm = (p - 1) * scale / 4;
    } else {
        t.cpm = (p + 1) * scale / 4;
        t.cpp = t.cmp = t.cmm = (p - 3) * scale / 4;
    }
    return t;
}

AladovTable aladov_oracle(int64_t p, int m) {
    require_odd_prime(p);
    const int64_t n = ipow(p, m);
    Modulus mod(n);
    AladovTable t;
    for (int64_t x = 0; x < n; ++x) {
        int64_t y = (x + 1) % n;
        if (x % p == 0 || y % p == 0) continue; // both must be units
        bool xq = is_quadratic_unit(mod, x);
        bool yq = is_quadratic_unit(mod, y);
        if (xq && yq) ++t.cpp;
        else if (xq && !yq) ++t.cpm;
        else if (!xq && yq) ++t.cmp;
        else ++t.cmm;
    }
    return t;
}

PairCounts sd_prime_power(int64_t p, int m, Residue r) {
    require_odd_prime(p);
    if (m < 1) throw std::invalid_argument("sd_prime_power: exponent must be >= 1");
    const int64_t n = ipow(p, m);
    const int64_t scale = ipow(p, m - 1);
    int64_t x = ((r % n) + n) % n;

    PairCounts c;
    if (p % 4 == 1) {
        if (x % p == 0) {
            c.s = c.d = (p - 1) * scale / 2;
        } else if (pow_mod(x % p, (p - 1) / 2, p) == 1) {
            c.s = c.d = (p - 5) * scale / 4;
        } else {
            c.s = c.d = (p - 1) * scale / 4;
        }
        return c;
    }
    // p = 3 mod 4
    if (x % p == 0) {
        c.s = 0;
        c.d = (p - 1) * scale / 2;
    } else {
        c.d = (p - 3) * scale / 4;
        c.s = (pow_mod(x % p, (p - 1) / 2, p) == 1) ? (p - 3) * scale / 4
                                                    : (p + 1) * scale / 4;
    }
    return c;
}

PairCounts sd_counts(const Modulus& mod, Residue r) {
    if (mod.value() % 2 == 0)
        throw std::invalid_argument("sd_counts: closed forms cover odd n only; use sd_oracle");
    PairCounts c{1, 1}; // empty product; also the n = 1 convention
    CrtVector parts = crt_split(mod, r);
    for (std::size_t i = 0; i < mod.factors().size(); ++i) {
        const Factor& f = mod.factors()[i];
        PairCounts fc = sd_prime_power(f.prime, f.exponent, parts.components[i]);
        c.s *= fc.s;
        c.d *= fc.d;
    }
    return c;
}

PairCounts sd_oracle(const Modulus& mod, Residue r) {
    const int64_t n = mod.value();
    int64_t target = mod.reduce(r);
    std::vector<Residue> q = quadratic_units(mod);
    PairCounts c;
    for (Residue x : q)
        for (Residue y : q) {
            if ((x + y) % n == target) ++c.s;
            if (((x - y) % n + n) % n == target) ++c.d;
        }
    return c;
}

std::vector<PairCounts> sd_oracle_all(const Modulus& mod) {
    const int64_t n = mod.value();
    std::vector<Residue> q = quadratic_units(mod);
    std::vector<PairCounts> all(static_cast<std::size_t>(n));
    for (Residue x : q)
        for (Residue y : q) {
            ++all[static_cast<std::size_t>((x + y) % n)].s;
            ++all[static_cast<std::size_t>(((x - y) % n + n) % n)].d;
        }
    return all;
}

ZeroPredicate sd_zero_predicate(const Modulus& mod, Residue r) {
    if (mod.value() % 2 == 0)
        throw std::invalid_argument("sd_zero_predicate: defined for odd n only");
    int64_t x = mod.reduce(r);
    ZeroPredicate z;
    if (mod.divisible_by(3)) {
        if (x % 3 != 2) z.s_is_zero = true;
        if (x % 3 != 0) z.d_is_zero = true;
    }
    if (mod.divisible_by(5) && (x % 5 == 1 || x % 5 == 4)) {
        z.s_is_zero = true;
        z.d_is_zero = true;
    }
    for (const Factor& f : mod.factors())
        if (f.prime % 4 == 3 && x % f.prime == 0) z.s_is_zero = true;
    return z;
}

} // namespace qucay

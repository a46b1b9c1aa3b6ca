#include "qucay/holes.hpp"

#include "qucay/cayley.hpp"
#include "qucay/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace qucay {

std::string hole_case_name(HoleCase c) {
    switch (c) {
        case HoleCase::PaleyFactor: return "paley-factor";
        case HoleCase::TwoPrimesA: return "two-primes-case-a";
        case HoleCase::TwoPrimesB: return "two-primes-case-b";
        case HoleCase::TwoPrimesC: return "two-primes-case-c";
        case HoleCase::BruteForce: return "brute-force";
    }
    return "?";
}

bool is_induced_odd_cycle(const Modulus& mod, const std::vector<Residue>& vertices) {
    const std::size_t len = vertices.size();
    if (len < 5 || len % 2 == 0) return false;
    std::vector<Residue> canon(len);
    for (std::size_t i = 0; i < len; ++i) canon[i] = mod.reduce(vertices[i]);
    std::vector<Residue> sorted = canon;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::vector<Residue> t = connection_set(mod);
    std::vector<uint8_t> mask(static_cast<std::size_t>(mod.value()), 0);
    for (Residue s : t)
        if (s != 0) mask[static_cast<std::size_t>(s)] = 1;
    auto adjacent = [&](Residue a, Residue b) {
        return mask[static_cast<std::size_t>(mod.reduce(a - b))] != 0;
    };
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (adjacent(canon[i], canon[j]) != consecutive) return false;
        }
    return true;
}

namespace {

struct HoleDfs {
    int64_t n;
    const std::vector<uint8_t>& mask;
    int target_len;
    std::vector<int64_t> path;
    std::vector<uint8_t> used;

    bool adj(int64_t a, int64_t b) const {
        int64_t d = (b - a) % n;
        if (d < 0) d += n;
        return mask[static_cast<std::size_t>(d)] != 0;
    }

    bool extend() {
        const int pos = static_cast<int>(path.size());
        if (pos == target_len) return true;
        const bool last = (pos == target_len - 1);
        for (int64_t w = 1; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (!adj(path.back(), w)) continue;
            // Positions 2..len-2 must avoid vertex 0; the final vertex must
            // close the cycle. Position 1 is a cycle edge already.
            if (pos >= 2 && last != adj(w, path[0])) continue;
            bool induced = true;
            for (int i = 1; i + 1 < pos; ++i)
                if (adj(path[static_cast<std::size_t>(i)], w)) {
                    induced = false;
                    break;
                }
            if (!induced) continue;
            path.push_back(w);
            used[static_cast<std::size_t>(w)] = 1;
            if (extend()) return true;
            used[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int64_t>> find_odd_hole_circulant(int64_t n,
                                                            const std::vector<uint8_t>& diff_mask,
                                                            int max_len, bool root_at_edge01) {
    for (int len = 5; len <= max_len; len += 2) {
        HoleDfs dfs{n, diff_mask, len, {}, {}};
        dfs.used.assign(static_cast<std::size_t>(n), 0);
        dfs.path.push_back(0);
        dfs.used[0] = 1;
        if (root_at_edge01) {
            if (n < 2 || !dfs.adj(0, 1)) continue;
            dfs.path.push_back(1);
            dfs.used[1] = 1;
        }
        if (dfs.extend()) return dfs.path;
    }
    return std::nullopt;
}

std::optional<OddHoleCertificate> brute_force_hole_search(const Modulus& mod, int max_len) {
    const int64_t n = mod.value();
    if (n > kHoleSearchCap)
        throw std::invalid_argument("brute_force_hole_search: n exceeds the search cap");
    if (max_len > 7 || max_len < 5 || max_len % 2 == 0)
        throw std::invalid_argument("brute_force_hole_search: max_len must be 5 or 7");
    std::vector<uint8_t> mask(static_cast<std::size_t>(n), 0);
    for (Residue s : connection_set(mod))
        if (s != 0) mask[static_cast<std::size_t>(s)] = 1;
    auto found = find_odd_hole_circulant(n, mask, max_len);
    if (!found) return std::nullopt;
    OddHoleCertificate cert;
    cert.n = n;
    cert.vertices = *found;
    cert.provenance = HoleCase::BruteForce;
    cert.nu = cert.mu = n;
    cert.big_n = 1;
    for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
        Residue diff = mod.reduce(cert.vertices[(i + 1) % cert.vertices.size()] - cert.vertices[i]);
        cert.orientations.push_back(is_quadratic_unit(mod, diff) ? 1 : -1);
    }
    return cert;
}

namespace {

// Hole in the Paley graph G_p (p = 1 mod 4 prime), shortest through the edge
// 0-1. Imperfect self-complementary graphs are guaranteed an odd hole but
// not constructively, so this is a bounded exact search.
std::vector<int64_t> paley_hole(int64_t p) {
    Modulus mod(p);
    std::vector<uint8_t> mask(static_cast<std::size_t>(p), 0);
    for (Residue s : connection_set(mod))
        if (s != 0) mask[static_cast<std::size_t>(s)] = 1;
    auto found = find_odd_hole_circulant(p, mask, 7, /*root_at_edge01=*/true);
    if (!found) {
        found = find_odd_hole_circulant(p, mask, 7, /*root_at_edge01=*/false);
        if (!found)
            throw std::logic_error("paley_hole: no 5/7-hole found in G_" + std::to_string(p));
    }
    return *found;
}

int64_t crt2(int64_t a, int64_t p, int64_t b, int64_t q) {
    // x = a mod p, x = b mod q for coprime p, q.
    int64_t ap = ((a % p) + p) % p;
    int64_t bq = ((b % q) + q) % q;
    int64_t diff = ((bq - ap) % q + q) % q;
    return ap + p * (diff * mod_inverse(p % q, q) % q);
}

bool is_qr_mod_prime(int64_t x, int64_t p) {
    int64_t r = ((x % p) + p) % p;
    if (r == 0) return false;
    return pow_mod(r, (p - 1) / 2, p) == 1;
}

// The three explicit five-vertex constructions in G_{p1 p2}, p1 < p2 both
// 3 mod 4, branching on the quadratic residuacity of 2.
std::pair<std::vector<int64_t>, HoleCase> two_prime_hole(int64_t p1, int64_t p2) {
    // Case b wants 2 in Q_{p2}; 2 is never in Q_3, so 3 stays in front.
    if (is_qr_mod_prime(2, p1) && !is_qr_mod_prime(2, p2)) std::swap(p1, p2);

    std::vector<int64_t> v(5);
    v[0] = 0;
    v[1] = 1;
    HoleCase tag;
    if (!is_qr_mod_prime(2, p1) && !is_qr_mod_prime(2, p2)) {
        // case a: minimal consecutive triple q, q+1, q+2 in Q_{p2}
        int64_t q = -1;
        for (int64_t c = 1; c + 2 < p2; ++c)
            if (is_qr_mod_prime(c, p2) && is_qr_mod_prime(c + 1, p2) && is_qr_mod_prime(c + 2, p2)) {
                q = c;
                break;
            }
        if (q < 0) throw std::logic_error("two_prime_hole: no consecutive residue triple mod " +
                                          std::to_string(p2));
        v[2] = crt2(2, p1, q + 1, p2);
        v[3] = crt2(0, p1, 2, p2);
        v[4] = crt2(2, p1, -q, p2);
        tag = HoleCase::TwoPrimesA;
    } else if (is_qr_mod_prime(2, p2) && !is_qr_mod_prime(2, p1)) {
        // case b
        v[2] = crt2(2, p1, 2, p2);
        v[3] = crt2(0, p1, 3, p2);
        v[4] = crt2(1, p1, 4, p2);
        tag = HoleCase::TwoPrimesB;
    } else {
        // case c: largest consecutive pairs q-1, q in Q_{p1} and Q_{p2}
        auto largest_pair = [](int64_t p) {
            for (int64_t c = p - 1; c >= 2; --c)
                if (is_qr_mod_prime(c, p) && is_qr_mod_prime(c - 1, p)) return c;
            throw std::logic_error("two_prime_hole: no consecutive residue pair mod " +
                                   std::to_string(p));
        };
        int64_t q1 = largest_pair(p1), q2 = largest_pair(p2);
        v[2] = crt2(q1, p1, -q2, p2);
        v[3] = crt2(0, p1, 1, p2);
        v[4] = crt2(1, p1, q2, p2);
        tag = HoleCase::TwoPrimesC;
    }
    return {v, tag};
}

} // namespace

OddHoleCertificate construct_odd_hole(const Modulus& mod) {
    const int64_t n = mod.value();
    if (n % 2 == 0)
        throw std::invalid_argument("construct_odd_hole: n must be odd");
    if (mod.factors().size() == 1 && mod.factors()[0].prime % 4 == 3)
        throw std::invalid_argument("construct_odd_hole: G_n is perfect for this n");
    if (n == 1) throw std::invalid_argument("construct_odd_hole: n = 1 has no holes");

    OddHoleCertificate cert;
    cert.n = n;

    // Stage 1: a hole in G_nu for a small divisor nu of n.
    std::vector<int64_t> hole_nu;
    int64_t nu = 1, mu = 1;
    bool has_1mod4 = false;
    for (const Factor& f : mod.factors())
        if (f.prime % 4 == 1) has_1mod4 = true;

    if (has_1mod4) {
        // Paley branch; p = 5 whenever 5 | n so the cofactor stays coprime to 5.
        int64_t p = 0;
        if (mod.divisible_by(5)) {
            p = 5;
        } else {
            for (const Factor& f : mod.factors())
                if (f.prime % 4 == 1) {
                    p = f.prime;
                    break;
                }
        }
        nu = p;
        hole_nu = paley_hole(p);
        for (const Factor& f : mod.factors())
            if (f.prime == p) mu = f.power;
        cert.provenance = HoleCase::PaleyFactor;
    } else {
        // Two distinct primes = 3 mod 4; p1 = 3 whenever 3 | n so the cofactor
        // stays coprime to 6.
        std::vector<int64_t> ps;
        for (const Factor& f : mod.factors())
            if (f.prime % 4 == 3) ps.push_back(f.prime);
        if (ps.size() < 2)
            throw std::logic_error("construct_odd_hole: expected two primes = 3 mod 4");
        auto [verts, tag] = two_prime_hole(ps[0], ps[1]);
        hole_nu = verts;
        nu = ps[0] * ps[1];
        mu = 1;
        for (const Factor& f : mod.factors())
            if (f.prime == ps[0] || f.prime == ps[1]) mu *= f.power;
        cert.provenance = tag;
    }
    cert.nu = nu;
    cert.mu = mu;

    // Stage 2: lift to G_mu by reading the vertices inside {0..nu-1} in Z_mu;
    // membership in Q_{p^m} is decided mod p, so adjacency carries over.
    std::vector<int64_t> x = hole_nu;
    const std::size_t len = x.size();

    // Stage 3: extend over the cofactor N with a closed walk of length len.
    const int64_t big_n = n / mu;
    cert.big_n = big_n;
    Modulus mu_mod(mu);
    std::vector<int64_t> y(len, 0);
    if (big_n > 1) {
        Modulus n_mod(big_n);
        if (cert.provenance == HoleCase::PaleyFactor) {
            // -1 in Q_mu here, so the cofactor walk needs no sign agreement:
            // take the closed triangle 0, u, -1, 0 (S_N(-1) > 0 because the
            // cofactor is coprime to 5) and pad with (0,1) round trips.
            std::vector<Residue> q = quadratic_units(n_mod);
            std::vector<uint8_t> qmask(static_cast<std::size_t>(big_n), 0);
            for (Residue s : q) qmask[static_cast<std::size_t>(s)] = 1;
            int64_t target = big_n - 1;
            int64_t u = -1;
            for (Residue cand : q)
                if (qmask[static_cast<std::size_t>(((target - cand) % big_n + big_n) % big_n)]) {
                    u = cand;
                    break;
                }
            if (u < 0)
                throw std::logic_error("construct_odd_hole: no length-2 path to -1 mod " +
                                       std::to_string(big_n));
            y[1] = u;
            y[2] = target;
            for (std::size_t j = 4; j < len; j += 2) y[j] = 1; // y_3, y_5, ... stay 0
        } else {
            // Sign-matched closed walk per the sign-walk lemma: the cofactor is
            // coprime to 6 and len = 5 exceeds udiam(Gamma_N).
            std::vector<int> signs(len);
            for (std::size_t j = 0; j < len; ++j) {
                Residue diff = mu_mod.reduce(x[(j + 1) % len] - x[j]);
                signs[j] = is_quadratic_unit(mu_mod, diff) ? 1 : -1;
            }
            auto walk = walk_with_signs(n_mod, 0, signs, StepSetKind::QuadraticUnits);
            if (!walk)
                throw std::logic_error("construct_odd_hole: sign-matched closed walk missing mod " +
                                       std::to_string(big_n));
            int64_t acc = 0;
            for (std::size_t j = 0; j + 1 < len; ++j) {
                acc = n_mod.reduce(acc + walk->signs[j] * walk->steps[j]);
                y[j + 1] = acc;
            }
        }
    }

    cert.vertices.resize(len);
    for (std::size_t j = 0; j < len; ++j)
        cert.vertices[j] = (big_n > 1) ? crt2(x[j], mu, y[j], big_n) : x[j];

    for (std::size_t i = 0; i < len; ++i) {
        Residue diff = mod.reduce(cert.vertices[(i + 1) % len] - cert.vertices[i]);
        cert.orientations.push_back(is_quadratic_unit(mod, diff) ? 1 : -1);
    }
    return cert;
}

PerfectnessVerdict perfectness(const Modulus& mod, bool with_certificate) {
    const int64_t n = mod.value();
    if (n < 2) throw std::invalid_argument("perfectness: requires n >= 2");
    PerfectnessVerdict v;
    if (n % 2 == 0) {
        v.perfect = true;
        v.reason = PerfectnessReason::Even;
        return v;
    }
    if (mod.factors().size() == 1 && mod.factors()[0].prime % 4 == 3) {
        v.perfect = true;
        v.reason = PerfectnessReason::PrimePower3Mod4;
        return v;
    }
    v.perfect = false;
    v.reason = PerfectnessReason::HoleExists;
    if (with_certificate) {
        OddHoleCertificate cert = construct_odd_hole(mod);
        if (!is_induced_odd_cycle(mod, cert.vertices))
            throw std::logic_error("perfectness: constructed hole failed validation at n = " +
                                   std::to_string(n));
        v.certificate = std::move(cert);
    }
    return v;
}

} // namespace qucay

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qucay/cayley.hpp"
#include "qucay/holes.hpp"

#include <stdexcept>

using namespace qucay;

TEST_CASE("induced odd cycle checker") {
    Modulus m5(5);
    CHECK(is_induced_odd_cycle(m5, {0, 1, 2, 3, 4}));
    CHECK_FALSE(is_induced_odd_cycle(m5, {0, 1, 2, 3}));          // even length
    CHECK_FALSE(is_induced_odd_cycle(Modulus(13), {0, 1, 2}));    // triangle, not a hole
    CHECK_FALSE(is_induced_odd_cycle(m5, {0, 1, 2, 3, 0}));      // repeated vertex
    CHECK_FALSE(is_induced_odd_cycle(Modulus(13), {0, 1, 2, 3, 4})); // chords in the Paley graph
}

TEST_CASE("perfectness verdicts") {
    PerfectnessVerdict v9 = perfectness(Modulus(9));
    CHECK(v9.perfect);
    CHECK(v9.reason == PerfectnessReason::PrimePower3Mod4);

    PerfectnessVerdict v6 = perfectness(Modulus(6));
    CHECK(v6.perfect);
    CHECK(v6.reason == PerfectnessReason::Even);

    PerfectnessVerdict v15 = perfectness(Modulus(15));
    CHECK_FALSE(v15.perfect);
    REQUIRE(v15.certificate.has_value());
    CHECK(is_induced_odd_cycle(Modulus(15), v15.certificate->vertices));

    CHECK_THROWS_AS(perfectness(Modulus(1)), std::invalid_argument);
}

TEST_CASE("constructed holes on the named examples") {
    OddHoleCertificate c5 = construct_odd_hole(Modulus(5));
    CHECK(c5.vertices == std::vector<int64_t>{0, 1, 2, 3, 4});
    CHECK(c5.provenance == HoleCase::PaleyFactor);

    OddHoleCertificate c21 = construct_odd_hole(Modulus(21));
    CHECK(c21.provenance == HoleCase::TwoPrimesB); // 2 not in Q_3, 2 in Q_7
    CHECK(is_induced_odd_cycle(Modulus(21), c21.vertices));

    OddHoleCertificate c45 = construct_odd_hole(Modulus(45));
    CHECK(c45.provenance == HoleCase::PaleyFactor);
    CHECK(c45.nu == 5);
    CHECK(c45.mu == 5);
    CHECK(c45.big_n == 9);
    CHECK(is_induced_odd_cycle(Modulus(45), c45.vertices));

    CHECK_THROWS_AS(construct_odd_hole(Modulus(9)), std::invalid_argument);
    CHECK_THROWS_AS(construct_odd_hole(Modulus(10)), std::invalid_argument);
}

TEST_CASE("each two-prime case appears and validates") {
    // (3, 11): 2 in neither -> case a. (3, 7): case b. (7, 23): both -> case c.
    OddHoleCertificate a = construct_odd_hole(Modulus(33));
    CHECK(a.provenance == HoleCase::TwoPrimesA);
    CHECK(is_induced_odd_cycle(Modulus(33), a.vertices));

    OddHoleCertificate b = construct_odd_hole(Modulus(21));
    CHECK(b.provenance == HoleCase::TwoPrimesB);

    OddHoleCertificate c = construct_odd_hole(Modulus(161));
    CHECK(c.provenance == HoleCase::TwoPrimesC);
    CHECK(is_induced_odd_cycle(Modulus(161), c.vertices));
}

TEST_CASE("two-prime constructions validate for all products up to 400") {
    std::vector<int64_t> primes_3mod4{3, 7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79};
    for (std::size_t i = 0; i < primes_3mod4.size(); ++i)
        for (std::size_t j = i + 1; j < primes_3mod4.size(); ++j) {
            int64_t nu = primes_3mod4[i] * primes_3mod4[j];
            if (nu > 400) continue;
            Modulus m(nu);
            OddHoleCertificate cert = construct_odd_hole(m);
            if (!is_induced_odd_cycle(m, cert.vertices))
                FAIL("two-prime hole invalid at ", primes_3mod4[i], "*", primes_3mod4[j]);
        }
}

TEST_CASE("constructed holes validate for odd imperfect n up to 250") {
    for (int64_t n = 3; n <= 250; n += 2) {
        Modulus m(n);
        if (m.factors().size() == 1 && m.factors()[0].prime % 4 == 3) continue;
        if (n == 1) continue;
        OddHoleCertificate cert = construct_odd_hole(m);
        CHECK(static_cast<int64_t>(cert.vertices.size()) % 2 == 1);
        CHECK(cert.orientations.size() == cert.vertices.size());
        if (!is_induced_odd_cycle(m, cert.vertices)) FAIL("invalid certificate at n=", n);
    }
}

TEST_CASE("brute force search") {
    CHECK_FALSE(brute_force_hole_search(Modulus(9), 7).has_value());
    CHECK_FALSE(brute_force_hole_search(Modulus(8), 7).has_value()); // bipartite

    auto found = brute_force_hole_search(Modulus(13), 5);
    REQUIRE(found.has_value());
    CHECK(found->vertices.size() == 5);
    CHECK(is_induced_odd_cycle(Modulus(13), found->vertices));

    CHECK_THROWS_AS(brute_force_hole_search(Modulus(121), 5), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_hole_search(Modulus(9), 9), std::invalid_argument);
}

TEST_CASE("no short holes in perfect graphs up to 80, complement up to 40") {
    for (int64_t n = 2; n <= 80; ++n) {
        Modulus m(n);
        bool perfect = (n % 2 == 0) || (m.factors().size() == 1 && m.factors()[0].prime % 4 == 3);
        if (!perfect) continue;
        CHECK_FALSE(brute_force_hole_search(m, 7).has_value());
        if (n > 40) continue;
        std::vector<uint8_t> comp(static_cast<std::size_t>(n), 1);
        comp[0] = 0;
        for (Residue s : connection_set(m)) comp[static_cast<std::size_t>(s)] = 0;
        CHECK_FALSE(find_odd_hole_circulant(n, comp, 7).has_value());
    }
}

TEST_CASE("G_p is self-complementary for p = 1 mod 4") {
    for (int64_t p : {5, 13, 17, 29}) {
        Modulus m(p);
        CirculantGraph g = quadratic_graph(m);
        // Multiplication by a non-quadratic unit swaps edges and non-edges.
        int64_t r = 0;
        for (int64_t c = 2; c < p; ++c)
            if (!is_quadratic_unit(m, c)) {
                r = c;
                break;
            }
        REQUIRE(r != 0);
        for (int64_t a = 0; a < p; ++a)
            for (int64_t b = 0; b < p; ++b) {
                if (a == b) continue;
                CHECK(g.adjacent(a, b) == !g.adjacent(r * a % p, r * b % p));
            }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qucay/cayley.hpp"

#include <random>
#include <stdexcept>

using namespace qucay;

TEST_CASE("BFS eccentricity of 0") {
    CHECK(bfs_eccentricity_zero(quadratic_graph(Modulus(7))) == 1); // complete graph
    CHECK(bfs_eccentricity_zero(quadratic_graph(Modulus(24))) == 12);
    CHECK(bfs_eccentricity_zero(quadratic_graph(Modulus(4))) == 2);
    CHECK(bfs_eccentricity_zero(quadratic_graph(Modulus(1))) == 0);

    // A genuinely disconnected circulant: steps {2} on Z_6 never reach odds.
    CirculantGraph half = circulant_from_steps(Modulus(6), {2, 4}, false);
    CHECK_FALSE(bfs_eccentricity_zero(half).has_value());
}

TEST_CASE("diameter formula clause examples") {
    CHECK(diameter_formula(Modulus(15)).formula_value == 3);
    CHECK(diameter_formula(Modulus(42)).formula_value == 4);
    CHECK(diameter_formula(Modulus(10)).formula_value == 5);
    CHECK(diameter_formula(Modulus(105)).formula_value == 4);
    CHECK(diameter_formula(Modulus(11)).formula_value == 1);
    CHECK(diameter_formula(Modulus(13)).formula_value == 2);
    CHECK(diameter_formula(Modulus(9)).formula_value == 2);
    CHECK(diameter_formula(Modulus(2)).formula_value == 1);
    CHECK(diameter_formula(Modulus(60)).formula_value == 6); // overlapping clause order
    CHECK(diameter_formula(Modulus(60)).case_label == "even-odd-12k");
    CHECK(diameter_formula(Modulus(1)).formula_value == 0);
}

TEST_CASE("diameter report cross-checks the formula with BFS") {
    for (int64_t n = 2; n <= 260; ++n) {
        DiameterReport rep = diameter_report(Modulus(n));
        REQUIRE(rep.bfs_value.has_value());
        CHECK(rep.formula_value == *rep.bfs_value);
    }
}

TEST_CASE("uniform diameter") {
    CHECK(uniform_diameter(quadratic_digraph(Modulus(13))) == 2);
    CHECK(uniform_diameter(quadratic_digraph(Modulus(7))) == 3);
    CHECK(uniform_diameter(quadratic_digraph(Modulus(5))) == 4);
    CHECK(uniform_diameter(quadratic_digraph(Modulus(35))) == 4);
    CHECK_FALSE(uniform_diameter(quadratic_digraph(Modulus(6))).has_value());
    CHECK_FALSE(uniform_diameter(quadratic_digraph(Modulus(9))).has_value());
    CHECK_FALSE(uniform_diameter(quadratic_digraph(Modulus(16))).has_value());
}

TEST_CASE("uniform diameter matches the three-case formula for n <= 200") {
    for (int64_t n = 5; n <= 200; ++n) {
        Modulus m(n);
        auto ud = uniform_diameter(quadratic_digraph(m));
        if (n % 2 == 0 || n % 3 == 0) {
            CHECK_FALSE(ud.has_value());
            continue;
        }
        int expect;
        if (n % 5 == 0) expect = 4;
        else {
            expect = 2;
            for (const Factor& f : m.factors())
                if (f.prime % 4 == 3) expect = 3;
        }
        REQUIRE(ud.has_value());
        CHECK(*ud == expect);
    }
}

TEST_CASE("tensor factorization criterion examples") {
    CHECK(tensor_factorizes(Modulus(5), Modulus(13)));
    CHECK_FALSE(tensor_factorizes(Modulus(3), Modulus(7)));
    CHECK(tensor_factorizes(Modulus(2), Modulus(3)));
    CHECK_THROWS_AS(tensor_factorizes(Modulus(6), Modulus(3)), std::invalid_argument);
}

TEST_CASE("criterion matches connection-set equality for coprime pairs up to 60") {
    for (int64_t mm = 1; mm <= 60; ++mm)
        for (int64_t nn = mm + 1; mm * nn <= 240; ++nn) {
            if (gcd64(mm, nn) != 1) continue;
            Modulus mod_m(mm), mod_n(nn), mod_mn(mm * nn);
            // sigma(T_MN) vs T_M x T_N as explicit sets.
            std::vector<uint8_t> product(static_cast<std::size_t>(mm * nn), 0);
            for (Residue a : connection_set(mod_m))
                for (Residue b : connection_set(mod_n))
                    for (int64_t x = 0; x < mm * nn; ++x)
                        if (x % mm == a && x % nn == b)
                            product[static_cast<std::size_t>(x)] = 1;
            std::vector<uint8_t> direct(static_cast<std::size_t>(mm * nn), 0);
            for (Residue t : connection_set(mod_mn)) direct[static_cast<std::size_t>(t)] = 1;
            CHECK(tensor_factorizes(mod_m, mod_n) == (product == direct));
        }
}

TEST_CASE("tensor product of small graphs") {
    DenseGraph k2 = pseudo_clique(2);
    DenseGraph k4 = tensor_product(k2, k2);
    CHECK(k4 == pseudo_clique(4));

    // A (x) single looped vertex = A.
    DenseGraph g5 = adjacency_graph(quadratic_graph(Modulus(5)));
    DenseGraph loop = pseudo_clique(1);
    CHECK(tensor_product(g5, loop) == g5);

    // G_5 (x) G_13 relabeled along the CRT map equals G_65.
    Modulus m65(65);
    DenseGraph g13 = adjacency_graph(quadratic_graph(Modulus(13)));
    DenseGraph prod = tensor_product(g5, g13);
    DenseGraph g65 = adjacency_graph(quadratic_graph(m65));
    for (int64_t a = 0; a < 65; ++a)
        for (int64_t b = 0; b < 65; ++b) {
            int64_t pa = (a % 5) * 13 + a % 13, pb = (b % 5) * 13 + b % 13;
            if (g65.at(a, b) != prod.at(pa, pb)) FAIL("edge mismatch at ", a, ",", b);
        }
}

TEST_CASE("full tensor decomposition") {
    TensorDecomposition d65 = full_tensor_decomposition(Modulus(65));
    CHECK(d65.split_factors == std::vector<int64_t>{5, 13});
    CHECK(d65.residual == 1);

    TensorDecomposition d21 = full_tensor_decomposition(Modulus(21));
    CHECK(d21.split_factors.empty());
    CHECK(d21.residual == 21);
    CHECK_FALSE(d21.residual_splits);
    CHECK(decomposition_summary(d21) == "G21(indecomposable)");

    TensorDecomposition d27 = full_tensor_decomposition(Modulus(27));
    CHECK(d27.residual == 27);
    CHECK(d27.residual_splits);
    REQUIRE(d27.refinements.size() == 1);
    CHECK(d27.refinements[0].base == 3);
    CHECK(d27.refinements[0].clique == 9);

    TensorDecomposition d6 = full_tensor_decomposition(Modulus(6));
    CHECK(d6.residual_splits); // 6 = 2 mod 4 with two non-1mod4 factors

    TensorDecomposition d32 = full_tensor_decomposition(Modulus(32));
    REQUIRE(d32.refinements.size() == 1);
    CHECK(d32.refinements[0].base == 8);
    CHECK(d32.refinements[0].clique == 4);
}

TEST_CASE("prime power refinements verified by edge comparison") {
    // G_{p^m} = G_p (x) K_{p^(m-1)}: difference adjacency depends on the
    // residue mod p only; same for 2^m with base 8.
    for (int64_t pm : {9, 27, 25, 49}) {
        Modulus m(pm);
        int64_t p = m.factors()[0].prime;
        CirculantGraph g = quadratic_graph(m);
        CirculantGraph gp = quadratic_graph(Modulus(p));
        for (int64_t a = 0; a < pm; ++a)
            for (int64_t b = 0; b < pm; ++b)
                CHECK(g.adjacent(a, b) == gp.adjacent(a % p, b % p));
    }
    for (int64_t pm : {16, 32, 64}) {
        CirculantGraph g = quadratic_graph(Modulus(pm));
        CirculantGraph g8 = quadratic_graph(Modulus(8));
        for (int64_t a = 0; a < pm; ++a)
            for (int64_t b = 0; b < pm; ++b)
                CHECK(g.adjacent(a, b) == g8.adjacent(a % 8, b % 8));
    }
}

TEST_CASE("diameter factor inequalities on coprime splits up to 1000") {
    std::vector<int> diam(1001, 0);
    for (int64_t n = 2; n <= 1000; ++n)
        diam[static_cast<std::size_t>(n)] = *bfs_eccentricity_zero(quadratic_graph(Modulus(n)));
    std::vector<int> udiam_cache(1001, -1);
    for (int64_t n = 5; n <= 1000; ++n)
        if (gcd64(n, 6) == 1)
            udiam_cache[static_cast<std::size_t>(n)] =
                *uniform_diameter(quadratic_digraph(Modulus(n)));
    for (int64_t mm = 2; mm <= 500; ++mm)
        for (int64_t nn = 2; mm * nn <= 1000; ++nn) {
            if (gcd64(mm, nn) != 1) continue;
            int d = diam[static_cast<std::size_t>(mm * nn)];
            CHECK(d >= std::max(diam[static_cast<std::size_t>(mm)],
                                diam[static_cast<std::size_t>(nn)]));
            if (gcd64(mm, 6) == 1) {
                int ud = udiam_cache[static_cast<std::size_t>(mm)];
                REQUIRE(ud >= 0);
                CHECK(d <= std::max(diam[static_cast<std::size_t>(nn)], ud + 1));
            }
        }
}

TEST_CASE("random edges map to random edges under the affine automorphism") {
    std::mt19937_64 rng(20240811);
    for (int64_t n : {13, 21, 40, 75}) {
        Modulus mod(n);
        CirculantGraph g = quadratic_graph(mod);
        auto pick_edge = [&]() {
            for (;;) {
                int64_t v = static_cast<int64_t>(rng() % n);
                int64_t w = static_cast<int64_t>(rng() % n);
                if (g.adjacent(v, w)) return std::pair<int64_t, int64_t>{v, w};
            }
        };
        for (int trial = 0; trial < 20; ++trial) {
            auto [v, w] = pick_edge();
            auto [vp, wp] = pick_edge();
            int64_t scale = mod.reduce((wp - vp) * mod_inverse(mod.reduce(w - v), n));
            auto f = [&](int64_t x) { return mod.reduce(scale * mod.reduce(x - v) + vp); };
            CHECK(f(v) == vp);
            CHECK(f(w) == wp);
            for (int64_t x = 0; x < n; ++x)
                for (int64_t y = 0; y < n; ++y)
                    if (g.adjacent(x, y) != g.adjacent(f(x), f(y)))
                        FAIL("automorphism fails at n=", n, " x=", x, " y=", y);
        }
    }
}

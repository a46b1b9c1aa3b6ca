#include "qucay/cayley.hpp"

#include <map>
#include <stdexcept>

namespace qucay {

CirculantGraph circulant_from_steps(const Modulus& mod, std::vector<Residue> steps,
                                    bool directed) {
    CirculantGraph g{mod, {}, {}, directed};
    g.step_mask.assign(static_cast<std::size_t>(mod.value()), 0);
    for (Residue s : steps) {
        Residue r = mod.reduce(s);
        if (r == 0) continue; // loopless
        if (!g.step_mask[static_cast<std::size_t>(r)]) {
            g.step_mask[static_cast<std::size_t>(r)] = 1;
            g.steps.push_back(r);
        }
    }
    std::sort(g.steps.begin(), g.steps.end());
    return g;
}

CirculantGraph quadratic_graph(const Modulus& mod) {
    return circulant_from_steps(mod, connection_set(mod), false);
}

CirculantGraph quadratic_digraph(const Modulus& mod) {
    return circulant_from_steps(mod, quadratic_units(mod), true);
}

std::optional<int> bfs_eccentricity_zero(const CirculantGraph& g) {
    const int64_t n = g.modulus.value();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[0] = 0;
    std::vector<int64_t> frontier{0};
    int64_t reached = 1;
    int level = 0;
    while (!frontier.empty()) {
        std::vector<int64_t> next;
        for (int64_t v : frontier)
            for (Residue s : g.steps) {
                int64_t w = v + s;
                if (w >= n) w -= n;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = level + 1;
                    next.push_back(w);
                    ++reached;
                }
            }
        if (!next.empty()) ++level;
        frontier = std::move(next);
    }
    if (reached != n) return std::nullopt;
    return level;
}

namespace {

bool is_prime_value(const Modulus& mod) {
    return mod.factors().size() == 1 && mod.factors()[0].exponent == 1;
}

// delta_3: n has a prime factor p > 3 with p = 3 mod 4.
bool has_large_3mod4_factor(const Modulus& mod) {
    for (const Factor& f : mod.factors())
        if (f.prime > 3 && f.prime % 4 == 3) return true;
    return false;
}

DiameterReport odd_diameter(const Modulus& mod) {
    DiameterReport rep;
    const int64_t n = mod.value();
    if (is_prime_value(mod)) {
        rep.formula_value = (n % 4 == 3) ? 1 : 2;
        rep.case_label = (n % 4 == 3) ? "odd-prime-3mod4" : "odd-prime-1mod4";
        return rep;
    }
    if (mod.factors().size() == 1) {
        rep.formula_value = 2;
        rep.case_label = "odd-prime-power";
        return rep;
    }
    int g3 = mod.divisible_by(3) ? 1 : 0;
    int d3 = has_large_3mod4_factor(mod) ? 1 : 0;
    int g5 = mod.divisible_by(5) ? 1 : 0;
    rep.formula_value = 2 + g3 * d3 + g5;
    rep.case_label = "odd-composite";
    return rep;
}

DiameterReport even_diameter(const Modulus& mod) {
    DiameterReport rep;
    const int64_t n = mod.value();
    const int d3 = has_large_3mod4_factor(mod) ? 1 : 0;
    if (n % 24 == 0) {
        rep.formula_value = 12;
        rep.case_label = "even-24k";
    } else if (n % 12 == 0 && (n / 12) % 2 == 1) {
        rep.formula_value = 6;
        rep.case_label = "even-odd-12k";
    } else if (n % 10 == 0 && n % 12 != 0) {
        rep.formula_value = 5;
        rep.case_label = "even-10k-not-12";
    } else if (n % 8 == 0 && gcd64(n / 8, 15) == 1) {
        rep.formula_value = 4;
        rep.case_label = "even-8k";
    } else if (n % 6 == 0 && gcd64(n / 6, 10) == 1) {
        rep.formula_value = 3 + d3;
        rep.case_label = "even-6k";
    } else if (n % 4 == 0 && n / 4 > 1 && gcd64(n / 4, 30) == 1) {
        rep.formula_value = 3 + d3;
        rep.case_label = "even-4k";
    } else if (n % 2 == 0 && n / 2 > 1 && gcd64(n / 2, 30) == 1) {
        rep.formula_value = 3;
        rep.case_label = "even-2k";
    } else if (n == 4) {
        rep.formula_value = 2;
        rep.case_label = "even-4";
    } else if (n == 2) {
        rep.formula_value = 1;
        rep.case_label = "even-2";
    } else {
        throw std::logic_error("even diameter clauses did not cover n = " + std::to_string(n));
    }
    return rep;
}

} // namespace

DiameterReport diameter_formula(const Modulus& mod) {
    if (mod.value() == 1) return DiameterReport{0, "trivial-1", {}};
    return (mod.value() % 2 == 1) ? odd_diameter(mod) : even_diameter(mod);
}

DiameterReport diameter_report(const Modulus& mod) {
    DiameterReport rep = diameter_formula(mod);
    std::optional<int> bfs = bfs_eccentricity_zero(quadratic_graph(mod));
    if (!bfs.has_value())
        throw std::logic_error("diameter_report: G_" + std::to_string(mod.value()) +
                               " is disconnected");
    rep.bfs_value = bfs;
    if (*bfs != rep.formula_value)
        throw std::logic_error("diameter_report: formula " + std::to_string(rep.formula_value) +
                               " disagrees with BFS " + std::to_string(*bfs) + " at n = " +
                               std::to_string(mod.value()));
    return rep;
}

std::optional<int> uniform_diameter(const CirculantGraph& gamma) {
    const int64_t n = gamma.modulus.value();
    std::vector<uint8_t> reach(static_cast<std::size_t>(n), 0);
    reach[0] = 1;
    int64_t covered = 1;
    if (covered == n) return 0;
    std::map<std::vector<uint8_t>, int> seen;
    seen[reach] = 0;
    for (int k = 1; k <= 2 * n; ++k) {
        std::vector<uint8_t> next(static_cast<std::size_t>(n), 0);
        covered = 0;
        for (int64_t v = 0; v < n; ++v) {
            if (!reach[static_cast<std::size_t>(v)]) continue;
            for (Residue s : gamma.steps) {
                int64_t w = v + s;
                if (w >= n) w -= n;
                if (!next[static_cast<std::size_t>(w)]) {
                    next[static_cast<std::size_t>(w)] = 1;
                    ++covered;
                }
            }
        }
        if (covered == n) return k;
        reach = std::move(next);
        if (!seen.emplace(reach, k).second) return std::nullopt; // state revisited
    }
    return std::nullopt;
}

bool tensor_factorizes(const Modulus& m_mod, const Modulus& n_mod) {
    if (gcd64(m_mod.value(), n_mod.value()) != 1)
        throw std::invalid_argument("tensor_factorizes: factors must be coprime");
    return minus_one_is_quadratic(m_mod) || minus_one_is_quadratic(n_mod);
}

DenseGraph adjacency_graph(const CirculantGraph& g) {
    const int64_t n = g.modulus.value();
    DenseGraph d;
    d.n = n;
    d.adj.assign(static_cast<std::size_t>(n * n), 0);
    for (int64_t a = 0; a < n; ++a)
        for (Residue s : g.steps) {
            int64_t b = a + s;
            if (b >= n) b -= n;
            d.set(a, b, true);
        }
    return d;
}

DenseGraph pseudo_clique(int64_t m) {
    DenseGraph d;
    d.n = m;
    d.adj.assign(static_cast<std::size_t>(m * m), 1);
    return d;
}

DenseGraph tensor_product(const DenseGraph& a, const DenseGraph& b) {
    DenseGraph d;
    d.n = a.n * b.n;
    d.adj.assign(static_cast<std::size_t>(d.n * d.n), 0);
    for (int64_t u = 0; u < a.n; ++u)
        for (int64_t v = 0; v < a.n; ++v) {
            if (!a.at(u, v)) continue;
            for (int64_t x = 0; x < b.n; ++x)
                for (int64_t y = 0; y < b.n; ++y)
                    if (b.at(x, y)) d.set(u * b.n + x, v * b.n + y, true);
        }
    return d;
}

TensorDecomposition full_tensor_decomposition(const Modulus& mod) {
    TensorDecomposition dec;
    std::vector<Factor> residual_factors;
    for (const Factor& f : mod.factors()) {
        if (f.prime % 4 == 1)
            dec.split_factors.push_back(f.power);
        else {
            dec.residual *= f.power;
            residual_factors.push_back(f);
        }
    }
    // Residual splits iff at most one factor remains, or exactly two with a
    // single factor of 2 (n = 2 mod 4).
    if (residual_factors.size() <= 1) {
        dec.residual_splits = true;
    } else if (residual_factors.size() == 2 && residual_factors[0].prime == 2 &&
               residual_factors[0].exponent == 1) {
        dec.residual_splits = true;
    }
    if (dec.residual_splits)
        for (const Factor& f : residual_factors) dec.residual_factors.push_back(f.power);

    for (const Factor& f : mod.factors()) {
        if (f.prime == 2 && f.exponent >= 4)
            dec.refinements.push_back({8, f.power / 8});
        else if (f.prime != 2 && f.exponent >= 2)
            dec.refinements.push_back({f.prime, f.power / f.prime});
    }
    return dec;
}

std::string decomposition_summary(const TensorDecomposition& d) {
    std::string out;
    for (int64_t f : d.split_factors) {
        if (!out.empty()) out += "x";
        out += "G" + std::to_string(f);
    }
    if (d.residual > 1) {
        if (d.residual_splits) {
            for (int64_t f : d.residual_factors) {
                if (!out.empty()) out += "x";
                out += "G" + std::to_string(f);
            }
        } else {
            if (!out.empty()) out += "x";
            out += "G" + std::to_string(d.residual) + "(indecomposable)";
        }
    }
    if (out.empty()) out = "G1";
    return out;
}

} // namespace qucay

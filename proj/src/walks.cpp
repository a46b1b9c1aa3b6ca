#include "qucay/walks.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qucay {

std::vector<Residue> step_set(const Modulus& mod, StepSetKind kind) {
    if (kind == StepSetKind::QuadraticUnits) return quadratic_units(mod);
    const int64_t n = mod.value();
    if (n == 1) return {0};
    std::vector<Residue> units;
    for (int64_t u = 1; u < n; ++u)
        if (gcd64(u, n) == 1) units.push_back(u);
    return units;
}

Residue SignedWalk::evaluate() const {
    int64_t acc = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        acc = (acc + signs[i] * steps[i]) % n;
        if (acc < 0) acc += n;
    }
    return acc;
}

std::string SignedWalk::render() const {
    std::string out = std::to_string(target) + " =";
    if (steps.empty()) out += " (empty walk)";
    for (std::size_t i = 0; i < steps.size(); ++i)
        out += std::string(" ") + (signs[i] > 0 ? "+" : "-") + std::to_string(steps[i]);
    out += " (mod " + std::to_string(n) + ")";
    return out;
}

std::vector<std::vector<uint8_t>> signed_reach_layers(const Modulus& mod,
                                                      const std::vector<int>& signs,
                                                      StepSetKind kind) {
    const int64_t n = mod.value();
    std::vector<Residue> steps = step_set(mod, kind);
    std::vector<std::vector<uint8_t>> layers;
    layers.reserve(signs.size() + 1);
    std::vector<uint8_t> cur(static_cast<std::size_t>(n), 0);
    cur[0] = 1;
    layers.push_back(cur);
    for (int s : signs) {
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
        std::vector<uint8_t> next(static_cast<std::size_t>(n), 0);
        for (int64_t v = 0; v < n; ++v) {
            if (!cur[static_cast<std::size_t>(v)]) continue;
            for (Residue u : steps) {
                int64_t w = (v + s * u) % n;
                if (w < 0) w += n;
                next[static_cast<std::size_t>(w)] = 1;
            }
        }
        layers.push_back(next);
        cur = std::move(next);
    }
    return layers;
}

namespace {

// BFS distances from 0 over moves v -> v +- u, cached per (n, kind): the
// walk engines are called many times per modulus during symplectic
// reductions. The cache is behind a mutex; results are immutable.
struct WalkTables {
    std::vector<Residue> steps;
    std::vector<int> dist;
};

const WalkTables& walk_tables(const Modulus& mod, StepSetKind kind) {
    static std::mutex mu;
    static std::map<std::pair<int64_t, int>, std::unique_ptr<WalkTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(mod.value(), static_cast<int>(kind));
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    const int64_t n = mod.value();
    auto t = std::make_unique<WalkTables>();
    t->steps = step_set(mod, kind);
    t->dist.assign(static_cast<std::size_t>(n), -1);
    t->dist[0] = 0;
    std::vector<int64_t> frontier{0};
    int level = 0;
    while (!frontier.empty()) {
        std::vector<int64_t> next;
        for (int64_t v : frontier)
            for (Residue u : t->steps)
                for (int s : {1, -1}) {
                    int64_t x = (v + s * u) % n;
                    if (x < 0) x += n;
                    if (t->dist[static_cast<std::size_t>(x)] < 0) {
                        t->dist[static_cast<std::size_t>(x)] = level + 1;
                        next.push_back(x);
                    }
                }
        ++level;
        frontier = std::move(next);
    }
    return *cache.emplace(key, std::move(t)).first->second;
}

} // namespace

std::optional<SignedWalk> min_signed_walk(const Modulus& mod, Residue r, StepSetKind kind) {
    const int64_t n = mod.value();
    SignedWalk w;
    w.n = n;
    w.target = mod.reduce(r);
    w.kind = kind;
    if (w.target == 0) return w;

    // The move set is symmetric, so dist(v, r) = dist(0, r - v).
    const WalkTables& tables = walk_tables(mod, kind);
    const std::vector<Residue>& steps = tables.steps;
    const std::vector<int>& dist = tables.dist;
    int total = dist[static_cast<std::size_t>(w.target)];
    if (total < 0) return std::nullopt;

    int64_t v = 0;
    for (int k = total; k > 0; --k) {
        bool took = false;
        for (Residue u : steps) {
            for (int s : {1, -1}) {
                int64_t rem = (w.target - v - s * u) % n;
                if (rem < 0) rem += n;
                if (dist[static_cast<std::size_t>(rem)] == k - 1) {
                    w.steps.push_back(u);
                    w.signs.push_back(s);
                    v = (v + s * u) % n;
                    if (v < 0) v += n;
                    took = true;
                    break;
                }
            }
            if (took) break;
        }
        if (!took) throw std::logic_error("min_signed_walk: reconstruction failed");
    }
    return w;
}

std::optional<SignedWalk> walk_with_signs(const Modulus& mod, Residue r,
                                          const std::vector<int>& signs, StepSetKind kind) {
    const int64_t n = mod.value();
    const Residue target = mod.reduce(r);
    auto layers = signed_reach_layers(mod, signs, kind);
    if (!layers.back()[static_cast<std::size_t>(target)]) return std::nullopt;

    SignedWalk w;
    w.n = n;
    w.target = target;
    w.kind = kind;
    w.signs = signs;
    w.steps.assign(signs.size(), 0);
    std::vector<Residue> steps = step_set(mod, kind);
    int64_t v = target;
    for (std::size_t k = signs.size(); k > 0; --k) {
        bool took = false;
        for (Residue u : steps) {
            int64_t prev = (v - signs[k - 1] * u) % n;
            if (prev < 0) prev += n;
            if (layers[k - 1][static_cast<std::size_t>(prev)]) {
                w.steps[k - 1] = u;
                v = prev;
                took = true;
                break;
            }
        }
        if (!took) throw std::logic_error("walk_with_signs: reconstruction failed");
    }
    return w;
}

SignedWalk pad_closed_walk(const SignedWalk& w, int extra) {
    if (extra < 0 || extra % 2 != 0)
        throw std::invalid_argument("pad_closed_walk: extra length must be even and >= 0");
    SignedWalk out = w;
    Modulus mod(w.n);
    std::vector<Residue> steps = step_set(mod, w.kind);
    Residue u = steps.front();
    for (int i = 0; i < extra / 2; ++i) {
        out.steps.push_back(u);
        out.signs.push_back(1);
        out.steps.push_back(u);
        out.signs.push_back(-1);
    }
    return out;
}

} // namespace qucay

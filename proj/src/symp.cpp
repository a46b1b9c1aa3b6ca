#include "qucay/symp.hpp"

#include "qucay/walks.hpp"

#include <json.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

namespace qucay {

namespace {

int64_t canon(int64_t x, int64_t n) {
    int64_t r = x % n;
    return r < 0 ? r + n : r;
}

int64_t gcd3(int64_t x, int64_t y, int64_t n) { return gcd64(gcd64(x, y), n); }

} // namespace

SympMatrix SympMatrix::identity(int m, int64_t n) {
    SympMatrix s = zero(m, n);
    for (int i = 0; i < 2 * m; ++i) s.at(i, i) = canon(1, n);
    return s;
}

SympMatrix SympMatrix::zero(int m, int64_t n) {
    SympMatrix s;
    s.m = m;
    s.n = n;
    s.a.assign(static_cast<std::size_t>(4 * m * m), 0);
    return s;
}

SympMatrix matmul(const SympMatrix& x, const SympMatrix& y) {
    if (x.m != y.m || x.n != y.n) throw std::invalid_argument("matmul: shape mismatch");
    const int d = x.dim();
    SympMatrix z = SympMatrix::zero(x.m, x.n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int64_t acc = 0;
            for (int k = 0; k < d; ++k) acc = (acc + x.at(i, k) * y.at(k, j)) % x.n;
            z.at(i, j) = acc;
        }
    return z;
}

SympMatrix symplectic_form(int m, int64_t n) {
    if (m < 1) throw std::invalid_argument("symplectic_form: m must be >= 1");
    SympMatrix s = SympMatrix::zero(m, n);
    for (int i = 0; i < m; ++i) {
        s.at(i, m + i) = canon(-1, n);
        s.at(m + i, i) = canon(1, n);
    }
    return s;
}

bool is_symplectic(const SympMatrix& s) {
    const int d = s.dim();
    if (static_cast<int>(s.a.size()) != d * d)
        throw std::invalid_argument("is_symplectic: entry count does not match 2m x 2m");
    SympMatrix st = SympMatrix::zero(s.m, s.n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) st.at(i, j) = s.at(j, i);
    SympMatrix sigma = symplectic_form(s.m, s.n);
    return matmul(matmul(st, sigma), s) == sigma;
}

namespace {

// In-place row primitives; operators act by left multiplication.
void scale_row(SympMatrix& s, int j, int64_t alpha) {
    for (int c = 0; c < s.dim(); ++c) s.at(j, c) = canon(s.at(j, c) * alpha, s.n);
}

void swap_rows(SympMatrix& s, int j, int k) {
    for (int c = 0; c < s.dim(); ++c) std::swap(s.at(j, c), s.at(k, c));
}

void add_row(SympMatrix& s, int src, int dst, int64_t coef) {
    for (int c = 0; c < s.dim(); ++c)
        s.at(dst, c) = canon(s.at(dst, c) + coef * s.at(src, c), s.n);
}

int mate(int j, int m) { return (j + m) % (2 * m); }

bool is_mate_pair(int j, int k, int m) { return mate(j, m) == k; }

bool same_half(int j, int k, int m) { return (j < m) == (k < m); }

void validate_op(const RowOp& op, int m, int64_t n) {
    const int d = 2 * m;
    if (op.j < 0 || op.j >= d) throw std::invalid_argument("row op: index j out of range");
    if (op.kind != RowOp::Kind::Scale && (op.k < 0 || op.k >= d || op.k == op.j))
        throw std::invalid_argument("row op: index k out of range or equal to j");
    if (op.kind == RowOp::Kind::Scale && n > 1 && gcd64(canon(op.alpha, n), n) != 1)
        throw std::invalid_argument("row op: scale coefficient must be a unit");
    if (op.kind == RowOp::Kind::Add && op.exponent != 1 && op.exponent != -1)
        throw std::invalid_argument("row op: add exponent must be +1 or -1");
    // The double swap eps_{j,k} eps_{j+m,k+m} carries a basis pair onto a
    // reversed one when j and k sit in different halves without being mates,
    // which negates the form. Only mate and same-half swaps are symplectic.
    if (op.kind == RowOp::Kind::Swap && !is_mate_pair(op.j, op.k, m) &&
        !same_half(op.j, op.k, m))
        throw std::invalid_argument("row op: swap needs a mate pair or a same-half pair");
}

} // namespace

SympMatrix apply(const RowOp& op, const SympMatrix& s) {
    const int m = s.m;
    const int64_t n = s.n;
    validate_op(op, m, n);
    SympMatrix out = s;
    switch (op.kind) {
        case RowOp::Kind::Scale: {
            int64_t alpha = canon(op.alpha, n);
            scale_row(out, op.j, alpha);
            scale_row(out, mate(op.j, m), n == 1 ? 0 : mod_inverse(alpha, n));
            break;
        }
        case RowOp::Kind::Swap: {
            if (is_mate_pair(op.j, op.k, m)) {
                scale_row(out, op.k, canon(-1, n)); // mu_k^{-1} acts first
                swap_rows(out, op.j, op.k);
            } else {
                swap_rows(out, op.j, op.k);
                swap_rows(out, mate(op.j, m), mate(op.k, m));
            }
            break;
        }
        case RowOp::Kind::Add: {
            int64_t e = op.exponent;
            add_row(out, op.j, op.k, canon(e, n));
            if (is_mate_pair(op.j, op.k, m)) break; // plain chi
            if (same_half(op.j, op.k, m))
                add_row(out, mate(op.k, m), mate(op.j, m), canon(-e, n));
            else
                add_row(out, mate(op.k, m), mate(op.j, m), canon(e, n));
            break;
        }
    }
    return out;
}

SympMatrix rowop_matrix(const RowOp& op, int m, int64_t n) {
    return apply(op, SympMatrix::identity(m, n));
}

SympMatrix replay(const OpProgram& prog, SympMatrix s) {
    for (const RowOp& op : prog.ops) s = apply(op, s);
    return s;
}

SympMatrix program_matrix(const OpProgram& prog) {
    return replay(prog, SympMatrix::identity(prog.m, prog.n));
}

OpProgram inverted_program(const OpProgram& prog) {
    OpProgram inv;
    inv.m = prog.m;
    inv.n = prog.n;
    for (auto it = prog.ops.rbegin(); it != prog.ops.rend(); ++it) {
        RowOp op = *it;
        switch (op.kind) {
            case RowOp::Kind::Scale:
                op.alpha = prog.n == 1 ? 0 : mod_inverse(canon(op.alpha, prog.n), prog.n);
                break;
            case RowOp::Kind::Swap:
                // The mate-pair swap has order four; its inverse is the swap
                // with the indices exchanged. The plain double swap is an
                // involution.
                if (is_mate_pair(op.j, op.k, prog.m)) std::swap(op.j, op.k);
                break;
            case RowOp::Kind::Add:
                op.exponent = -op.exponent;
                break;
        }
        inv.ops.push_back(op);
    }
    return inv;
}

BezoutCertificate bezout_unit(int64_t x, int64_t n) {
    if (n < 1) throw std::invalid_argument("bezout_unit: modulus must be positive");
    BezoutCertificate cert;
    cert.n = n;
    cert.x = canon(x, n);
    if (n == 1) {
        cert.a = 0;
        cert.gamma = 0;
        return cert;
    }
    if (cert.x == 0) {
        cert.a = 1;
        cert.gamma = 0; // gcd(0, n) = n = 0 (mod n)
        return cert;
    }
    const int64_t g = gcd64(cert.x, n);
    const int64_t q = n / g;
    int64_t a = (q == 1) ? 1 : mod_inverse((cert.x / g) % q, q);
    // Lift to a unit mod n; some a + t*q with t < g is coprime to n because
    // every prime of n missing from q divides g.
    while (gcd64(a, n) != 1) a += q;
    cert.a = canon(a, n);
    cert.gamma = canon(g, n);
    return cert;
}

namespace {

int64_t valuation(int64_t x, int64_t p) {
    int v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Extended Euclid over the integers: returns (g, a, b) with a*x + b*y = g.
struct Eea {
    int64_t g, a, b;
};
Eea ext_gcd(int64_t x, int64_t y) {
    if (y == 0) return {x, 1, 0};
    Eea e = ext_gcd(y, x % y);
    return {e.g, e.b, e.a - (x / y) * e.b};
}

} // namespace

std::optional<BezoutCertificate> bezout_unit_pair(int64_t x, int64_t y, int64_t n) {
    if (n < 1) throw std::invalid_argument("bezout_unit_pair: modulus must be positive");
    BezoutCertificate cert;
    cert.n = n;
    cert.ternary = true;
    cert.x = canon(x, n);
    cert.y = canon(y, n);
    if (n == 1) {
        cert.a = cert.b = 0;
        cert.gamma = 0;
        return cert;
    }

    const int64_t xp = cert.x == 0 ? n : gcd64(cert.x, n);
    const int64_t yp = cert.y == 0 ? n : gcd64(cert.y, n);
    const int64_t gamma = gcd64(xp, yp); // = gcd(x, y, n), in [1, n]
    const int64_t xb = xp / gamma, yb = yp / gamma;

    // Unit multipliers x = u_x * x', y = u_y * y' (mod n).
    const int64_t ux_inv = bezout_unit(cert.x, n).a; // u_x^{-1}
    const int64_t uy_inv = bezout_unit(cert.y, n).a;

    auto finish = [&](int64_t alpha, int64_t beta) -> BezoutCertificate {
        cert.a = canon(ux_inv * canon(alpha, n), n);
        cert.b = canon(uy_inv * canon(beta, n), n);
        cert.gamma = canon(gamma, n);
        if (canon(cert.a * cert.x + cert.b * cert.y, n) != cert.gamma)
            throw std::logic_error("bezout_unit_pair: certificate check failed");
        return cert;
    };

    if (gamma == n) return finish(1, 1); // x = y = 0 (mod n)

    // Proof construction: a*xb + b*yb = 1, then the four-case correction h.
    // n partitions as Nx * Ny * Nn by whether a prime divides xb, yb, or
    // neither (xb and yb are coprime).
    Modulus mod(n);
    Eea e = ext_gcd(xb, yb);
    int64_t nx = 1, ny = 1;
    for (const Factor& f : mod.factors()) {
        if (xb % f.prime == 0) nx *= f.power;
        else if (yb % f.prime == 0) ny *= f.power;
    }
    const int64_t nn = n / (nx * ny);
    const int64_t ga = gcd64(e.a, nx * nn);
    const int64_t gb = gcd64(e.b, ny * nn);
    int64_t h;
    if (ga == 1 && gb == 1) h = 0;
    else if (ga > 1 && gb == 1) h = ny;
    else if (ga == 1 && gb > 1) h = nx;
    else h = 1;
    int64_t alpha = e.a + h * yb, beta = e.b - h * xb;
    if (gcd64(canon(alpha, n), n) == 1 && gcd64(canon(beta, n), n) == 1)
        return finish(alpha, beta);

    // The h table misses some inputs; rebuild alpha, beta prime by prime.
    // Locally at p^e | n, writing E = v_p(n/gamma):
    //   E = 0  : both coefficients free units
    //   p | xb : alpha free, beta = (1 - alpha*xb)/yb, automatically a unit
    //   p | yb : symmetric
    //   else   : beta a unit iff alpha != xb^{-1} (mod p); impossible at
    //            p = 2 (xb, yb both odd), the infeasible family.
    const int64_t nq = n / gamma;
    CrtVector av, bv;
    for (const Factor& f : mod.factors()) {
        const int64_t pe = f.power;
        int64_t ap, bp;
        if (valuation(nq, f.prime) == 0) {
            ap = bp = 1;
        } else if (xb % f.prime == 0) {
            ap = 1;
            bp = canon(canon(1 - xb, pe) * mod_inverse(canon(yb, pe), pe), pe);
        } else if (yb % f.prime == 0) {
            bp = 1;
            ap = canon(canon(1 - yb, pe) * mod_inverse(canon(xb, pe), pe), pe);
        } else {
            ap = -1;
            for (int64_t cand = 1; cand < f.prime; ++cand) {
                if ((1 - cand * xb) % f.prime != 0) {
                    ap = cand;
                    break;
                }
            }
            if (ap < 0) return std::nullopt; // p = 2 with xb, yb both odd
            bp = canon(canon(1 - ap * canon(xb, pe), pe) * mod_inverse(canon(yb, pe), pe), pe);
        }
        av.components.push_back(ap);
        bv.components.push_back(bp);
    }
    alpha = crt_combine(mod, av);
    beta = crt_combine(mod, bv);
    if (gcd64(canon(alpha, n), n) != 1 || gcd64(canon(beta, n), n) != 1)
        throw std::logic_error("bezout_unit_pair: reconstruction produced non-units");
    return finish(alpha, beta);
}

GcdStep unit_gcd_step(int64_t x, int64_t y, int64_t n) {
    const int64_t x0 = canon(x, n), y0 = canon(y, n);
    if (n == 1) return {0, 0};
    const int64_t gamma = (x0 == 0 && y0 == 0) ? n : gcd3(x0 == 0 ? n : x0, y0 == 0 ? n : y0, n);
    auto generates = [&](int64_t g) {
        return (g == 0 ? n : gcd64(g, n)) == gamma;
    };
    if (generates(y0)) return {0, y0}; // already there, no op needed
    if (auto cert = bezout_unit_pair(x0, y0, n)) {
        int64_t binv = mod_inverse(cert->b, n);
        int64_t r = canon(binv * cert->a, n);
        int64_t g = canon(y0 + r * x0, n);
        if (generates(g)) return {r, g};
    }
    for (int64_t r = 1; r < n; ++r) {
        int64_t g = canon(y0 + r * x0, n);
        if (generates(g)) return {r, g};
    }
    throw std::logic_error("unit_gcd_step: no coefficient found");
}

namespace {

// Interleaved program for C_{j,k}^alpha from a signed decomposition of alpha
// into scale coefficients a_i: the product telescopes to the single power.
// Emitted in application order: M^{a_1}, C^{s_1}, M^{a_1^{-1} a_2}, C^{s_2},
// ..., C^{s_l}, M^{a_l^{-1}}.
void emit_interleaved(OpProgram& prog, int j, int k, const std::vector<int64_t>& coeffs,
                      const std::vector<int>& signs, int64_t n) {
    auto push_scale = [&](int64_t alpha) {
        int64_t a = canon(alpha, n);
        if (a != canon(1, n)) prog.ops.push_back({RowOp::Kind::Scale, j, 0, a, 1});
    };
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i == 0) push_scale(coeffs[0]);
        else push_scale(canon(mod_inverse(coeffs[i - 1], n) * coeffs[i], n));
        prog.ops.push_back({RowOp::Kind::Add, j, k, 1, signs[i]});
    }
    push_scale(mod_inverse(coeffs.back(), n));
}

} // namespace

OpProgram expand_c_power(int j, int k, int64_t alpha, int m, int64_t n) {
    OpProgram prog;
    prog.m = m;
    prog.n = n;
    if (j == k || j < 0 || k < 0 || j >= 2 * m || k >= 2 * m)
        throw std::invalid_argument("expand_c_power: bad indices");
    const int64_t a0 = canon(alpha, n);
    if (a0 == 0 || n == 1) return prog;
    if (a0 == 1) {
        prog.ops.push_back({RowOp::Kind::Add, j, k, 1, 1});
        return prog;
    }
    Modulus mod(n);
    const bool mate_case = is_mate_pair(j, k, m);
    if (mate_case) {
        if (is_quadratic_unit(mod, a0)) {
            int64_t u = sqrt_in_units(mod, a0);
            emit_interleaved(prog, j, k, {u}, {1}, n);
            return prog;
        }
        auto walk = min_signed_walk(mod, a0, StepSetKind::QuadraticUnits);
        if (!walk) throw std::logic_error("expand_c_power: unreachable exponent");
        std::vector<int64_t> coeffs;
        coeffs.reserve(walk->steps.size());
        for (Residue u : walk->steps) coeffs.push_back(sqrt_in_units(mod, u));
        emit_interleaved(prog, j, k, coeffs, walk->signs, n);
        return prog;
    }
    if (gcd64(a0, n) == 1) {
        emit_interleaved(prog, j, k, {a0}, {1}, n);
        return prog;
    }
    auto walk = min_signed_walk(mod, a0, StepSetKind::AllUnits);
    if (!walk) throw std::logic_error("expand_c_power: unreachable exponent");
    emit_interleaved(prog, j, k, walk->steps, walk->signs, n);
    return prog;
}

namespace {

struct Reducer {
    SympMatrix s;
    OpProgram prog;

    void run_c_power(int j, int k, int64_t alpha) {
        OpProgram sub = expand_c_power(j, k, alpha, s.m, s.n);
        for (const RowOp& op : sub.ops) {
            s = apply(op, s);
            prog.ops.push_back(op);
        }
    }

    void run_scale(int j, int64_t alpha) {
        if (canon(alpha, s.n) == canon(1, s.n)) return;
        RowOp op{RowOp::Kind::Scale, j, 0, canon(alpha, s.n), 1};
        s = apply(op, s);
        prog.ops.push_back(op);
    }

    // Merge the pair (src, dst) of `col`: dst ends with a unit multiple of
    // gcd(src, dst, n), src is cleared.
    void merge_pair(int src, int dst, int col) {
        const int64_t n = s.n;
        int64_t x = s.at(src, col), y = s.at(dst, col);
        if (x == 0 && y == 0) return;
        GcdStep step = unit_gcd_step(x, y, n);
        run_c_power(src, dst, step.r);
        int64_t g = s.at(dst, col);
        if (g != step.g) throw std::logic_error("reduce: gcd step mismatch");
        // Clear src: d*g = src entry (mod n).
        int64_t x_now = s.at(src, col);
        if (x_now != 0) {
            const int64_t gamma = gcd64(g == 0 ? n : g, n);
            const int64_t q = n / gamma;
            int64_t d = (q == 1)
                            ? 0
                            : canon((x_now / gamma) % q * mod_inverse((g / gamma) % q, q), q);
            run_c_power(dst, src, canon(-d, n));
            if (s.at(src, col) != 0) throw std::logic_error("reduce: clear step failed");
        }
    }
};

} // namespace

std::pair<SympMatrix, OpProgram> reduce_column_pair(const SympMatrix& s, int k) {
    const int m = s.m;
    const int64_t n = s.n;
    if (k < 0 || k >= m) throw std::invalid_argument("reduce_column_pair: bad column index");
    Reducer red{s, {m, n, {}}};
    if (n == 1) return {red.s, red.prog};
    const int ck = k, cmk = m + k;

    // Column k+m: gcds into the bottom rows, mate pair by mate pair, then a
    // staircase through the bottom rows into row m+k, then normalize.
    for (int j = 0; j <= k; ++j) red.merge_pair(j, j + m, cmk);
    for (int j = m; j < m + k; ++j) red.merge_pair(j, j + 1, cmk);
    int64_t pivot = red.s.at(m + k, cmk);
    if (gcd64(pivot == 0 ? n : pivot, n) != 1)
        throw std::logic_error("reduce_column_pair: column gcd is not a unit");
    red.run_scale(m + k, mod_inverse(pivot, n));
    for (int r = 0; r < 2 * m; ++r)
        if (red.s.at(r, cmk) != (r == m + k ? 1 : 0))
            throw std::logic_error("reduce_column_pair: column k+m not standard");

    // Column k: the (k, k) entry is already 1 by the symplectic relation
    // with the cleared column. Clear the mate pairs below, then staircase the
    // tops into row k-1 and absorb against the pivot.
    if (red.s.at(k, ck) != 1)
        throw std::logic_error("reduce_column_pair: pivot is not 1");
    for (int j = 0; j < k; ++j) red.merge_pair(j + m, j, ck); // gcd to the top row
    red.run_c_power(k, k + m, canon(-red.s.at(k + m, ck), n));
    for (int j = 0; j < k; ++j) {
        // Bottom residue of the pair was cleared by merge_pair already.
        if (red.s.at(j + m, ck) != 0)
            throw std::logic_error("reduce_column_pair: bottom of column k not cleared");
    }
    for (int j = 0; j + 1 < k; ++j) red.merge_pair(j, j + 1, ck);
    if (k >= 1) red.run_c_power(k, k - 1, canon(-red.s.at(k - 1, ck), n));
    for (int r = 0; r < 2 * m; ++r)
        if (red.s.at(r, ck) != (r == k ? 1 : 0))
            throw std::logic_error("reduce_column_pair: column k not standard");
    return {red.s, red.prog};
}

OpProgram decompose(const SympMatrix& s) {
    if (!is_symplectic(s)) throw std::invalid_argument("decompose: input is not symplectic");
    OpProgram prog;
    prog.m = s.m;
    prog.n = s.n;
    SympMatrix work = s;
    if (s.n == 1) return prog;
    for (int k = s.m - 1; k >= 0; --k) {
        auto [next, stage] = reduce_column_pair(work, k);
        work = std::move(next);
        prog.ops.insert(prog.ops.end(), stage.ops.begin(), stage.ops.end());
    }
    if (!(work == SympMatrix::identity(s.m, s.n)))
        throw std::logic_error("decompose: reduction did not reach the identity");
    if (static_cast<int64_t>(prog.ops.size()) >
        static_cast<int64_t>(kDecomposeOpBound) * s.m * s.m)
        throw std::logic_error("decompose: operation budget exceeded");
    return prog;
}

SympMatrix random_symplectic(int m, int64_t n, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    SympMatrix s = SympMatrix::identity(m, n);
    auto rand_index = [&]() { return static_cast<int>(rng() % static_cast<uint64_t>(2 * m)); };
    auto rand_unit = [&]() -> int64_t {
        if (n == 1) return 0;
        for (;;) {
            int64_t r = static_cast<int64_t>(rng() % static_cast<uint64_t>(n));
            if (gcd64(r, n) == 1) return r;
        }
    };
    for (int i = 0; i < count; ++i) {
        RowOp op;
        switch (rng() % 3) {
            case 0:
                op = {RowOp::Kind::Scale, rand_index(), 0, rand_unit(), 1};
                break;
            case 1: {
                int j = rand_index(), k = j;
                while (k == j || (!is_mate_pair(j, k, m) && !same_half(j, k, m)))
                    k = rand_index();
                op = {RowOp::Kind::Swap, j, k, 1, 1};
                break;
            }
            default: {
                int j = rand_index(), k = j;
                while (k == j) k = rand_index();
                op = {RowOp::Kind::Add, j, k, 1, (rng() % 2) ? 1 : -1};
                break;
            }
        }
        s = apply(op, s);
    }
    return s;
}

std::string to_ops_text(const OpProgram& prog) {
    std::ostringstream out;
    for (const RowOp& op : prog.ops) {
        switch (op.kind) {
            case RowOp::Kind::Scale:
                out << "M " << op.j + 1 << " " << op.alpha << "\n";
                break;
            case RowOp::Kind::Swap:
                out << "E " << op.j + 1 << " " << op.k + 1 << "\n";
                break;
            case RowOp::Kind::Add:
                out << "C " << op.j + 1 << " " << op.k + 1 << " " << (op.exponent > 0 ? "+1" : "-1")
                    << "\n";
                break;
        }
    }
    return out.str();
}

OpProgram parse_ops_text(const std::string& text, int m, int64_t n) {
    OpProgram prog;
    prog.m = m;
    prog.n = n;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        RowOp op;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("ops line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "M") {
            long long j, alpha;
            if (!(ls >> j >> alpha)) fail("expected: M <j> <alpha>");
            op = {RowOp::Kind::Scale, static_cast<int>(j - 1), 0, alpha, 1};
        } else if (tag == "E") {
            long long j, k;
            if (!(ls >> j >> k)) fail("expected: E <j> <k>");
            op = {RowOp::Kind::Swap, static_cast<int>(j - 1), static_cast<int>(k - 1), 1, 1};
        } else if (tag == "C") {
            long long j, k, e;
            if (!(ls >> j >> k >> e)) fail("expected: C <j> <k> <+1|-1>");
            op = {RowOp::Kind::Add, static_cast<int>(j - 1), static_cast<int>(k - 1), 1,
                  static_cast<int>(e)};
        } else {
            fail("unknown op tag '" + tag + "'");
            continue;
        }
        validate_op(op, m, n); // throws with index details
        prog.ops.push_back(op);
    }
    return prog;
}

std::string to_matrix_json(const SympMatrix& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["m"] = s.m;
    auto rows = nlohmann::json::array();
    for (int r = 0; r < s.dim(); ++r) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < s.dim(); ++c) row.push_back(s.at(r, c));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

SympMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SympMatrix s;
    s.n = j.at("n").get<int64_t>();
    s.m = j.at("m").get<int>();
    if (s.n < 1 || s.m < 1) throw std::invalid_argument("matrix json: need n >= 1, m >= 1");
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != 2 * s.m)
        throw std::invalid_argument("matrix json: expected 2m rows");
    s.a.reserve(static_cast<std::size_t>(4 * s.m * s.m));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != 2 * s.m)
            throw std::invalid_argument("matrix json: expected 2m entries per row");
        for (const auto& e : row) s.a.push_back(canon(e.get<int64_t>(), s.n));
    }
    return s;
}

} // namespace qucay

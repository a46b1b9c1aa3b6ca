// qucay - quadratic unitary Cayley graph toolkit.
//
// Subcommands: info, sweep, counts, walk, hole, export-dot, and the
// symplectic group {decompose, verify, random}. Exit codes: 0 success,
// 1 verification failure, 2 usage error.

#include "qucay/cayley.hpp"
#include "qucay/counting.hpp"
#include "qucay/holes.hpp"
#include "qucay/modring.hpp"
#include "qucay/symp.hpp"
#include "qucay/walks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qucay;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

std::string join(const std::vector<int64_t>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string perfect_reason(const PerfectnessVerdict& v) {
    switch (v.reason) {
        case PerfectnessReason::Even: return "even";
        case PerfectnessReason::PrimePower3Mod4: return "prime-power-3-mod-4";
        case PerfectnessReason::HoleExists: return "hole-exists";
    }
    return "?";
}

int cmd_info(int64_t n) {
    Modulus mod(n);
    std::cout << "n = " << n;
    if (!mod.factors().empty()) {
        std::cout << " =";
        for (std::size_t i = 0; i < mod.factors().size(); ++i) {
            const Factor& f = mod.factors()[i];
            std::cout << (i ? " * " : " ") << f.prime;
            if (f.exponent > 1) std::cout << "^" << f.exponent;
        }
    }
    std::cout << "\n";
    if (n == 1) {
        std::cout << "diameter: 0 (trivial-1)\n";
        return 0;
    }
    DiameterReport rep = diameter_report(mod);
    std::cout << "diameter: " << rep.formula_value << " (case " << rep.case_label << ", bfs "
              << *rep.bfs_value << ")\n";
    auto ud = uniform_diameter(quadratic_digraph(mod));
    std::cout << "uniform diameter (directed): ";
    if (ud) std::cout << *ud << "\n";
    else std::cout << "none\n";
    std::cout << "tensor decomposition: " << decomposition_summary(full_tensor_decomposition(mod))
              << "\n";
    PerfectnessVerdict verdict = perfectness(mod);
    std::cout << "perfect: " << (verdict.perfect ? "yes" : "no") << " (" << perfect_reason(verdict)
              << ")\n";
    if (verdict.certificate)
        std::cout << "odd hole: " << join(verdict.certificate->vertices, " ") << " ["
                  << hole_case_name(verdict.certificate->provenance) << "]\n";
    return 0;
}

int cmd_sweep(int64_t max_n) {
    std::cout << "n,diam_formula,diam_bfs,udiam,case_label,perfect\n";
    for (int64_t n = 2; n <= max_n; ++n) {
        Modulus mod(n);
        DiameterReport rep = diameter_report(mod); // aborts the sweep on mismatch
        auto ud = uniform_diameter(quadratic_digraph(mod));
        PerfectnessVerdict verdict = perfectness(mod, /*with_certificate=*/false);
        std::cout << n << "," << rep.formula_value << "," << *rep.bfs_value << ","
                  << (ud ? std::to_string(*ud) : "-") << "," << rep.case_label << ","
                  << (verdict.perfect ? 1 : 0) << "\n";
    }
    return 0;
}

int cmd_counts(int64_t n) {
    Modulus mod(n);
    std::vector<PairCounts> oracle = sd_oracle_all(mod);
    std::cout << "n,r,s_formula,d_formula,s_oracle,d_oracle\n";
    const bool odd = (n % 2 == 1);
    for (int64_t r = 0; r < n; ++r) {
        std::cout << n << "," << r << ",";
        if (odd) {
            PairCounts c = sd_counts(mod, r);
            std::cout << c.s << "," << c.d;
        } else {
            std::cout << "-,-"; // closed forms cover odd n only
        }
        std::cout << "," << oracle[static_cast<std::size_t>(r)].s << ","
                  << oracle[static_cast<std::size_t>(r)].d << "\n";
    }
    return 0;
}

int cmd_walk(int64_t n, int64_t r, const std::string& kind_name, const std::string& signs_text) {
    Modulus mod(n);
    StepSetKind kind =
        (kind_name == "units") ? StepSetKind::AllUnits : StepSetKind::QuadraticUnits;
    std::optional<SignedWalk> walk;
    if (signs_text.empty()) {
        walk = min_signed_walk(mod, r, kind);
    } else {
        std::vector<int> signs;
        for (char c : signs_text) {
            if (c == '+') signs.push_back(1);
            else if (c == '-') signs.push_back(-1);
            else throw std::invalid_argument("signs must be a string of + and -");
        }
        walk = walk_with_signs(mod, r, signs, kind);
    }
    if (!walk) {
        std::cout << "infeasible\n";
        return 1;
    }
    std::cout << walk->render() << "\n";
    return 0;
}

int cmd_hole(int64_t n, bool verify) {
    Modulus mod(n);
    PerfectnessVerdict verdict = perfectness(mod, /*with_certificate=*/true);
    if (verdict.perfect) {
        std::cout << "G_" << n << " is perfect (" << perfect_reason(verdict) << "); no odd hole\n";
        return 0;
    }
    const OddHoleCertificate& cert = *verdict.certificate;
    std::cout << "hole: " << join(cert.vertices, " ") << "\n";
    std::cout << "case: " << hole_case_name(cert.provenance) << " nu=" << cert.nu
              << " mu=" << cert.mu << " N=" << cert.big_n << "\n";
    if (verify) {
        bool ok = is_induced_odd_cycle(mod, cert.vertices);
        std::cout << "verified: " << (ok ? "induced odd cycle" : "INVALID") << "\n";
        return ok ? 0 : 1;
    }
    return 0;
}

int cmd_export_dot(int64_t n, bool digraph) {
    if (n > 200) throw std::invalid_argument("export-dot supports n <= 200");
    Modulus mod(n);
    CirculantGraph g = digraph ? quadratic_digraph(mod) : quadratic_graph(mod);
    std::cout << (digraph ? "digraph" : "graph") << " qucay_" << n << " {\n";
    for (int64_t v = 0; v < n; ++v) std::cout << "  " << v << ";\n";
    for (int64_t v = 0; v < n; ++v)
        for (Residue s : g.steps) {
            int64_t w = mod.reduce(v + s);
            if (!digraph && w < v) continue; // each undirected edge once
            std::cout << "  " << v << (digraph ? " -> " : " -- ") << w << ";\n";
        }
    std::cout << "}\n";
    return 0;
}

int cmd_symp_decompose(const std::string& in_path, const std::string& out_path, bool verify) {
    SympMatrix s = matrix_from_json(read_file(in_path));
    OpProgram prog = decompose(s);
    write_file(out_path, to_ops_text(prog));
    std::cout << "wrote " << prog.ops.size() << " ops to " << out_path << "\n";
    if (verify) {
        OpProgram back = parse_ops_text(read_file(out_path), s.m, s.n);
        bool ok = replay(back, s) == SympMatrix::identity(s.m, s.n);
        std::cout << "verified: " << (ok ? "replay reaches identity" : "REPLAY MISMATCH") << "\n";
        if (!ok) return 1;
    }
    return 0;
}

int cmd_symp_verify(const std::string& in_path, const std::string& ops_path) {
    SympMatrix s = matrix_from_json(read_file(in_path));
    OpProgram prog = parse_ops_text(read_file(ops_path), s.m, s.n);
    if (replay(prog, s) == SympMatrix::identity(s.m, s.n)) {
        std::cout << "ok: program reduces the matrix to the identity\n";
        return 0;
    }
    std::cout << "mismatch: program does not reduce the matrix to the identity\n";
    return 1;
}

int cmd_symp_random(int m, int64_t n, int count, uint64_t seed, const std::string& out_path) {
    SympMatrix s = random_symplectic(m, n, count, seed);
    write_file(out_path, to_matrix_json(s));
    std::cout << "wrote " << (2 * m) << "x" << (2 * m) << " symplectic matrix mod " << n << " to "
              << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic unitary Cayley graphs over Z_n and symplectic decompositions"};
    app.require_subcommand(1);

    int64_t n = 0, r = 0, max_n = 100;
    bool verify = false, digraph = false;
    std::string kind = "quadratic", signs, in_path, ops_path, out_path;
    int sp_m = 1, sp_count = 20;
    int64_t sp_n = 5;
    uint64_t sp_seed = 0;

    auto* info = app.add_subcommand("info", "per-n structure report");
    info->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "CSV sweep of diameters and perfectness");
    sweep->add_option("--max", max_n, "largest n")->required()->check(CLI::PositiveNumber);

    auto* counts = app.add_subcommand("counts", "CSV of S/D counting functions");
    counts->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);

    auto* walk = app.add_subcommand("walk", "signed walk to a target residue");
    walk->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);
    walk->add_option("r", r, "target residue")->required();
    walk->add_option("--kind", kind, "step set: quadratic | units")
        ->check(CLI::IsMember({"quadratic", "units"}));
    walk->add_option("--signs", signs, "prescribed sign pattern, e.g. +-+");

    auto* hole = app.add_subcommand("hole", "odd-hole certificate");
    hole->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);
    hole->add_flag("--verify", verify, "re-run the induced-cycle checker");

    auto* dot = app.add_subcommand("export-dot", "DOT output of G_n or Gamma_n (n <= 200)");
    dot->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);
    dot->add_flag("--digraph", digraph, "export the directed graph Gamma_n");

    auto* symp = app.add_subcommand("symplectic", "symplectic matrix decomposition");
    symp->require_subcommand(1);
    auto* sdec = symp->add_subcommand("decompose", "reduce a symplectic matrix to row ops");
    sdec->add_option("--in", in_path, "matrix JSON")->required();
    sdec->add_option("--out", out_path, "op program output")->required();
    sdec->add_flag("--verify", verify, "re-replay the written program");
    auto* sver = symp->add_subcommand("verify", "replay a program against a matrix");
    sver->add_option("--in", in_path, "matrix JSON")->required();
    sver->add_option("--ops", ops_path, "op program")->required();
    auto* srnd = symp->add_subcommand("random", "sample a random symplectic matrix");
    srnd->add_option("--m", sp_m, "half-dimension")->required()->check(CLI::PositiveNumber);
    srnd->add_option("--n", sp_n, "modulus")->required()->check(CLI::PositiveNumber);
    srnd->add_option("--count", sp_count, "number of generator factors");
    srnd->add_option("--seed", sp_seed, "RNG seed");
    srnd->add_option("--out", out_path, "matrix JSON output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(n);
        if (*sweep) return cmd_sweep(max_n);
        if (*counts) return cmd_counts(n);
        if (*walk) return cmd_walk(n, r, kind, signs);
        if (*hole) return cmd_hole(n, verify);
        if (*dot) return cmd_export_dot(n, digraph);
        if (*sdec) return cmd_symp_decompose(in_path, out_path, verify);
        if (*sver) return cmd_symp_verify(in_path, ops_path);
        if (*srnd) return cmd_symp_random(sp_m, sp_n, sp_count, sp_seed, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

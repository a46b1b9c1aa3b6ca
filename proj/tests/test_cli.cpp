// End-to-end checks of the command-line tool: exit codes, golden outputs,
// and the symplectic file round trip. The binary path and golden directory
// come in through compile definitions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    std::string cmd = std::string(QUCAY_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    std::remove(out_path.c_str());
    return r;
}

std::string golden(const std::string& name) {
    return slurp(std::string(QUCAY_GOLDEN_DIR) + "/" + name);
}

} // namespace

TEST_CASE("info 15 matches golden") {
    RunResult r = run("info 15");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("info_15.txt"));
}

TEST_CASE("sweep 40 matches golden and is deterministic") {
    RunResult a = run("sweep --max 40");
    RunResult b = run("sweep --max 40");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == golden("sweep_40.csv"));
}

TEST_CASE("counts 15 matches golden") {
    RunResult r = run("counts 15");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("counts_15.csv"));
}

TEST_CASE("counts on even n leaves the formula columns blank") {
    RunResult r = run("counts 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("8,2,-,-,1,0") != std::string::npos);
}

TEST_CASE("walk output and infeasibility exit code") {
    RunResult r = run("walk 24 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "12 = +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 +1 (mod 24)\n");

    RunResult inf = run("walk 9 1 --signs ++");
    CHECK(inf.exit_code == 1);
    CHECK(inf.out == "infeasible\n");

    RunResult ws = run("walk 35 4 --signs +-++");
    CHECK(ws.exit_code == 0);
    CHECK(ws.out.substr(0, 4) == "4 = ");
}

TEST_CASE("hole certificate with verification") {
    RunResult r = run("hole 21 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("hole_21.txt"));

    RunResult perfect = run("hole 9");
    CHECK(perfect.exit_code == 0);
    CHECK(perfect.out.find("perfect") != std::string::npos);
}

TEST_CASE("export-dot matches golden and enforces the size cap") {
    RunResult r = run("export-dot 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("dot_5.txt"));
    CHECK(run("export-dot 500").exit_code == 2);

    RunResult d = run("export-dot 5 --digraph");
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("digraph") == 0);
    CHECK(d.out.find("0 -> 1;") != std::string::npos);
    CHECK(d.out.find("0 -> 4;") != std::string::npos); // 4 in Q_5
}

TEST_CASE("walk over the full unit group") {
    RunResult r = run("walk 8 4 --kind units");
    CHECK(r.exit_code == 0);
    // 4 mod 8 needs an even number of odd steps; two units suffice.
    CHECK(r.out.find("4 = ") == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '+') + std::count(r.out.begin(), r.out.end(), '-') >= 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("info").exit_code == 2);
    CHECK(run("info 0").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("walk 9 1 --signs +x").exit_code == 2);
}

TEST_CASE("symplectic random / decompose / verify round trip") {
    RunResult rnd = run("symplectic random --m 2 --n 9 --count 25 --seed 7 --out cli_s.json");
    CHECK(rnd.exit_code == 0);

    RunResult dec = run("symplectic decompose --in cli_s.json --out cli_p.ops --verify");
    CHECK(dec.exit_code == 0);
    CHECK(dec.out.find("replay reaches identity") != std::string::npos);

    RunResult ver = run("symplectic verify --in cli_s.json --ops cli_p.ops");
    CHECK(ver.exit_code == 0);

    // Determinism: the same seed writes byte-identical files.
    RunResult rnd2 = run("symplectic random --m 2 --n 9 --count 25 --seed 7 --out cli_s2.json");
    CHECK(rnd2.exit_code == 0);
    CHECK(slurp("cli_s.json") == slurp("cli_s2.json"));

    // Tampering with the program must fail verification with exit 1.
    {
        std::ofstream app_out("cli_p.ops", std::ios::app);
        app_out << "C 1 3 +1\n";
    }
    RunResult bad = run("symplectic verify --in cli_s.json --ops cli_p.ops");
    CHECK(bad.exit_code == 1);

    // The golden program fixture replays against its matrix fixture.
    RunResult gold = run(std::string("symplectic verify --in ") + QUCAY_GOLDEN_DIR +
                         "/fixture_s.json --ops " + QUCAY_GOLDEN_DIR + "/fixture_p.ops");
    CHECK(gold.exit_code == 0);

    std::remove("cli_s.json");
    std::remove("cli_s2.json");
    std::remove("cli_p.ops");
}

TEST_CASE("decompose writes the golden program byte for byte") {
    RunResult dec = run(std::string("symplectic decompose --in ") + QUCAY_GOLDEN_DIR +
                        "/fixture_s.json --out cli_fix.ops");
    CHECK(dec.exit_code == 0);
    CHECK(slurp("cli_fix.ops") == golden("fixture_p.ops"));
    std::remove("cli_fix.ops");
}

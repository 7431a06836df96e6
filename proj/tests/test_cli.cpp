#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CKB_CLI_PATH
#error "CKB_CLI_PATH must point at the built binary"
#endif
#ifndef CKB_GOLDEN_DIR
#error "CKB_GOLDEN_DIR must point at the golden files"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string command = env + " " + std::string(CKB_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_fixture_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("bracket subcommand") {
    std::string loop = write_temp("loop.pd", "L\n");
    RunResult r = run_cli("bracket --pd " + loop);
    CHECK(r.status == 0);
    CHECK(r.output == "x\n");

    std::string foil4 =
        "X 0 1 2 3\nX 4 5 6 7\nX 8 9 10 11\nX 12 13 14 15\n"
        "P 1 4\nP 2 7\nP 5 8\nP 6 11\nP 9 12\nP 10 15\nP 13 0\nP 14 3\n";
    std::string foil_path = write_temp("foil4.pd", foil4);
    r = run_cli("bracket --pd " + foil_path);
    CHECK(r.status == 0);
    CHECK(r.output == "x^4+4*x^3+7*x^2+4*x\n");

    std::string bad = write_temp("bad.pd", "X 1 2 3\n");
    r = run_cli("bracket --pd " + bad);
    CHECK(r.status == 1);
    CHECK(r.output.find("line 1") != std::string::npos);

    r = run_cli("bracket --pd does_not_exist.pd");
    CHECK(r.status == 1);
}

TEST_CASE("celtic subcommand") {
    for (const std::string method : {"statesum", "celtic-matrix", "gf", "tangle"}) {
        RunResult r = run_cli("celtic --n 3 --method " + method);
        CHECK(r.status == 0);
        CHECK(r.output == "x^6+7*x^5+23*x^4+42*x^3+40*x^2+15*x\n");
    }

    RunResult guard = run_cli("celtic --n 9 --method statesum");
    CHECK(guard.status == 1);
    CHECK(guard.output.find("n <= 8") != std::string::npos);

    RunResult emitted = run_cli("celtic --n 2 --method statesum --emit-pd cli_fixture_ck4.pd");
    CHECK(emitted.status == 0);
    RunResult reread = run_cli("bracket --pd cli_fixture_ck4.pd");
    CHECK(reread.output == "x^4+4*x^3+7*x^2+4*x\n");
}

TEST_CASE("table subcommand") {
    RunResult r = run_cli("table --n-max 2");
    CHECK(r.status == 0);
    CHECK(r.output == "1,1,1\n1,2,1\n2,1,4\n2,2,7\n2,3,4\n2,4,1\n");

    RunResult empty = run_cli("table --n-max 0");
    CHECK(empty.status == 0);
    CHECK(empty.output.empty());

    RunResult golden = run_cli("table --n-max 7");
    CHECK(golden.status == 0);
    CHECK(golden.output == slurp(std::string(CKB_GOLDEN_DIR) + "/table1.golden"));

    // identical configuration, identical bytes
    CHECK(run_cli("table --n-max 6 --method tangle").output ==
          run_cli("table --n-max 6 --method tangle").output);

    RunResult markdown = run_cli("table --n-max 1 --format markdown");
    CHECK(markdown.status == 0);
    CHECK(markdown.output.find("| 1 | 0 | 1 | 1 |") != std::string::npos);

    CHECK(run_cli("table --n-max 13").status == 1);
    CHECK(run_cli("table --n-max 7 --method statesum").status == 1);
    CHECK(run_cli("table --n-max 2 --format yaml").status == 1);
}

TEST_CASE("barriers subcommand") {
    RunResult r = run_cli("barriers --n 3");
    CHECK(r.status == 0);
    CHECK(r.output == "1,15\n2,40\n3,42\n4,23\n5,7\n6,1\n");

    RunResult orbits = run_cli("barriers --n 3 --components 1 --orbits");
    CHECK(orbits.status == 0);
    CHECK(orbits.output == "k=1 orbits: 1 2 2 2 4 4\n");

    CHECK(run_cli("barriers --n 9").status == 1);
}

TEST_CASE("verify subcommand") {
    RunResult r = run_cli("verify --n 3 --orbits");
    CHECK(r.status == 0);
    int ok_lines = 0;
    std::istringstream lines(r.output);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind("ok   ", 0) == 0) ++ok_lines;
    CHECK(ok_lines >= 12);
    CHECK(r.output.find("k=1 orbits: 1 2 2 2 4 4") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);

    RunResult injected = run_cli("verify --n 2", "CKB_FAULT_INJECT=1");
    CHECK(injected.status == 1);
    CHECK(injected.output.find("FAIL tangle-vs-matrix") != std::string::npos);
    CHECK(injected.output.find("verify: FAILED at tangle-vs-matrix") != std::string::npos);
}

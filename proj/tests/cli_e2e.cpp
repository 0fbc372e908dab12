// End-to-end checks against the installed CLI binary: exit codes, output
// formats, seeding, and byte-level determinism.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

#ifndef RIGIDLAB_CLI_PATH
#error "RIGIDLAB_CLI_PATH must point at the CLI binary"
#endif

namespace {

int checks = 0;
int failed = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + RIGIDLAB_CLI_PATH + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failed;
        std::cout << "FAILED: " << what << "\n";
    }
}

size_t count_lines(const std::string& text) {
    size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

int main() {
    // construct
    RunResult r = run("construct \"complete 4\"");
    expect(r.exit_code == 0, "construct exits 0");
    expect(r.out.substr(0, 4) == "v 4\n", "construct prints the header");
    expect(count_lines(r.out) == 7, "construct prints one line per edge");

    r = run("construct \"attach(complete 6; left=0,1; right=2,3,4,5; interior=3,5)\"");
    expect(r.exit_code == 0, "attachment expression parses");
    expect(count_lines(r.out) == 57, "attachment has 56 edges");

    r = run("construct \"kring 2,2,2\" --format json");
    expect(r.exit_code == 0, "json construct exits 0");
    expect(r.out.find("\"v\":6") != std::string::npos, "json construct carries v");

    r = run("construct \"pentagon 5\"");
    expect(r.exit_code == 2, "unknown constructor exits 2");

    // analyze
    r = run("analyze --construct \"bipartite 5 5\" -d 3 --format json");
    expect(r.exit_code == 0, "analyze exits 0");
    expect(r.out.find("\"gpr\":\"yes\"") != std::string::npos, "K_{5,5} reports gpr yes");
    expect(r.out.find("\"rigidity_rank\":24") != std::string::npos, "K_{5,5} rank 24");

    r = run("analyze --construct \"complete 5\" -d 3");
    expect(r.exit_code == 0, "text analyze exits 0");
    expect(r.out.find("glr: yes") != std::string::npos, "complete graph is locally rigid");
    expect(r.out.find("ggr: yes") != std::string::npos, "complete graph is globally rigid");

    // file input, both formats, and parse diagnostics
    {
        std::ofstream f("quad_diag.graph");
        f << "v 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\ne 0 2\n";
    }
    r = run("analyze --file quad_diag.graph -d 2");
    expect(r.exit_code == 0, "graph file analyze exits 0");
    expect(r.out.find("glr: yes") != std::string::npos, "quad+diagonal is locally rigid");
    expect(r.out.find("ggr: no") != std::string::npos,
           "quad+diagonal has no stresses, certifying not GGR");

    {
        std::ofstream f("quad_diag.json");
        f << "{\"v\": 4, \"edges\": [[0,1],[1,2],[2,3],[0,3],[0,2]]}";
    }
    r = run("analyze --file quad_diag.json -d 2 --format json");
    expect(r.exit_code == 0, "json graph file analyze exits 0");
    expect(r.out.find("\"glr\":\"yes\"") != std::string::npos, "json file parsed");

    {
        std::ofstream f("broken.graph");
        f << "v 4\ne 0 1\ne 9 1\n";
    }
    r = run("analyze --file broken.graph -d 2");
    expect(r.exit_code == 2, "malformed graph file exits 2");
    r = run("analyze --file missing_file.graph -d 2");
    expect(r.exit_code == 2, "missing file exits 2");
    r = run("analyze -d 2");
    expect(r.exit_code == 2, "analyze without a source exits 2");

    // enumerate
    r = run("enumerate -d 4 -v 15 --filter gpr");
    expect(r.exit_code == 0, "enumerate exits 0");
    expect(count_lines(r.out) == 2, "exactly two predicted chains at d=4, v=15");
    expect(r.out.find("[1,6,6,2]") != std::string::npos, "census contains [1,6,6,2]");
    expect(r.out.find("[1,6,7,1]") != std::string::npos, "census contains [1,6,7,1]");

    r = run("enumerate -d 3 -v 10 -k 4.. --filter gpr");
    expect(r.exit_code == 0, "empty census exits 0");
    expect(r.out.empty(), "no predicted chains at d=3, v=10");

    r = run("enumerate -d 2 -v 4 -k 2..2");
    expect(r.exit_code == 0, "2-chain enumeration exits 0");
    expect(count_lines(r.out) == 2, "two canonical 2-chains of 4 vertices");

    r = run("enumerate -d 4 -v 40");
    expect(r.exit_code == 2, "vertex budget refusal exits 2");

    // verify
    r = run("verify bolker-roth -d 3");
    expect(r.exit_code == 0, "bolker-roth verification exits 0");
    expect(r.out.find("PASS") != std::string::npos, "bolker-roth prints PASS");

    r = run("verify hendrickson -d 2 --samples 15 --format json");
    expect(r.exit_code == 0, "hendrickson verification exits 0");
    expect(r.out.find("\"pass\":true") != std::string::npos, "hendrickson json pass flag");

    r = run("verify coning -d 2 --samples 8");
    expect(r.exit_code == 0, "coning verification exits 0");

    r = run("verify theorem-main -d 3");
    expect(r.exit_code == 0, "theorem-main d=3 exits 0");
    expect(r.out.find("mismatches=0") != std::string::npos, "theorem-main reports no mismatches");

    r = run("verify theorem-main -d 6");
    expect(r.exit_code == 2, "dimension budget refusal exits 2");
    r = run("verify everything -d 3");
    expect(r.exit_code == 2, "unknown verify target exits 2");

    // determinism and seeding
    RunResult a = run("analyze --construct \"kchain 1,6,6,2\" -d 4 --seed 77 --format json");
    RunResult b = run("analyze --construct \"kchain 1,6,6,2\" -d 4 --seed 77 --format json");
    expect(a.exit_code == 0 && b.exit_code == 0, "seeded analyze exits 0");
    expect(a.out == b.out, "identical invocations are byte-identical");
    expect(a.out.find("\"seed\":77") != std::string::npos, "seed is recorded in the report");

    RunResult via_env =
        run("analyze --construct \"kchain 1,6,6,2\" -d 4 --format json", "RIGIDLAB_SEED=77");
    expect(via_env.out == a.out, "RIGIDLAB_SEED matches --seed");

    RunResult default_seed = run("analyze --construct \"kchain 1,6,6,2\" -d 4 --format json");
    expect(default_seed.out.find("\"seed\":1729") != std::string::npos,
           "default seed is 1729");

    // help should succeed
    r = run("--help");
    expect(r.exit_code == 0, "--help exits 0");

    std::remove("quad_diag.graph");
    std::remove("quad_diag.json");
    std::remove("broken.graph");

    if (failed == 0)
        std::cout << "cli_e2e: all " << checks << " checks passed\n";
    else
        std::cout << "cli_e2e: " << failed << " of " << checks << " checks FAILED\n";
    return failed == 0 ? 0 : 1;
}

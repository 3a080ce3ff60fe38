#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "nullsolve/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout and stderr together.
RunResult run(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

const std::string kBin = quoted(NULLSOLVE_BIN);

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("kappa command prints the recursion value and its witness family") {
    const std::string cmd =
        kBin +
        " kappa --p 5 --d 3 --set "
        "1,2,5,6,20,37,40,42,50,51,52,56,69,70,87,95,100,101,102,112";
    RunResult r = run(cmd);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT kappa = 56\n") != std::string::npos);
    CHECK(r.out.find("RESULT total_degree = 56\n") != std::string::npos);
    // determinism: a second run is byte-identical
    CHECK(run(cmd).out == r.out);
}

TEST_CASE("ppa-run reproduces the worked trace byte for byte") {
    const std::string instance = std::string(INSTANCE_DIR) + "/worked.genpoly";
    RunResult r = run(kBin + " ppa-run --trace " + quoted(instance));
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp_file(std::string(GOLDEN_DIR) + "/worked_trace.txt"));
}

TEST_CASE("solve-olson reports unsolvable instances on exit code 3") {
    const std::string instance = std::string(INSTANCE_DIR) + "/extremal.olson";
    RunResult r = run(kBin + " solve-olson " + quoted(instance));
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("ERROR no solution") != std::string::npos);
}

TEST_CASE("solve-olson engines agree on the triangle incidence system") {
    const std::string instance = std::string(INSTANCE_DIR) + "/triangle.graph";
    RunResult r = run(kBin + " divisible-subgraph " + quoted(instance) + " --d 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT F = {1,2,3}\n") != std::string::npos);
    CHECK(r.out.find("RESULT degree 1 = 2\n") != std::string::npos);
    RunResult p =
        run(kBin + " divisible-subgraph " + quoted(instance) + " --d 1 --engine ppa");
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("RESULT F = {1,2,3}\n") != std::string::npos);
}

TEST_CASE("step cap environment variable forces exit code 4") {
    const std::string instance = std::string(INSTANCE_DIR) + "/worked.genpoly";
    RunResult r =
        run("NULLSOLVE_STEP_CAP=1 " + kBin + " ppa-run " + quoted(instance));
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("step cap") != std::string::npos);
    // an explicit flag wins over the environment
    RunResult ok = run("NULLSOLVE_STEP_CAP=1 " + kBin + " ppa-run --step-cap 64 " +
                       quoted(instance));
    CHECK(ok.exit_code == 0);
    // junk in the variable is a usage error
    RunResult junk =
        run("NULLSOLVE_STEP_CAP=abc " + kBin + " ppa-run " + quoted(instance));
    CHECK(junk.exit_code == 2);
}

TEST_CASE("f-avoiding requires exactly one mode") {
    const std::string instance = std::string(INSTANCE_DIR) + "/star.graph";
    RunResult both =
        run(kBin + " f-avoiding " + quoted(instance) + " --natural --mod 2^1");
    CHECK(both.exit_code == 2);
    RunResult neither = run(kBin + " f-avoiding " + quoted(instance));
    CHECK(neither.exit_code == 2);
    RunResult nat = run(kBin + " f-avoiding " + quoted(instance) + " --natural");
    CHECK(nat.exit_code == 0);
    CHECK(nat.out.find("RESULT E' = {") != std::string::npos);
}

TEST_CASE("usage and parse failures exit with 2") {
    CHECK(run(kBin + " kappa --p 5").exit_code == 2);
    CHECK(run(kBin + " no-such-command").exit_code == 2);
    CHECK(run(kBin + " solve-olson /no/such/file.olson").exit_code == 2);
    RunResult bad = run("printf 'graph x 2' > /tmp/cli_bad.graph; " + kBin +
                        " divisible-subgraph /tmp/cli_bad.graph --d 1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("parse error at line 1") != std::string::npos);
}

TEST_CASE("instance files round-trip through the serializers") {
    using namespace nullsolve;
    GraphFile tri = parse_graph_file(
        slurp_file(std::string(INSTANCE_DIR) + "/triangle.graph"));
    CHECK(parse_graph_file(serialize_graph_file(tri)) == tri);
    GraphFile star = parse_graph_file(
        slurp_file(std::string(INSTANCE_DIR) + "/star.graph"));
    CHECK(parse_graph_file(serialize_graph_file(star)) == star);
    CHECK_FALSE(star.forbid.empty());
    OlsonInstance ext = parse_olson_file(
        slurp_file(std::string(INSTANCE_DIR) + "/extremal.olson"));
    CHECK(parse_olson_file(serialize_olson_file(ext)) == ext);
    GeneralFormPoly worked = parse_genpoly_file(
        slurp_file(std::string(INSTANCE_DIR) + "/worked.genpoly"));
    CHECK(parse_genpoly_file(serialize_genpoly_file(worked)) == worked);
}

TEST_CASE("explicit-cn solves the expanded worked polynomial") {
    const std::string instance = std::string(INSTANCE_DIR) + "/worked.genpoly";
    RunResult r = run(kBin + " explicit-cn " + quoted(instance));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT f(s) = 1\n") != std::string::npos);
}

TEST_CASE("f-oracle reports exact thresholds") {
    RunResult r = run(kBin + " f-oracle --p 2 --d 2 --q 0 --m-cap 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT F = 3\n") != std::string::npos);
    RunResult capped = run(kBin + " f-oracle --p 2 --d 2 --q 0 --m-cap 2");
    CHECK(capped.exit_code == 0);
    CHECK(capped.out.find("RESULT F = 2\n") != std::string::npos);
    CHECK(capped.out.find("m-cap reached") != std::string::npos);
}

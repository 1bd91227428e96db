#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// run the installed binary, capturing stdout (+stderr)
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UFNA_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() / "ufna_cli_test";
        fs::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = dir_ / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }

private:
    fs::path dir_;
};

} // namespace

TEST_CASE("dims prints the dimension sequence") {
    TempDir tmp;
    const std::string p1 = tmp.file("p1.json", R"({"generators":["x","y"],"relations":[["y","x"]]})");
    const RunResult r = run_cli("dims " + p1 + " -n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 3 4 5 6\n");
}

TEST_CASE("dims accepts the compact form and stdin") {
    TempDir tmp;
    const std::string p2 = tmp.file("p2.txt", "gens: x y; rels: xx;");
    const RunResult r = run_cli("dims " + p2 + " -n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 3 5 8 13\n");

    const RunResult piped = run_cli("dims - -n 3 < " + p2);
    CHECK(piped.exit_code == 0);
    CHECK(piped.output == "1 2 3 5\n");
}

TEST_CASE("hilbert prints coefficients and expansion") {
    TempDir tmp;
    const std::string p2 = tmp.file("p2.json", R"({"generators":["x","y"],"relations":[["x","x"]]})");
    const RunResult r = run_cli("hilbert " + p2 + " --expand 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "numerator: 1 1\ndenominator: 1 -1 -1\nexpansion: 1 2 3 5 8 13\n");
}

TEST_CASE("graph emits deterministic DOT") {
    TempDir tmp;
    const std::string p1 = tmp.file("p1.json", R"({"generators":["x","y"],"relations":[["y","x"]]})");
    const RunResult r1 = run_cli("graph " + p1 + " --dot -");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("digraph quiver {") == 0);
    CHECK(r1.output.find("\"x\" -> \"y\" [label=\"x\" tooltip=\"xy\"];") != std::string::npos);
    int edges = 0;
    for (std::size_t at = 0; (at = r1.output.find("->", at)) != std::string::npos; ++at) ++edges;
    CHECK(edges == 3);
    CHECK(run_cli("graph " + p1 + " --dot -").output == r1.output);
}

TEST_CASE("paths lists underlying words") {
    TempDir tmp;
    const std::string p2 = tmp.file("p2.txt", "gens: x y; rels: xx;");
    const RunResult r = run_cli("paths " + p2 + " -n 2");
    CHECK(r.exit_code == 0);
    // five paths of length 2, first one spells xy and underlies xyx
    CHECK(r.output.find("xyx  xy  x->y->x") == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 5);
}

TEST_CASE("verify passes on the fixtures") {
    TempDir tmp;
    const std::string p2 = tmp.file("p2.json", R"({"generators":["x","y"],"relations":[["x","x"]]})");
    const RunResult r = run_cli("verify " + p2 + " -n 8 --json -");
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.output);
    CHECK(report["schema"] == 1);
    CHECK(report["verdict"] == "pass");
    CHECK(report["quiver"]["vertices"] == 2);
    CHECK(report["quiver"]["arrows"] == 3);
    CHECK(report["checks"]["degree_slices"]["rows"][1]["coker"] == 1);

    const std::string p3 = tmp.file("p3.txt", "gens: x y; rels: xx xy yx;");
    const RunResult r3 = run_cli("verify " + p3 + " -n 6 --json -");
    CHECK(r3.exit_code == 0);
    const auto report3 = nlohmann::json::parse(r3.output);
    CHECK(report3["verdict"] == "pass");
    // the kernel word x is reported at degree 1
    CHECK(report3["checks"]["degree_slices"]["rows"][1]["ker_basis"][0] == "x");
}

TEST_CASE("verify runs are byte-identical") {
    TempDir tmp;
    const std::string p2 = tmp.file("p2.json", R"({"generators":["x","y"],"relations":[["x","x"]]})");
    const RunResult a = run_cli("verify " + p2 + " -n 7 --seed 42 --json -");
    const RunResult b = run_cli("verify " + p2 + " -n 7 --seed 42 --json -");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("exit codes distinguish failure classes") {
    TempDir tmp;
    const std::string bad = tmp.file("bad.json", R"({"generators": ["x")");
    CHECK(run_cli("verify " + bad).exit_code == 2);

    const std::string unknown = tmp.file("unknown.json",
                                         R"({"generators":["x"],"relations":[["z"]]})");
    CHECK(run_cli("dims " + unknown).exit_code == 2);

    CHECK(run_cli("dims /no/such/file.json").exit_code == 2);

    // free algebra outgrows a tiny cap
    const std::string p0 = tmp.file("p0.json", R"({"generators":["x","y"],"relations":[]})");
    CHECK(run_cli("verify " + p0 + " -n 12 --cap 50").exit_code == 3);
    CHECK(run_cli("dims " + p0 + " -n 20 --cap 50").exit_code == 3);

    // usage errors are input errors
    CHECK(run_cli("frobnicate in.json").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("UFNA_CAP environment variable sets the default cap") {
    TempDir tmp;
    const std::string p0 = tmp.file("p0.json", R"({"generators":["x","y"],"relations":[]})");
    const std::string cmd = "UFNA_CAP=50 " + std::string(UFNA_CLI_BIN) + " dims " + p0 + " -n 20 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {}
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
    // an explicit flag wins over the environment
    const std::string cmd2 = "UFNA_CAP=50 " + std::string(UFNA_CLI_BIN) + " dims " + p0 +
                             " -n 8 --cap 100000 2>&1";
    FILE* pipe2 = popen(cmd2.c_str(), "r");
    REQUIRE(pipe2 != nullptr);
    std::string out;
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe2)) > 0) out.append(buf, n);
    CHECK(WEXITSTATUS(pclose(pipe2)) == 0);
    CHECK(out == "1 2 4 8 16 32 64 128 256\n");
}

TEST_CASE("verify reports collapse to scalars") {
    TempDir tmp;
    const std::string c = tmp.file("c.json", R"({"generators":["x"],"relations":[["x"]]})");
    const RunResult r = run_cli("verify " + c + " -n 4 --json -");
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.output);
    CHECK(report["collapsed_to_scalars"] == true);
    CHECK(report["verdict"] == "pass");
}

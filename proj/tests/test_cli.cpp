#include <array>
#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ARRTOP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) {
    return std::string(ARRTOP_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("lattice report") {
    const RunResult r = run("lattice " + data("three_concurrent_lines.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4 elements, 3 covering relations, 3 atoms") != std::string::npos);
    CHECK(r.output.find("a1: dim 1 (atom)") != std::string::npos);
    CHECK(r.output.find("f1: dim 0") != std::string::npos);

    const RunResult one = run("lattice " + data("one_hyperplane_q4.json"));
    CHECK(one.exit_code == 0);
    CHECK(one.output.find("1 elements, 0 covering relations") != std::string::npos);
}

TEST_CASE("lattice json round-trips") {
    const RunResult r = run("lattice --json " + data("three_concurrent_lines.json"));
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.contains("lattice"));
    CHECK(doc["lattice"].size() == 4);
    CHECK(doc["lattice"][0]["label"] == "a1");
    CHECK(doc["lattice"][0]["atom"] == true);
    CHECK(doc["lattice"][0]["dimension"] == 1);
    CHECK(doc["lattice"][3]["covered_by"].empty());
}

TEST_CASE("models report") {
    const RunResult r = run("models " + data("three_concurrent_lines.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Vassiliev: (7,12,6); ZZ: (4,3)") != std::string::npos);

    const RunResult par = run("models " + data("two_parallel_lines.json"));
    CHECK(par.output.find("Vassiliev: (2); ZZ: (2)") != std::string::npos);

    const RunResult j = run("models --json " + data("three_concurrent_lines.json"));
    const nlohmann::json doc = nlohmann::json::parse(j.output);
    CHECK(doc["models"]["vassiliev"]["simplices"] == 25);
    CHECK(doc["models"]["zz"]["euler"] == 1);
}

TEST_CASE("collapse summary matches the worked example") {
    const RunResult r = run("collapse " + data("three_concurrent_lines.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("9 collapses: 25 → 7 simplices; acyclic: yes; "
                        "identity conditions: 9/9") != std::string::npos);

    const RunResult axes = run("collapse " + data("two_coordinate_hyperplanes.json"));
    CHECK(axes.exit_code == 0);
    CHECK(axes.output.find("0 collapses: 5 → 5") != std::string::npos);
}

TEST_CASE("four concurrent planes run the full pipeline") {
    const RunResult m = run("models " + data("four_concurrent_planes.json"));
    CHECK(m.exit_code == 0);
    CHECK(m.output.find("Vassiliev: (15,50,60,24); ZZ: (11,22,12)") != std::string::npos);

    const RunResult c = run("collapse " + data("four_concurrent_planes.json"));
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("52 collapses: 149 → 45 simplices; acyclic: yes; "
                        "identity conditions: 52/52") != std::string::npos);

    const RunResult b = run("betti " + data("four_concurrent_planes.json"));
    CHECK(b.exit_code == 0);
    CHECK(b.output.find("H̃^0(M): rank 13") != std::string::npos);
    CHECK(b.output.find("Alexander duality: pass") != std::string::npos);
}

TEST_CASE("collapse trace is deterministic") {
    const std::string cmd = "collapse --trace " + data("three_concurrent_lines.json");
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("step 1: remove σ=({a1}<{a1,a2}), "
                        "τ=({a1}<{a1,a2}<{a1,a2,a3})") != std::string::npos);
    CHECK(a.output.find("step 9:") != std::string::npos);
}

TEST_CASE("betti report and duality verdict") {
    const RunResult r = run("betti " + data("three_concurrent_lines.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("H̃^0(M): rank 5") != std::string::npos);
    CHECK(r.output.find("H̃_1(Û): rank 5") != std::string::npos);
    CHECK(r.output.find("Alexander duality: pass") != std::string::npos);

    const RunResult skew = run("betti " + data("two_skew_lines.json"));
    CHECK(skew.output.find("H̃^1(M): rank 2") != std::string::npos);

    const RunResult hyp = run("betti " + data("one_hyperplane_q4.json"));
    CHECK(hyp.output.find("H̃^0(M): rank 1") != std::string::npos);
    CHECK(hyp.output.find("H̃_3(Û): rank 1") != std::string::npos);
}

TEST_CASE("betti json follows the published schema") {
    const RunResult r = run("betti --json " + data("three_concurrent_lines.json"));
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.contains("betti"));
    CHECK(doc["betti"]["duality"] == "pass");
    const nlohmann::json expect_complement =
        nlohmann::json::array({nlohmann::json::array({0, 5, nlohmann::json::array()})});
    CHECK(doc["betti"]["complement"] == expect_complement);
    const nlohmann::json expect_hat =
        nlohmann::json::array({nlohmann::json::array({1, 5, nlohmann::json::array()})});
    CHECK(doc["betti"]["compactified"] == expect_hat);
}

TEST_CASE("verify passes on the bundled arrangements") {
    for (const char* f : {"three_concurrent_lines.json", "two_parallel_lines.json",
                          "two_coordinate_hyperplanes.json", "two_skew_lines.json",
                          "one_hyperplane_q4.json"}) {
        const RunResult r = run("verify " + data(f));
        INFO(f << "\n" << r.output);
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("all invariants hold") != std::string::npos);
        CHECK(r.output.find("[FAIL]") == std::string::npos);
    }
}

TEST_CASE("verify --random runs a generated corpus") {
    const RunResult r = run("verify --random 11 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("arrangement 3/3") != std::string::npos);
    CHECK(r.output.find("all invariants hold on the whole corpus") != std::string::npos);
}

TEST_CASE("exit codes distinguish failure kinds") {
    const RunResult dup = run("lattice " + data("invalid_duplicate_subspace.json"));
    CHECK(dup.exit_code == 2);
    CHECK(dup.output.find("equal") != std::string::npos);

    const RunResult bad = run("lattice " + data("invalid_bad_rational.json"));
    CHECK(bad.exit_code == 3);
    CHECK(bad.output.find("subspaces[0].equations[0][0]") != std::string::npos);

    const RunResult missing = run("lattice /nonexistent.json");
    CHECK(missing.exit_code == 3);
}

TEST_CASE("size guard aborts loudly") {
    const RunResult r =
        run("models --max-simplices 10 " + data("three_concurrent_lines.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("exceed") != std::string::npos);

    const RunResult ok =
        run("models --max-simplices 25 " + data("three_concurrent_lines.json"));
    CHECK(ok.exit_code == 0);
}

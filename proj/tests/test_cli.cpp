#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(HOLANT_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(HOLANT_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Cli, EvalSelfLoop) {
    CliRun r = run("eval --method brute " + fixture("eq2_self_loop.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.json()["value"], "2");
}

TEST(Cli, EvalAutoSelfLoop) {
    CliRun r = run("eval " + fixture("eq2_self_loop.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.json()["value"], "2");
    EXPECT_TRUE(r.json().contains("route"));
}

TEST(Cli, GateOfTriangle) {
    CliRun r = run("gate " + fixture("triangle_gadget.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = r.json();
    EXPECT_EQ(j["arity"], 3);
    EXPECT_EQ(j["signature"], nlohmann::json({"0", "1", "0", "1"}));
}

TEST(Cli, HypergraphOfOneHyperedge) {
    CliRun r = run("hpm " + fixture("hyperedge5.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = r.json();
    EXPECT_EQ(j["verdict"]["verdict"], "Tractable");
    EXPECT_EQ(j["value"], "1");
}

TEST(Cli, PerfectMatchingsOfK4) {
    for (const char* m : {"fkt", "brute"}) {
        CliRun r = run(std::string("pm --method ") + m + " " + fixture("k4.json"));
        ASSERT_EQ(r.code, 0) << r.out;
        EXPECT_EQ(r.json()["value"], "3");
    }
}

TEST(Cli, ClassifyMhat) {
    CliRun r = run("classify --framework plcsp2 " + fixture("signatures_mhat.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = r.json();
    EXPECT_EQ(j["verdict"]["verdict"], "Tractable");
    EXPECT_EQ(j["verdict"]["case"], "Mhat");
    EXPECT_EQ(j["signatures"][0]["classes"]["Mhat"], true);
    EXPECT_EQ(j["signatures"][0]["classes"]["P"], false);
}

TEST(Cli, BinaryEqNeedsArities) {
    CliRun r = run("classify --framework binary-eq " + fixture("signatures_mhat.json"));
    EXPECT_EQ(r.code, 2);
    CliRun ok = run("classify --framework binary-eq --arities 3,6 " + fixture("signatures_mhat.json"));
    ASSERT_EQ(ok.code, 0) << ok.out;
    EXPECT_EQ(ok.json()["verdict"]["case"], "condition 5");
}

TEST(Cli, TransformSignature) {
    std::string path = testing::TempDir() + "eq2_sig.json";
    std::ofstream(path) << "[\"1\", \"0\", \"1\"]";
    CliRun r = run("transform --matrix \"1,1;i,-i\" " + path);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.json()["signature"], nlohmann::json({"2", "0", "-2"}));
}

TEST(Cli, TransformGrid) {
    CliRun g = run("transform --matrix \"0,1;1,0\" " + fixture("triangle_gadget.json"));
    ASSERT_EQ(g.code, 0) << g.out;
    EXPECT_EQ(g.json()["mode"], "all vertices");
    EXPECT_EQ(g.json()["orthogonal"], true);
}

TEST(Cli, SingularMatrixIsRejected) {
    CliRun r = run("transform --matrix \"1,1;1,1\" " + fixture("triangle_gadget.json"));
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, BadScalarIsAnInputError) {
    CliRun r = run("eval " + fixture("bad_scalar.json"));
    EXPECT_EQ(r.code, 2);
    auto j = r.json();
    EXPECT_EQ(j["error"]["kind"], "input");
    EXPECT_TRUE(j["error"].contains("where"));
}

TEST(Cli, MissingFileIsAnInputError) {
    CliRun r = run("eval " + fixture("no_such_file.json"));
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, UnknownMethodIsAUsageError) {
    CliRun r = run("eval --method magic " + fixture("eq2_self_loop.json"));
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["error"]["kind"], "usage");
}

TEST(Cli, CapExceededExitsOne) {
    CliRun r = run("eval --method brute --cap 0 " + fixture("eq2_self_loop.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["error"]["kind"], "too_large");
}

TEST(Cli, OutputIsDeterministic) {
    std::string args = "classify --framework plholant " + fixture("triangle_gadget.json");
    CliRun a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyPasses) {
    CliRun r = run("verify");
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = r.json();
    EXPECT_EQ(j["failed"], 0);
    EXPECT_GT(j["passed"].get<int>(), 20);
}

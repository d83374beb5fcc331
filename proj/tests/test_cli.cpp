#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace contactlie;
using contactlie::cli::json;

namespace {

struct Captured {
    int code = -1;
    std::string out, err;
};

Captured call(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    Captured c;
    c.code = cli::run(args, out, err);
    c.out = out.str();
    c.err = err.str();
    return c;
}

class SeedEnv {
public:
    explicit SeedEnv(const char* value) { ::setenv("CONTACTLIE_SEED", value, 1); }
    ~SeedEnv() { ::unsetenv("CONTACTLIE_SEED"); }
};

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, HopfContactPasses)
{
    const Captured c = call({"verify-contact", "--model", "hopf", "--n", "1"});
    EXPECT_EQ(c.code, 0) << c.out;
    const json j = json::parse(c.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["config"]["seed"], cli::default_seed);
    bool saw_top = false;
    for (const auto& r : j["results"]) saw_top |= r["check_id"] == "P3.top_power_nonzero";
    EXPECT_TRUE(saw_top);
}

TEST(Cli, DeltaZeroIsConfigError)
{
    const Captured c = call({"verify-contact", "--model", "fibered", "--delta", "0"});
    EXPECT_EQ(c.code, 2);
    EXPECT_TRUE(c.out.empty());
    EXPECT_NE(c.err.find("delta = 0"), std::string::npos) << c.err;
}

TEST(Cli, UnknownTypePrintsUsage)
{
    const Captured c = call({"algebra", "E9"});
    EXPECT_EQ(c.code, 2);
    EXPECT_NE(c.err.find("known types: A1"), std::string::npos) << c.err;
    EXPECT_NE(c.err.find("Usage"), std::string::npos) << c.err;
}

TEST(Cli, ParseErrors)
{
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"roots"}).code, 2);
    EXPECT_EQ(call({"roots", "A2", "--bogus"}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"verify-contact", "--model", "sphere"}).code, 2);
    EXPECT_EQ(call({"quotient", "--samples", "-3"}).code, 2);
}

TEST(Cli, ExitCodeFollowsReport)
{
    Report ok;
    ok.check("a", true);
    ok.skip("b", "not applicable");
    EXPECT_EQ(cli::exit_code(ok), 0);
    Report bad = ok;
    bad.fail("c", "residual 1");
    EXPECT_EQ(cli::exit_code(bad), 1);
}

TEST(Cli, VerifyAlias)
{
    const Captured a = call({"verify", "lemma22", "--model", "fibered", "--n", "1", "--delta", "3", "--samples", "4"});
    const Captured b = call({"verify-lemma22", "--model", "fibered", "--n", "1", "--delta", "3", "--samples", "4"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SeedFromEnvironment)
{
    const std::vector<std::string> args{"verify-lemma21", "--model", "fibered", "--n", "1", "--samples", "3"};
    const Captured base = call(args);
    std::string with_env;
    {
        SeedEnv env("12345");
        const Captured c = call(args);
        EXPECT_EQ(c.code, 0);
        EXPECT_EQ(json::parse(c.out)["config"]["seed"], 12345u);
        with_env = c.out;
        std::vector<std::string> flag = args;
        flag.insert(flag.end(), {"--seed", "999"});
        EXPECT_EQ(json::parse(call(flag).out)["config"]["seed"], 999u);
    }
    EXPECT_NE(base.out, with_env);
    SeedEnv bad("not-a-number");
    EXPECT_EQ(call(args).code, 2);
}

TEST(Cli, Deterministic)
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"adjoint", "A2", "--samples", "4"}, {"verify-lemma21", "--model", "hopf", "--samples", "4"},
          {"immersion", "--n", "0", "--samples", "3"}}) {
        const Captured a = call(args), b = call(args);
        EXPECT_EQ(a.code, 0) << a.out;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, ResultsSortedByCheckId)
{
    const json j = json::parse(call({"adjoint", "A1", "--samples", "3"}).out);
    std::vector<std::string> ids;
    for (const auto& r : j["results"]) ids.push_back(r["check_id"]);
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_EQ(j["data"]["orbit_dim"], 2);
    EXPECT_EQ(j["data"]["L0_kernel_dim"], 1);
    EXPECT_EQ(j["data"]["moment_round_trip"], "pass");
}

TEST(Cli, G2PieceDims)
{
    const Captured c = call({"algebra", "G2"});
    EXPECT_EQ(c.code, 0);
    const json d = json::parse(c.out)["data"]["piece_dims"];
    EXPECT_EQ(d, (json{{"-2", 1}, {"-1", 4}, {"0", 4}, {"1", 4}, {"2", 1}}));
}

TEST(Cli, DumpForms)
{
    const json j = json::parse(call({"verify-contact", "--model", "hopf", "--n", "0", "--dump-forms"}).out);
    EXPECT_EQ(j["data"]["theta"], "(-z1)*dz0 + (z0)*dz1");
    EXPECT_EQ(j["data"]["dtheta"], "(2)*dz0^dz1");
    EXPECT_EQ(j["data"]["euler_field"], "(-1/2*z0)*d/dz0 + (-1/2*z1)*d/dz1");
}

TEST(Cli, Cocycle)
{
    const Captured c = call({"cocycle"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(json::parse(c.out)["data"]["p1_f01"], "-z0^2");
}

TEST(Cli, OutputFile)
{
    const std::string path = ::testing::TempDir() + "contactlie_roots.json";
    const Captured c = call({"roots", "B2", "-o", path});
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(c.out.empty());
    EXPECT_EQ(slurp(path), call({"roots", "B2"}).out);
    EXPECT_EQ(call({"roots", "B2", "-o", "/nonexistent/dir/x.json"}).code, 2);
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, AlgebraMatchesFrozenOutput)
{
    const std::string expected = slurp(std::string(GOLDEN_DIR) + "/algebra_" + GetParam() + ".json");
    ASSERT_FALSE(expected.empty()) << "missing golden file for " << GetParam();
    const Captured c = call({"algebra", GetParam()});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, expected);
}

INSTANTIATE_TEST_SUITE_P(Shipped, Golden, ::testing::Values("A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"));

// End-to-end checks of the command-line tool: output contract and exit codes.

#include "json.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef BOMBIERI_CLI_PATH
#error "BOMBIERI_CLI_PATH must point at the built CLI"
#endif

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(BOMBIERI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
    auto r = run("--json " + args);
    EXPECT_EQ(r.code, expected_code) << args << "\n" << r.out;
    return nlohmann::json::parse(r.out);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, Norm) {
    auto j = run_json("norm 'x+y' --digits 3");
    EXPECT_EQ(j["norm_squared"], "2/1");
    EXPECT_EQ(j["norm"], "1.414");
    EXPECT_EQ(run_json("norm x1")["norm_squared"], "1/1");
    EXPECT_EQ(run_json("norm 0")["norm_squared"], "0/1");
    auto human = run("norm 'x+y' --digits 3");
    EXPECT_EQ(human.code, 0);
    EXPECT_TRUE(contains(human.out, "||P||^2 = 2"));
    EXPECT_TRUE(contains(human.out, "1.414"));
    EXPECT_EQ(run("norm 'x+'").code, 2);
}

TEST(Cli, Inner) {
    EXPECT_EQ(run_json("inner x1 x2")["inner_product"], "0/1");
    EXPECT_EQ(run_json("inner x1^2 x1^2")["inner_product"], "2/1");
    EXPECT_EQ(run_json("inner 'x+y' 'x+y'")["inner_product"], "2/1");
    EXPECT_EQ(run("--dim 1 inner x1 x2").code, 2);
    EXPECT_EQ(run("inner x1").code, 2);
}

TEST(Cli, ApplyMultiplyDiff) {
    EXPECT_EQ(run("apply x1^2 x1^3").out, "6*x1\n");
    EXPECT_EQ(run("apply 2 x1").out, "2*x1\n");
    EXPECT_EQ(run("apply x2 x1").out, "0\n");
    EXPECT_EQ(run("multiply 'x+y' 'x+y'").out, "x1^2 + 2*x1*x2 + x2^2\n");
    EXPECT_EQ(run("diff 'x1^2*x2' 1 1").out, "2*x1\n");
    EXPECT_EQ(run("diff 'x1^2*x2' 1").out, "2*x1*x2\n");
    EXPECT_EQ(run("diff x1 1 1").code, 2);
}

TEST(Cli, FileArguments) {
    const auto path = std::filesystem::temp_directory_path() / "bombieri_cli_test.poly";
    std::ofstream(path) << "x1 +\n  x2\n";
    EXPECT_EQ(run_json("norm @" + path.string())["norm_squared"], "2/1");
    std::filesystem::remove(path);
    EXPECT_EQ(run("norm @/nonexistent/file.poly").code, 2);
}

TEST(Cli, Certificate) {
    auto j = run_json("certificate 'x+y' 'x+y'");
    EXPECT_EQ(j["certificate"]["terms"].size(), 3u);
    EXPECT_EQ(j["certificate"]["top_sum"], "4/1");
    EXPECT_EQ(j["certificate"]["excess_sum"], "4/1");
    EXPECT_EQ(j["certificate"]["lhs"], "8/1");
    EXPECT_EQ(j["difference"], "4/1");

    auto one = run_json("certificate 1 x1^3");
    ASSERT_EQ(one["certificate"]["terms"].size(), 1u);
    EXPECT_EQ(one["certificate"]["terms"][0]["value"], "6/1");
    EXPECT_EQ(one["certificate"]["excess_sum"], "0/1");

    auto xy = run_json("certificate x1 x2");
    ASSERT_EQ(xy["certificate"]["terms"].size(), 1u);
    EXPECT_EQ(xy["certificate"]["terms"][0]["index"], nlohmann::json::array({1, 0}));
    EXPECT_EQ(xy["certificate"]["lhs"], "1/1");

    auto human = run("certificate 'x+y' 'x+y'");
    EXPECT_TRUE(contains(human.out, "||PQ||^2 - ||P||^2||Q||^2 = excess_sum: 8 - 4 = 4"));
    EXPECT_EQ(run("certificate 0 x").code, 2);
}

TEST(Cli, VerifyInline) {
    auto chu = run_json("verify chu 2 2 2");
    EXPECT_EQ(chu["reports"][0]["lhs"], "6/1");
    EXPECT_EQ(chu["reports"][0]["rhs"], "6/1");
    EXPECT_EQ(chu["reports"][0]["verdict"], true);

    auto b = run_json("verify identity-b 'x+y' 'x+y'");
    EXPECT_EQ(b["reports"][0]["lhs"], "8/1");
    EXPECT_EQ(b["reports"][0]["rhs"], "8/1");

    EXPECT_EQ(run("verify identity-c x 1 x 1").code, 0);
    auto a = run_json("verify inequality-a 'x+y' 'x+y' --with-certificate");
    EXPECT_EQ(a["reports"][0]["difference"], "4/1");
    EXPECT_EQ(a["reports"][0]["certificate"]["excess_sum"], "4/1");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("verify inequality-a 'x^2+x' x").code, 2);
    EXPECT_EQ(run("verify identity-b 'x+y'").code, 2);
    EXPECT_EQ(run("verify chu 2 two 2").code, 2);
    EXPECT_EQ(run("verify nonsense").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("verify identity-c --fuzz --trials 0").code, 2);
    EXPECT_EQ(run("verify identity-c --fuzz --density 3/2").code, 2);
    EXPECT_EQ(run("verify identity-b --fuzz x y").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, FuzzCampaign) {
    auto r = run("--json verify identity-c --fuzz --trials 200 --seed 42 --n 2 --degree 3");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["passed"], 200);
    EXPECT_EQ(j["summary"]["failed"], 0);
    ASSERT_EQ(j["reports"].size(), 200u);
    for (const auto& rep : j["reports"]) {
        EXPECT_EQ(rep["difference"], "0/1");
        EXPECT_TRUE(rep["instance"].contains("seed"));
        EXPECT_LE(rep["instance"]["dimension"].get<int>(), 2);
    }
    EXPECT_EQ(run("--json verify identity-c --fuzz --trials 200 --seed 42 --n 2 --degree 3 --jobs 3").out, r.out);
    EXPECT_NE(run("--json verify identity-c --fuzz --trials 200 --seed 43 --n 2 --degree 3").out, r.out);
}

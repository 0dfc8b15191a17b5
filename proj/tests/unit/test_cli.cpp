#include "excess_tools/cli.hpp"

#include <gtest/gtest.h>

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace excess::tools {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "excess");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, TreesJson) {
    const auto r = cli({"trees", "--genus", "6", "--max-edges", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 24u);
    EXPECT_EQ(j[0]["code"], "1[0[0[1,1],3]]");
    EXPECT_TRUE(j[0].contains("aut"));
}

TEST(Cli, TreesText) {
    const auto r = cli({"trees", "--genus", "4", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1[0[1,2]]"), std::string::npos);
}

TEST(Cli, ContributionBothMethods) {
    const auto r = cli({"contribution", "--genus", "6", "--tree", "1[0[0[1,2],2]]", "--method", "both"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j[0]["recursion"], "15");
    EXPECT_EQ(j[0]["pixton"], "15");
    EXPECT_EQ(j[0]["match"], true);
}

TEST(Cli, ContributionCanonicalizesTree) {
    const auto r = cli({"contribution", "--genus", "6", "--tree", "1[1,0[3,1]]", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1[0[1,3],1]  recursion 6*z1 + 3*z2 + 4*z3 + 4*z4 - 3*c1\n");
}

TEST(Cli, ContributionAllTrees) {
    const auto r = cli({"contribution", "--genus", "5", "--method", "both"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out).size(), 10u);
}

TEST(Cli, PullbackMethodsAgree) {
    const auto a = cli({"pullback", "--genus", "6", "--method", "recursion"});
    const auto b = cli({"pullback", "--genus", "6", "--method", "pixton", "--jobs", "3"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(cli({"pullback", "--genus", "6", "--method", "both"}).code, 0);
}

TEST(Cli, PullbackAdmcycles) {
    const auto r = cli({"pullback", "--genus", "4", "--format", "admcycles"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("# Tor*[A_1 x A_3] on M_4^ct, 4 trees", 0), 0u);
}

TEST(Cli, Ring) {
    const auto r = cli({"ring", "--genus", "4"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["total"], 8);
    EXPECT_EQ(j["socle"]["generator"], "lambda1*lambda2*lambda3");
}

TEST(Cli, ConstantsText) {
    const auto r = cli({"constants", "--genus", "5", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("coefficient 11\n"), std::string::npos);
    EXPECT_EQ(r.out.find("discrepancy"), std::string::npos);
}

TEST(Cli, ConstantsFlagsGenusSix) {
    const auto r = cli({"constants", "--genus", "6"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["coefficient"], "2730/691");
    EXPECT_EQ(j["discrepancy"]["printed"], "2370/691");
}

TEST(Cli, Zeroint) {
    const auto r = cli({"zeroint", "--genus", "5", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sigma (4,1)  excess E4^v(x)E1^v"), std::string::npos);
}

TEST(Cli, VerifyPublished) {
    const auto r = cli({"verify-paper"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("DISCREPANCY"), std::string::npos);
    EXPECT_EQ(cli({"verify-paper", "--strict"}).code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"trees"}).code, 2);
    EXPECT_EQ(cli({"trees", "--genus", "4", "--bogus"}).code, 2);
    EXPECT_EQ(cli({"trees", "--genus", "x"}).code, 2);
    EXPECT_EQ(cli({"trees", "--genus", "1"}).code, 2);
    EXPECT_EQ(cli({"contribution", "--genus", "5", "--method", "magic"}).code, 2);
    EXPECT_EQ(cli({"contribution", "--genus", "5", "--tree", "1[0[1"}).code, 2);
    EXPECT_EQ(cli({"contribution", "--genus", "5", "--tree", "1[2]"}).code, 2);
    EXPECT_EQ(cli({"contribution", "--genus", "5", "--tree", "1[0[1]]"}).code, 2);
    EXPECT_EQ(cli({"pullback", "--genus", "5", "--format", "xml"}).code, 2);
    EXPECT_EQ(cli({"pullback", "--genus", "5", "--jobs", "0"}).code, 2);
    EXPECT_EQ(cli({"trees", "--genus", "5", "--max-edges", "0"}).code, 2);
}

TEST(Cli, Help) {
    const auto r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify-paper"), std::string::npos);
}

TEST(Cli, Deterministic) {
    EXPECT_EQ(cli({"pullback", "--genus", "5"}).out, cli({"pullback", "--genus", "5", "--jobs", "4"}).out);
}

TEST(Cli, CacheDirectory) {
    const auto dir = std::filesystem::temp_directory_path() / "excess-cli-cache-test";
    std::filesystem::remove_all(dir);
    ASSERT_EQ(setenv("EXCESS_CACHE_DIR", dir.c_str(), 1), 0);
    const auto first = cli({"pullback", "--genus", "5"});
    EXPECT_TRUE(std::filesystem::exists(dir / "contributions-g5-recursion.json"));
    const auto second = cli({"pullback", "--genus", "5"});
    EXPECT_EQ(first.out, second.out);
    {
        std::ofstream corrupt(dir / "contributions-g5-recursion.json");
        corrupt << "{ not json";
    }
    EXPECT_EQ(cli({"pullback", "--genus", "5"}).out, first.out);
    unsetenv("EXCESS_CACHE_DIR");
    EXPECT_EQ(cli({"pullback", "--genus", "5"}).out, first.out);
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace excess::tools

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace cli = fewears::cli;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Enumerate) {
    EXPECT_EQ(run({"enumerate", "--n", "4"}).out, "4:0-2\n4:1-3\n");
    EXPECT_EQ(run({"enumerate", "--n", "6", "--ears", "3", "--count-only"}).out, "2\n");
    EXPECT_EQ(run({"enumerate", "--n", "6", "--count-only"}).out, "14\n");
    EXPECT_EQ(run({"enumerate", "--n", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"enumerate", "--n", "6", "--bogus"}).code, cli::kUsage);
    EXPECT_EQ(run({}).code, cli::kUsage);
}

TEST(Cli, Symmetry) {
    EXPECT_EQ(run({"symmetry", "--n", "6..8", "--ears", "2", "--method", "both"}).out, "6  2  2\n7  3  3\n8  6  6\n");
    EXPECT_EQ(run({"symmetry", "--n", "6", "--ears", "all"}).out, "6  3\n");
    EXPECT_EQ(run({"symmetry", "--n", "9", "--ears", "3"}).out, "9  14\n");
    const Invocation bad = run({"symmetry", "--n", "4..5", "--ears", "2", "--method", "closed"});
    EXPECT_EQ(bad.code, cli::kUsage);
    EXPECT_NE(bad.err.find("n=4"), std::string::npos);
    const Invocation json = run({"symmetry", "--n", "5..7", "--ears", "2", "--format", "json"});
    ASSERT_EQ(json.code, 0);
    EXPECT_EQ(nlohmann::json::parse(json.out).at("rows").size(), 3u);
}

TEST(Cli, Disjoint) {
    EXPECT_EQ(run({"disjoint", "--arrow", "--n", "6", "--method", "both"}).out, "5 5\n");
    const Invocation pqr = run({"disjoint", "--type", "1,1,2", "--n", "7", "--method", "both"});
    EXPECT_EQ(pqr.code, 0);
    EXPECT_EQ(pqr.out.substr(0, pqr.out.find('\n')), "11 11");
    EXPECT_NE(pqr.out.find("ERRATUM"), std::string::npos);
    EXPECT_NE(pqr.out.find("got=5"), std::string::npos);
    EXPECT_EQ(run({"disjoint", "--t", "6:0-2,2-4,0-4", "--method", "brute"}).out, "4\n");
    EXPECT_EQ(run({"disjoint", "--snake", "--n", "11", "--method", "formula"}).out, "1430\n");

    const Invocation four_ears = run({"disjoint", "--t", "8:0-2,2-4,4-6,0-6,0-4", "--method", "formula"});
    EXPECT_EQ(four_ears.code, cli::kUsage);
    EXPECT_FALSE(four_ears.err.empty());
    EXPECT_EQ(run({"disjoint", "--t", "6:0-2,1-3,0-4"}).code, cli::kUsage);
    EXPECT_EQ(run({"disjoint", "--arrow"}).code, cli::kUsage);
}

TEST(Cli, Sequence) {
    EXPECT_EQ(run({"sequence", "--what", "sym2", "--n", "5..10"}).out, "1\n2\n3\n6\n10\n20\n");
    EXPECT_EQ(run({"sequence", "--what", "disj2", "--n", "4..9"}).out, "1\n2\n5\n14\n42\n132\n");
    EXPECT_EQ(run({"sequence", "--what", "catalan", "--n", "0..6"}).out, "1\n1\n2\n5\n14\n42\n132\n");
    EXPECT_EQ(run({"sequence", "--what", "hurtado-noy:3", "--n", "6..8"}).out, "2\n14\n64\n");
    EXPECT_EQ(run({"sequence", "--what", "sym3", "--n", "4..6"}).code, cli::kUsage);
    EXPECT_EQ(run({"sequence", "--what", "bogus", "--n", "4"}).code, cli::kUsage);
}

TEST(Cli, VerifyDeterministicAndExitCodes) {
    const Invocation a = run({"verify", "--max-n", "8", "--threads", "1"});
    const Invocation b = run({"verify", "--max-n", "8", "--threads", "3"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("ERRATUM  pqr-printed"), std::string::npos);
    EXPECT_EQ(run({"verify", "--suite", "compositions", "--max-n", "16"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--list"}).code, 0);
    const Invocation json = run({"verify", "--suite", "core", "--max-n", "6", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(json.out).at("suites").size(), 1u);
}

TEST(Cli, Svg) {
    const auto dir = std::filesystem::temp_directory_path() / "fewears_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "snake11.svg";
    EXPECT_EQ(run({"svg", "--snake", "--n", "11", "--out", path.string()}).code, 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_NE(buf.str().find("<svg"), std::string::npos);
    const Invocation inl = run({"svg", "--t", "6:0-2,2-4,0-4", "--highlight", "internal"});
    EXPECT_NE(inl.out.find("class=\"internal\""), std::string::npos);
    EXPECT_EQ(run({"svg", "--arrow", "--n", "8", "--out", "/nonexistent-dir/x.svg"}).code, cli::kUsage);
    std::filesystem::remove_all(dir);
}

TEST(Cli, ParseRange) {
    EXPECT_EQ(cli::parse_range("5..10"), (std::pair<int, int>{5, 10}));
    EXPECT_EQ(cli::parse_range("7"), (std::pair<int, int>{7, 7}));
    EXPECT_THROW(cli::parse_range("10..5"), std::exception);
    EXPECT_THROW(cli::parse_range("a..b"), std::exception);
}

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <gtest/gtest.h>

#include "gfd/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gfd::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("gfd_cli_" + std::to_string(::getpid()) + "_" + name)).string();
}

int count_lines(const std::string& path) {
    std::ifstream in(path);
    int n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    return n;
}

}  // namespace

TEST(Cli, Deriv) {
    const auto r = run({"deriv", "--expr", "t^2", "--alpha", "0.5", "--strategy", "alpha", "--at", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    // 2 Gamma(1/2) t^(3/2) at t = 1
    EXPECT_NE(r.out.find("3.5449077018110"), std::string::npos) << r.out;
}

TEST(Cli, DerivFixedNeedsBeta) {
    const auto r = run({"deriv", "--expr", "t^2", "--alpha", "0.5", "--at", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--beta"), std::string::npos);
}

TEST(Cli, Integrate) {
    const auto r = run({"integrate", "--expr", "1", "--alpha", "0.5", "--strategy", "alpha", "--to", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    // t^a / (a Gamma(a)) at t = 1, a = 1/2: 2/sqrt(pi)
    EXPECT_NE(r.out.find("1.128379167"), std::string::npos) << r.out;
}

TEST(Cli, SolveMethods) {
    const auto path = temp_path("solve.csv");
    for (const std::vector<std::string>& extra :
         {std::vector<std::string>{"--problem", "riccati1", "--method", "closed"},
          std::vector<std::string>{"--problem", "riccati2", "--alpha", "0.9", "--method", "numeric"},
          std::vector<std::string>{"--problem", "example1", "--method", "series"},
          std::vector<std::string>{"--problem", "example4", "--lambda", "2", "--method", "numeric"}}) {
        std::vector<std::string> args{"solve", "--grid", "64", "--out", path};
        args.insert(args.end(), extra.begin(), extra.end());
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(count_lines(path), 66);
    }
    std::filesystem::remove(path);
}

TEST(Cli, SolveRejectsUnsupportedMethod) {
    const auto r = run({"solve", "--problem", "example3", "--method", "closed", "--out", temp_path("x.csv")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(run({"solve", "--problem", "nope", "--out", temp_path("x.csv")}).code, 0);
}

TEST(Cli, Table) {
    const auto path = temp_path("table.csv");
    const auto r = run({"table", "--id", "2", "--out", path});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(count_lines(path), 7);
    EXPECT_EQ(run({"table", "--id", "2", "--tolerance", "1e-9", "--out", path}).code, 1);
    std::filesystem::remove(path);
}

TEST(Cli, Figure) {
    const auto path = temp_path("figure.csv");
    const auto r = run({"figure", "--id", "3", "--out", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(path), 101);
    EXPECT_EQ(run({"figure", "--id", "1", "--out", "/nonexistent_dir_for_gfd/f.csv"}).code, 2);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyFilter) {
    const auto r = run({"verify", "--filter", "rolle"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[PASS] rolle"), std::string::npos);
    EXPECT_EQ(run({"verify", "--filter", "table3", "--inject-conformable"}).code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_NE(run({}).code, 0);
    EXPECT_NE(run({"frobnicate"}).code, 0);
    EXPECT_NE(run({"table", "--id", "7", "--out", "x"}).code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
}

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "harmonic/cli.hpp"

using harmonic::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "harmonic_embed");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = harmonic::cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json strip_runtime(const std::string& text)
{
    json j = json::parse(text);
    j.erase("runtime_ms");
    return j;
}

std::vector<std::array<double, 3>> csv_rows(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "r,theta,log_theta_prime");
    std::vector<std::array<double, 3>> rows;
    while (std::getline(is, line)) {
        std::array<double, 3> r{};
        EXPECT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf", &r[0], &r[1], &r[2]), 3);
        rows.push_back(r);
    }
    return rows;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("harmonic_embed_test_" + name);
}

} // namespace

TEST(Cli, ConstantsJson)
{
    const auto r = invoke({"constants", "--n", "4", "--k", "3/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "harmonic-embed/1");
    EXPECT_EQ(j["command"], "constants");
    EXPECT_EQ(j["params"]["n"], 4);
    EXPECT_EQ(j["params"]["k"], "3/2");
    EXPECT_EQ(j["status"], "pass");
    ASSERT_TRUE(j.contains("runtime_ms"));
    EXPECT_EQ(std::prev(j.end()).key(), "runtime_ms");
    const std::string dump = j.dump();
    EXPECT_NE(dump.find("\"-3\""), std::string::npos);
    EXPECT_NE(dump.find("\"1/3\""), std::string::npos);
}

TEST(Cli, DecimalKIsExact)
{
    const auto a = invoke({"constants", "--n", "4", "--k", "1.5"});
    const auto b = invoke({"constants", "--n", "4", "--k", "3/2"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(strip_runtime(a.out), strip_runtime(b.out));
}

TEST(Cli, SubcommandsPass)
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"lemma2"}, {"na"}, {"na", "--p", "6", "--q", "2"}, {"ode-check"},
          {"gram"}, {"gram", "--model", "hyperboloid", "--points", "12"}, {"embed-check"}, {"report"},
          {"report", "--format", "text"}, {"report", "--format", "csv"}}) {
        const auto r = invoke(args);
        EXPECT_EQ(r.code, 0) << args.front() << ": " << r.err;
    }
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(invoke({"constants", "--k", "abc"}).code, 2);
    EXPECT_EQ(invoke({"constants", "--k", "0"}).code, 2);
    EXPECT_EQ(invoke({"constants", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"density", "--step", "0"}).code, 2);
    EXPECT_EQ(invoke({"embed-check", "--h", "0.5"}).code, 2);
    EXPECT_EQ(invoke({"report", "--format", "yaml"}).code, 2);
    EXPECT_EQ(invoke({"gram", "--model", "sphere"}).code, 2);
    EXPECT_EQ(invoke({"lemma2", "--s", "1,2"}).code, 2);
    EXPECT_EQ(invoke({"na", "--p", "2"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, DegenerateLemma2ExitsOne)
{
    const auto r = invoke({"lemma2", "--s", "0,0,1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(json::parse(r.out)["status"], "fail");
}

TEST(Cli, OutputIsReproducible)
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"report"}, {"embed-check", "--seed", "7"}, {"gram", "--model", "hyperboloid"}}) {
        EXPECT_EQ(strip_runtime(invoke(args).out), strip_runtime(invoke(args).out)) << args.front();
    }
    EXPECT_NE(strip_runtime(invoke({"embed-check", "--seed", "7"}).out),
              strip_runtime(invoke({"embed-check", "--seed", "8"}).out));
}

TEST(Cli, DensityTables)
{
    const auto a = invoke({"density", "--n", "3", "--k", "2", "--step", "0.25", "--r-max", "4"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto rows = csv_rows(a.out);
    ASSERT_EQ(rows.size(), 16u);
    for (const auto& r : rows) {
        const double expected = std::sinh(r[0]) * std::sinh(r[0]);
        EXPECT_LT(std::abs(r[1] - expected) / expected, 1e-13) << r[0];
    }

    const auto b = invoke({"density", "--n", "5", "--k", "1", "--step", "0.5", "--r-max", "1"});
    ASSERT_EQ(b.code, 0);
    const auto brows = csv_rows(b.out);
    ASSERT_EQ(brows.size(), 2u);
    EXPECT_EQ(brows[1][0], 1.0);
    EXPECT_NEAR(brows[1][2], 2.0 / std::tanh(0.5), 1e-14);

    const auto c = invoke({"density", "--format", "json", "--r-max", "1"});
    ASSERT_EQ(c.code, 0);
    const json j = json::parse(c.out);
    EXPECT_EQ(j["rows"].size(), 20u);
}

TEST(Cli, OutputFileAndEnvironmentOverride)
{
    const auto file = temp_file("out.json");
    std::filesystem::remove(file);
    const auto r = invoke({"constants", "--output", file.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(json::parse(ss.str())["command"], "constants");

    const auto env_file = temp_file("env.json");
    std::filesystem::remove(env_file);
    ::setenv("HARMONIC_EMBED_OUTPUT", env_file.string().c_str(), 1);
    const auto e = invoke({"lemma2"});
    ::unsetenv("HARMONIC_EMBED_OUTPUT");
    ASSERT_EQ(e.code, 0);
    EXPECT_TRUE(e.out.empty());
    EXPECT_TRUE(std::filesystem::exists(env_file));

    EXPECT_EQ(invoke({"constants", "--output", "/nonexistent-dir/x.json"}).code, 2);
    std::filesystem::remove(file);
    std::filesystem::remove(env_file);
}

TEST(Cli, PointsOut)
{
    const auto file = temp_file("points.csv");
    const auto r = invoke({"gram", "--model", "hyperboloid", "--points", "5", "--points-out", file.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(file);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x0,x1,x2,x3");
    int count = 0;
    while (std::getline(in, line)) ++count;
    EXPECT_EQ(count, 5);
    std::filesystem::remove(file);
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "superint/cli/commands.hpp"

using namespace superint;
using superint::cli::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "superint");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST(ParseComplex, Forms) {
    EXPECT_EQ(cli::parse_complex("1.5"), cd(1.5, 0));
    EXPECT_EQ(cli::parse_complex("2i"), cd(0, 2));
    EXPECT_EQ(cli::parse_complex("1.2+0.3i"), cd(1.2, 0.3));
    EXPECT_EQ(cli::parse_complex("1e-1-2e+0i"), cd(0.1, -2));
    EXPECT_EQ(cli::parse_complex("-i"), cd(0, -1));
    EXPECT_THROW(cli::parse_complex("1+x"), cli::UsageError);
}

TEST(Simulate, CsvHeaderAndRows) {
    auto r = run({"simulate", "--family", "ttw", "--k", "2/1", "--steps", "4", "--dt", "0.01"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(ls[0], "t,chart,q1,q2,p1,p2,H_re,H_im,L2_re,L2_im");
    EXPECT_EQ(ls[1].rfind("0,cartesian,", 0), 0u);
}

TEST(Simulate, ZeroStepsGivesOneRow) {
    auto r = run({"simulate", "--k", "3/2", "--steps", "0"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 2u);
}

TEST(Simulate, HoloAddsImaginaryColumnsAndConstants) {
    auto r = run({"simulate", "--family", "holo", "--a", "1.2+0.3i", "--k", "3", "--chart", "polar", "--start",
                  "1,0.2,0.3,0.5", "--steps", "2", "--constants"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out)[0], "t,chart,q1,q2,p1,p2,q1_im,q2_im,p1_im,p2_im,H_re,H_im,L_re,L_im,C_re,C_im,D_re,D_im");
}

TEST(Simulate, Deterministic) {
    std::vector<std::string> args{"simulate", "--k", "3/2", "--steps", "200", "--integrator", "leapfrog"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Simulate, UsageErrors) {
    auto missing = run({"simulate", "--family", "ttw"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("--k"), std::string::npos);
    EXPECT_NE(missing.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"simulate", "--k", "1.5"}).code, 2);
    EXPECT_EQ(run({"simulate", "--k", "2", "--family", "kepler"}).code, 2);
    EXPECT_EQ(run({"simulate", "--k", "2", "--chart", "spherical"}).code, 2);
    EXPECT_EQ(run({"simulate", "--k", "2", "--dt", "0"}).code, 2);
    EXPECT_EQ(run({"simulate", "--k", "2", "--start", "1,2,3"}).code, 2);
    EXPECT_EQ(run({"simulate", "--family", "holo", "--k", "3", "--integrator", "leapfrog"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Simulate, SingularStartIsAFailure) {
    // theta = 0 lies on a barrier wall
    auto r = run({"simulate", "--k", "2", "--chart", "polar", "--start", "1,0,0.1,0.1", "--c", "1"});
    EXPECT_EQ(r.code, 1);
}

TEST(Config, FileValuesAreOverriddenByFlags) {
    auto cfg = temp_file("superint_cfg.json", R"({"family": "ttw", "k": "2/1", "steps": 5, "dt": 0.01})");
    auto r = run({"simulate", "--config", cfg.string(), "--steps", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 3u);
    auto bad = temp_file("superint_bad.json", "{nope");
    EXPECT_EQ(run({"simulate", "--config", bad.string()}).code, 2);
    EXPECT_EQ(run({"simulate", "--config", "/nonexistent/file.json"}).code, 2);
}

TEST(VerifyConstants, ReportSchemaAndDeterminism) {
    std::vector<std::string> args{"verify-constants", "--family", "ttw", "--k", "3/2", "--points", "10", "--no-drift"};
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out, run(args).out);
    json j = json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "version", "conventions", "checks"}));
    for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass");
}

TEST(VerifyConstants, CorruptedNormalizerFails) {
    auto r = run({"verify-constants", "--k", "3/2", "--points", "10", "--no-drift", "--corrupt-normalizer", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("\"fail\""), std::string::npos);
}

TEST(VerifyAlgebra, SuitesAndErrors) {
    EXPECT_EQ(run({"verify-algebra", "holo-k3-classical"}).code, 0);
    EXPECT_EQ(run({"verify-algebra", "ttw-general(1,2)"}).code, 0);
    EXPECT_EQ(run({"verify-algebra", "ttw-general", "2", "1"}).code, 0);
    EXPECT_EQ(run({"verify-algebra", "ttw-general", "2", "4"}).code, 2);
    EXPECT_EQ(run({"verify-algebra", "ttw-general"}).code, 2);
    EXPECT_EQ(run({"verify-algebra", "no-such-suite"}).code, 2);
    EXPECT_EQ(run({"verify-algebra"}).code, 2);
}

TEST(ScanOrbits, TableAndRationalFlag) {
    auto r = run({"scan-orbits", "--k-list", "1,3/2,1.414213562", "--starts", "1", "--horizon", "15"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j["cells"].size(), 3u);
    EXPECT_TRUE(j["cells"][0]["rational"].get<bool>());
    EXPECT_TRUE(j["cells"][0]["closed"].get<bool>());
    EXPECT_FALSE(j["cells"][2]["rational"].get<bool>());
    EXPECT_FALSE(j["cells"][2]["closed"].get<bool>());
    EXPECT_EQ(run({"scan-orbits", "--k-list", ""}).code, 2);
    EXPECT_EQ(run({"scan-orbits", "--k-list", "1,,2"}).code, 2);
    EXPECT_EQ(run({"scan-orbits", "--k-list", "-1"}).code, 2);
}

TEST(Repair, JsonAndExitCodes) {
    auto r = run({"repair", "c2-classical"});
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["status"], "unique");
    EXPECT_TRUE(j["certified"].get<bool>());
    EXPECT_EQ(j["unknowns"][0]["value"], "8");
    EXPECT_EQ(run({"repair", "bogus"}).code, 2);
}

TEST(Binary, OutFileAndExitCode) {
    auto out = std::filesystem::temp_directory_path() / "superint_repair.json";
    std::filesystem::remove(out);
    std::string cmd = std::string(SUPERINT_CLI_PATH) + " repair k1-holo --out " + out.string() + " > /dev/null 2>&1";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_TRUE(std::filesystem::exists(out));
    std::string bad = std::string(SUPERINT_CLI_PATH) + " simulate > /dev/null 2>&1";
    int status = std::system(bad.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
}

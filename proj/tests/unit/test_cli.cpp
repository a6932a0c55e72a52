#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "osclab/cli.hpp"
#include "osclab/io.hpp"

using namespace osclab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(OSCLAB_TEST_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("osclab_cli_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(Cli, GeometrySquare) {
    auto r = cli({"geometry", "--domain", data("square.json")});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto j = json::parse(r.out);
    EXPECT_NEAR(j["d"].get<double>(), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(j["w"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["h"].get<double>(), 1.0, 1e-6);
    ASSERT_EQ(j["vertices"].size(), 4u);
    for (auto& v : j["vertices"]) EXPECT_NEAR(v["omega"].get<double>(), pi / 2, 1e-12);
}

TEST(Cli, GeometryDisk) {
    auto r = cli({"geometry", "--domain", data("disk.json")});
    ASSERT_EQ(r.code, exit_ok);
    auto j = json::parse(r.out);
    EXPECT_DOUBLE_EQ(j["h"].get<double>(), 2.0);
    EXPECT_TRUE(j["vertices"].empty());
}

TEST(Cli, InvalidDomainsExitTwo) {
    auto r = cli({"geometry", "--domain", data("nonconvex.json")});
    EXPECT_EQ(r.code, exit_input_error);
    EXPECT_NE(r.err.find("vertex 2"), std::string::npos);
    EXPECT_EQ(cli({"geometry", "--domain", data("clockwise.json")}).code, exit_input_error);
    EXPECT_EQ(cli({"geometry", "--domain", data("degenerate.json")}).code, exit_input_error);
    EXPECT_EQ(cli({"geometry", "--domain", data("missing.json")}).code, exit_input_error);
    EXPECT_EQ(cli({"geometry"}).code, exit_input_error);
}

TEST(Cli, AuditPassesAndWritesJsonLines) {
    auto dir = scratch("audit");
    auto r = cli({"audit", "--id", "nikolskii", "--trials", "10", "--q", "1,2", "--out", dir.string()});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto summary = json::parse(r.err);
    EXPECT_EQ(summary["fail"], 0);
    EXPECT_EQ(summary["pass"], 10);
    auto manifest = json::parse(slurp(dir / "manifest.json"));
    std::istringstream lines(slurp(dir / "audit_nikolskii.jsonl"));
    int count = 0;
    for (std::string line; std::getline(lines, line); ++count)
        EXPECT_EQ(json::parse(line)["manifest"], manifest["hash"]);
    EXPECT_EQ(count, 10);
}

TEST(Cli, AuditUnknownIdExitsTwo) { EXPECT_EQ(cli({"audit", "--id", "bogus"}).code, exit_input_error); }

TEST(Cli, AuditOutputIsReproducible) {
    auto a = cli({"audit", "--id", "hset", "--trials", "6", "--seed", "5"});
    auto b = cli({"audit", "--id", "hset", "--trials", "6", "--seed", "5"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(Cli, SearchWritesOutputs) {
    auto dir = scratch("search");
    auto r = cli({"search", "--domain", data("square.json"), "--n", "3", "--budget", "600", "--out", dir.string()});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NE(r.out.find("best_M"), std::string::npos);
    auto j = json::parse(slurp(dir / "search.json"));
    EXPECT_LT(j["best_M"].get<double>(), 15 * 3 / std::sqrt(2.0));
    EXPECT_EQ(slurp(dir / "trace.csv").rfind("# manifest " + j["manifest"].get<std::string>(), 0), 0u);
}

TEST(Cli, SearchIncompleteExitsFour) {
    auto sq = ConvexDomain::rectangle(1, 1);
    SearchResult stuck;
    stuck.best_M = 15 * 4 / sq.diameter();
    auto upper = upper_witness_check(sq, 4, 2.0, stuck);
    EXPECT_EQ(upper.note, "SEARCH-INCOMPLETE");
    EXPECT_EQ(search_exit_code(upper), exit_search_incomplete);
    stuck.best_M *= 0.999;
    EXPECT_EQ(search_exit_code(upper_witness_check(sq, 4, 2.0, stuck)), exit_ok);
}

TEST(Cli, SearchBudgetTooSmallExitsTwo) {
    EXPECT_EQ(cli({"search", "--domain", data("square.json"), "--n", "4", "--budget", "10"}).code, exit_input_error);
}

TEST(Cli, CoveringDiskAndSquare) {
    auto r = cli({"covering", "--domain", data("disk.json"), "--r", "0.01"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NE(r.out.find("k0 0"), std::string::npos);
    auto s = cli({"covering", "--domain", data("square.json"), "--r", "0.004"});
    ASSERT_EQ(s.code, exit_ok) << s.err;
    EXPECT_NE(s.out.find("invariants ok"), std::string::npos);
}

TEST(Cli, CoveringTooLargeExitsFive) {
    auto r = cli({"covering", "--domain", data("square.json"), "--r", "1.0"});
    EXPECT_EQ(r.code, exit_covering_failure);
    EXPECT_NE(r.err.find("largest r"), std::string::npos);
}

TEST(Cli, TableFromManifests) {
    auto dir = scratch("table");
    std::vector<std::string> manifests;
    for (int n : {2, 3}) {
        auto sub = dir / ("n" + std::to_string(n));
        auto r = cli({"search", "--domain", data("disk.json"), "--n", std::to_string(n), "--budget", "400", "--out",
                      sub.string()});
        ASSERT_EQ(r.code, exit_ok);
        manifests.push_back((sub / "manifest.json").string());
    }
    std::vector<std::string> args{"table"};
    for (auto& m : manifests) args.insert(args.end(), {"--manifest", m});
    auto t = cli(args);
    ASSERT_EQ(t.code, exit_ok) << t.err;
    std::istringstream rows(t.out);
    std::string header, line;
    std::getline(rows, header);
    EXPECT_EQ(header, "domain,n,q,best_M,half_n,upper_15n_over_d,corollary_001,nlogn_floor");
    int count = 0;
    while (std::getline(rows, line)) ++count;
    EXPECT_EQ(count, 2);
}

TEST(Cli, TableWithoutManifestsExitsTwo) {
    EXPECT_EQ(cli({"table"}).code, exit_input_error);
    EXPECT_EQ(cli({"table", "--manifest", "/nonexistent/manifest.json"}).code, exit_input_error);
}

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace evenzeta {
namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "evenzeta");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<OutputRecord> parse_json_lines(const std::string& text) {
    std::vector<OutputRecord> out;
    for (const auto& line : lines(text)) {
        out.push_back(record_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

std::vector<OutputRecord> parse_csv(const std::string& text) {
    auto rows = lines(text);
    EXPECT_FALSE(rows.empty());
    EXPECT_EQ(rows.front(), csv_header());
    std::vector<OutputRecord> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        out.push_back(record_from_csv(rows[i]));
    }
    return out;
}

TEST(Cli, ExactZetaFour) {
    const auto r = run_cli({"--format", "json-lines", "zeta", "--k", "2", "--exact"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(lines(r.out).at(0));
    EXPECT_EQ(j["kind"], "ratio");
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["numerator"], "1");
    EXPECT_EQ(j["denominator"], "90");
    EXPECT_FALSE(j.contains("decimal"));
}

TEST(Cli, DecimalZetaTwo) {
    const auto r = run_cli({"zeta", "--k", "1", "--digits", "12", "--format", "json-lines"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(lines(r.out).at(0));
    EXPECT_EQ(j["kind"], "decimal");
    EXPECT_EQ(j["decimal"], "1.64493406685");
    EXPECT_EQ(j["digits"], 12);
}

TEST(Cli, RationalsAreStrings) {
    const auto r = run_cli({"--format", "json-lines", "zeta", "--kmax", "30", "--exact"});
    ASSERT_EQ(r.status, 0);
    const auto recs = lines(r.out);
    ASSERT_EQ(recs.size(), 30u);
    const auto j = nlohmann::json::parse(recs.back());
    EXPECT_TRUE(j["numerator"].is_string());
    EXPECT_TRUE(j["denominator"].is_string());
    EXPECT_EQ(Rational(Integer(j["numerator"].get<std::string>()), Integer(j["denominator"].get<std::string>())),
              zeta_even_ratio(30));
}

TEST(Cli, BernoulliAndEulerPoly) {
    auto r = run_cli({"bernoulli", "--n", "12"});
    EXPECT_EQ(r.out, "bernoulli n=12 numerator=-691 denominator=2730\n");
    r = run_cli({"euler-poly", "--m", "4", "--at", "1"});
    EXPECT_EQ(r.out, "euler_poly m=4 x=1 numerator=0 denominator=1\n");
    r = run_cli({"euler-poly", "--m", "1"});
    EXPECT_EQ(r.out, "euler_poly m=1 n=0 numerator=-1 denominator=2\neuler_poly m=1 n=1 numerator=1 denominator=1\n");
}

TEST(Cli, PhiRoutes) {
    auto r = run_cli({"phi", "--m", "1", "--u", "2", "--route", "taylor"});
    EXPECT_EQ(r.out, "phi m=1 u=2 numerator=4 denominator=9\n");
    r = run_cli({"--format", "json-lines", "phi", "--m", "-2", "--u", "3/2"});
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(lines(r.out).at(0));
    EXPECT_EQ(j["m"], -2);
    EXPECT_EQ(j["u"], "3/2");
    EXPECT_TRUE(j.contains("decimal"));
    EXPECT_TRUE(j.contains("terms"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).status, cli::kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).status, cli::kExitUsage);
    EXPECT_EQ(run_cli({"zeta", "--k", "1", "--bogus"}).status, cli::kExitUsage);
    EXPECT_EQ(run_cli({"zeta"}).status, cli::kExitUsage);
    EXPECT_EQ(run_cli({"zeta", "--k", "1", "--kmax", "3"}).status, cli::kExitUsage);
    EXPECT_EQ(run_cli({"--format", "xml", "zeta", "--k", "1"}).status, cli::kExitUsage);
    EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).status, cli::kExitUsage);
    const auto bad_u = run_cli({"phi", "--m", "1", "--u", "1"});
    EXPECT_EQ(bad_u.status, cli::kExitUsage);
    EXPECT_TRUE(bad_u.out.empty());
    EXPECT_FALSE(bad_u.err.empty());
    EXPECT_NE(run_cli({"frobnicate"}).err.find("Usage"), std::string::npos);
}

TEST(Cli, JsonLinesAndCsvCarryIdenticalPayloads) {
    const std::vector<std::vector<std::string>> commands{
        {"zeta", "--kmax", "6", "--exact"},
        {"zeta", "--k", "3", "--digits", "20"},
        {"bernoulli", "--n", "20"},
        {"euler-poly", "--m", "5"},
        {"euler-poly", "--m", "5", "--at", "1/3"},
        {"phi", "--m", "3", "--u", "5/2"},
        {"verify", "--suite", "expansion", "--jmax", "4", "--digits", "20"},
        {"verify", "--suite", "recurrence", "--kmax", "12", "--terms", "100"},
    };
    for (const auto& cmd : commands) {
        auto json_args = cmd;
        json_args.insert(json_args.end(), {"--format", "json-lines"});
        auto csv_args = cmd;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        const auto j = run_cli(json_args);
        const auto c = run_cli(csv_args);
        EXPECT_EQ(j.status, c.status);
        const auto jr = parse_json_lines(j.out);
        const auto cr = parse_csv(c.out);
        EXPECT_FALSE(jr.empty());
        EXPECT_EQ(jr, cr) << cmd.front();
    }
}

TEST(Cli, IdenticalInvocationsAreByteIdentical) {
    const std::vector<std::string> cmd{"--format", "json-lines", "verify", "--suite", "recurrence", "--kmax", "20"};
    EXPECT_EQ(run_cli(cmd).out, run_cli(cmd).out);
    const std::vector<std::string> phi{"phi", "--m", "-3", "--u", "11/10"};
    EXPECT_EQ(run_cli(phi).out, run_cli(phi).out);
}

TEST(Cli, ExitStatusFollowsReports) {
    for (const auto& suite : {"recurrence", "expansion"}) {
        const auto r = run_cli({"--format", "json-lines", "verify", "--suite", suite, "--kmax", "20", "--digits", "30"});
        bool any_failed = false;
        for (const auto& rec : parse_json_lines(r.out)) {
            ASSERT_TRUE(rec.passed.has_value());
            any_failed = any_failed || !*rec.passed;
        }
        EXPECT_EQ(r.status == cli::kExitFailedCheck, any_failed) << suite;
        EXPECT_TRUE(r.status == 0 || r.status == cli::kExitFailedCheck);
    }
    // Under-truncated expansion always fails.
    EXPECT_EQ(run_cli({"verify", "--suite", "expansion", "--jmax", "2"}).status, cli::kExitFailedCheck);
    EXPECT_EQ(run_cli({"verify", "--suite", "recurrence", "--kmax", "50"}).status, 0);
}

TEST(Cli, VerifyAllIsOrderedBySuite) {
    const auto r = run_cli({"--format", "json-lines", "verify", "--suite", "all", "--kmax", "50", "--digits", "20"});
    const auto recs = parse_json_lines(r.out);
    ASSERT_FALSE(recs.empty());
    std::vector<std::string> order;
    for (const auto& rec : recs) {
        if (order.empty() || order.back() != *rec.identity) {
            order.push_back(*rec.identity);
        }
    }
    const std::vector<std::string> expected{"recurrence_vs_euler", "zeta_bracket", "expansion", "abel_limit",
                                            "phi_series_vs_taylor", "phi0_closed_form", "phi_boundary_limit"};
    EXPECT_EQ(order, expected);
    EXPECT_EQ(recs.front().k, 50);
}

TEST(Cli, BenchEmitsOneRecordPerEntry) {
    const auto r = run_cli({"--format", "json-lines", "bench", "--kmax", "5"});
    ASSERT_EQ(r.status, 0);
    const auto recs = parse_json_lines(r.out);
    ASSERT_EQ(recs.size(), 5u);
    EXPECT_EQ(recs[4].k, 5);
    EXPECT_TRUE(recs[4].seconds.has_value());
}

}  // namespace
}  // namespace evenzeta

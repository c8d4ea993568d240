#include "schmidt/cli.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "gtest/gtest.h"

#ifndef SCHMIDT_CLI_PATH
#error "SCHMIDT_CLI_PATH must point at the built schmidt executable"
#endif

namespace schmidt::cli {
namespace {

struct Process {
  std::string out;
  int exit_code = -1;
};

Process Spawn(const std::string& args) {
  const std::string cmd = std::string(SCHMIDT_CLI_PATH) + " " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) p.exit_code = WEXITSTATUS(status);
  return p;
}

RunConfig Compute(unsigned r, std::size_t n_max, Format format = Format::plain) {
  RunConfig c;
  c.command = Command::compute;
  c.r = r;
  c.n_max = n_max;
  c.format = format;
  return c;
}

TEST(Compute, PlainFranel) {
  const CommandOutput out = run(Compute(2, 4));
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.text, "1 2 10 56 346\n");
}

TEST(Compute, PlainTrivialExponent) {
  EXPECT_EQ(run(Compute(1, 3)).text, "1 1 1 1\n");
}

TEST(Compute, JsonUsesDecimalStrings) {
  const CommandOutput out = run(Compute(4, 2, Format::json));
  ASSERT_EQ(out.exit_code, kExitOk);
  const Json doc = Json::parse(out.text);
  EXPECT_EQ(doc["command"], "compute");
  EXPECT_EQ(doc["params"]["r"], 4);
  EXPECT_TRUE(doc["results"]["routes_agree"].get<bool>());
  EXPECT_TRUE(doc["failures"].empty());
  ASSERT_EQ(doc["results"]["routes"].size(), 3u);
  for (const auto& route : doc["results"]["routes"]) {
    const auto& values = route["values"];
    ASSERT_EQ(values.size(), 3u);
    EXPECT_EQ(values[0]["c"], "1");
    EXPECT_EQ(values[1]["c"], "8");
    EXPECT_EQ(values[2]["c"], "424");
    EXPECT_EQ(values[2]["n"], 2);
  }
}

TEST(Compute, CsvHasOneColumnPerRoute) {
  RunConfig c = Compute(3, 2, Format::csv);
  c.routes = {Route::definition, Route::closed};
  EXPECT_EQ(run(c).text, "n,definition,closed\n0,1,1\n1,4,4\n2,68,68\n");
}

TEST(TTable, RowsAndRatios) {
  RunConfig c;
  c.command = Command::t_table;
  c.r = 3;
  c.n_max = 2;
  c.format = Format::csv;
  const CommandOutput out = run(c);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.text, "n,j,t,ratio\n0,0,1,1\n1,0,0,0\n1,1,1,1\n2,0,0,0\n2,1,24,8\n2,2,1,1\n");

  c.r = 2;
  c.format = Format::json;
  const Json doc = Json::parse(run(c).text);
  const auto& rows = doc["results"];
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[3]["t"], "0");
  EXPECT_EQ(rows[4]["t"], "6");
  EXPECT_EQ(rows[4]["ratio"], "2");
  EXPECT_EQ(rows[5]["ratio"], "1");
}

TEST(Verify, SmallSweeps) {
  RunConfig c;
  c.command = Command::verify;
  c.r_max = 5;
  c.n_max = 6;
  c.format = Format::json;
  const CommandOutput out = run(c);
  EXPECT_EQ(out.exit_code, kExitOk) << out.text;
  const Json doc = Json::parse(out.text);
  EXPECT_GT(doc["results"]["checks_run"].get<std::size_t>(), 100u);
  EXPECT_TRUE(doc["results"]["r1_ratios_integral"].get<bool>());

  c.r_max = 1;
  c.n_max = 5;
  EXPECT_EQ(run(c).exit_code, kExitOk);
  c.r_max = 5;
  c.n_max = 0;
  EXPECT_EQ(run(c).exit_code, kExitOk);
}

TEST(Verify, FailureCarriesWitness) {
  VerificationReport report;
  report.check(true, "fine", Json{{"n", 1}});
  report.check(false, "broken", Json{{"n", 2}});
  EXPECT_EQ(report.checks_run, 2u);
  ASSERT_EQ(report.failures.size(), 1u);
  RunConfig c;
  c.command = Command::verify;
  c.format = Format::plain;
  const std::string text = detail::render_report(c, report, Json::object());
  EXPECT_NE(text.find("FAIL broken {\"n\":2}"), std::string::npos);
}

TEST(Identities, SeededRunsAreReproducible) {
  RunConfig c;
  c.command = Command::identities;
  c.trials = 30;
  c.m_max = 5;
  c.seed = 42;
  c.format = Format::json;
  const CommandOutput first = run(c);
  const CommandOutput second = run(c);
  EXPECT_EQ(first.exit_code, kExitOk) << first.text;
  EXPECT_EQ(first.text, second.text);
  c.seed = 43;
  EXPECT_EQ(run(c).exit_code, kExitOk);
}

TEST(Identities, ZeroTrialsRunsStructuralChecksOnly) {
  VerificationReport structural;
  structural_identity_checks(structural);
  const VerificationReport report = identities_report(0, 5, 1);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checks_run, structural.checks_run);
  EXPECT_GT(report.checks_run, 0u);
}

TEST(Identities, TerminationZeroOnly) {
  const VerificationReport report = identities_report(100, 0, 7);
  EXPECT_TRUE(report.ok());
}

TEST(Json, RoundTripsByteForByte) {
  for (Format f : {Format::json}) {
    RunConfig c = Compute(8, 12, f);
    const std::string text = run(c).text;
    EXPECT_EQ(Json::parse(text).dump(2) + "\n", text);
  }
}

TEST(Binary, ExitCodeContract) {
  const Process ok = Spawn("compute --r 2 --n-max 4 --format plain");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.out, "1 2 10 56 346\n");

  EXPECT_EQ(Spawn("").exit_code, 2);
  EXPECT_EQ(Spawn("frobnicate").exit_code, 2);
  EXPECT_EQ(Spawn("compute --r 0").exit_code, 2);
  EXPECT_EQ(Spawn("compute --format xml").exit_code, 2);
  EXPECT_EQ(Spawn("compute --routes bogus").exit_code, 2);
  EXPECT_EQ(Spawn("verify --n-max -3").exit_code, 2);
  EXPECT_EQ(Spawn("--help").exit_code, 0);

  EXPECT_EQ(Spawn("verify --r-max 1 --n-max 5").exit_code, 0);
  EXPECT_EQ(Spawn("verify --r-max 5 --n-max 0").exit_code, 0);
  EXPECT_EQ(Spawn("identities --trials 0 --m-max 5 --seed 1").exit_code, 0);
  EXPECT_EQ(Spawn("identities --trials 100 --m-max 0 --seed 7").exit_code, 0);
}

TEST(Binary, SeededIdentitiesAreByteIdentical) {
  const Process a = Spawn("identities --trials 100 --m-max 5 --seed 42 --format json");
  const Process b = Spawn("identities --trials 100 --m-max 5 --seed 42 --format json");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

}  // namespace
}  // namespace schmidt::cli

#include "chev/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = chev::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST(Cli, NoArgumentsIsUsageError) {
  Outcome r = run({});
  EXPECT_EQ(r.code, chev::cli::kUsage);
  EXPECT_NE(r.err.find("chevtool"), std::string::npos);
}

TEST(Cli, BadInputIsUsageError) {
  EXPECT_EQ(run({"roots", "--type", "E", "--rank", "5"}).code, chev::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, chev::cli::kUsage);
  EXPECT_EQ(run({"torsion", "--type", "A", "--rank", "2", "--word", "1,x"}).code, chev::cli::kUsage);
  EXPECT_EQ(run({"congruence-probe", "--prime", "2", "--modulus", "2"}).code, chev::cli::kUsage);
  EXPECT_EQ(run({"rgd-check", "--format", "xml"}).code, chev::cli::kUsage);
}

TEST(Cli, TorsionScanA2HasSixRows) {
  Outcome r = run({"torsion-scan", "--type", "A", "--rank", "2"});
  ASSERT_EQ(r.code, chev::cli::kOk) << r.err;
  // Column header plus six elements.
  EXPECT_EQ(data_lines(r.out).size(), 7U);
}

TEST(Cli, RgdCheckIsByteIdentical) {
  std::vector<std::string> args = {"rgd-check", "--type", "A", "--rank", "1", "--prime", "2", "--budget", "10", "--seed", "1"};
  Outcome a = run(args);
  Outcome b = run(args);
  EXPECT_EQ(a.code, chev::cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=1"), std::string::npos);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("CHEVTOOL_SEED", "77", 1);
  EXPECT_EQ(chev::cli::default_seed(), 77U);
  Outcome r = run({"rgd-check", "--type", "A", "--rank", "1", "--budget", "5"});
  EXPECT_NE(r.out.find("seed=77"), std::string::npos);
  ::unsetenv("CHEVTOOL_SEED");
  EXPECT_EQ(chev::cli::default_seed(), 1U);
}

TEST(Cli, JsonReports) {
  Outcome r = run({"torsion", "--type", "G", "--rank", "2", "--word", "1,2", "--samples", "5", "--seed", "11",
               "--format", "json"});
  ASSERT_EQ(r.code, chev::cli::kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tool"], "chevtool");
  EXPECT_EQ(j["command"], "torsion");
  EXPECT_EQ(j["seed"], 11);
  EXPECT_TRUE(j["pass"].get<bool>());

  Outcome ap = run({"approx", "--prime", "2", "--modulus", "3", "--lambda", "7", "--precision", "4", "--format", "json"});
  ASSERT_EQ(ap.code, chev::cli::kOk) << ap.err;
  EXPECT_NE(ap.out.find("39"), std::string::npos);
}

TEST(Cli, EverySubcommandRuns) {
  const std::vector<std::vector<std::string>> cmds = {
      {"roots", "--type", "B", "--rank", "2"},
      {"weyl-scan", "--type", "A", "--rank", "2"},
      {"relations", "--type", "A", "--rank", "2", "--samples", "5"},
      {"rgd-check", "--type", "A", "--rank", "2", "--budget", "10"},
      {"vrgd-check", "--type", "A", "--rank", "2", "--budget", "10"},
      {"torsion", "--type", "A", "--rank", "2", "--samples", "3"},
      {"torsion-scan", "--type", "B", "--rank", "2", "--samples", "2"},
      {"congruence-probe", "--type", "A", "--rank", "2", "--words", "10", "--max-len", "4"},
      {"approx", "--lambda", "1/2", "--precision", "3"},
  };
  for (const auto& c : cmds) {
    Outcome r = run(c);
    EXPECT_EQ(r.code, chev::cli::kOk) << c[0] << ": " << r.err;
    EXPECT_NE(r.out.find("# pass=true"), std::string::npos) << c[0];
  }
}

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "galcover/cli.hpp"

using namespace galcover;

namespace {

struct Result {
  int rc = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::set<std::string> integers(const std::string& s) {
  static const std::regex num("-?[0-9]+");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
    out.insert(it->str());
  return out;
}

} // namespace

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).rc, cli::usage);
  EXPECT_EQ(run({"frobnicate"}).rc, cli::usage);
  EXPECT_EQ(run({"reproduce", "nothing"}).rc, cli::usage);
  EXPECT_EQ(run({"group", "-g"}).rc, cli::usage);
  EXPECT_EQ(run({"analyze", "-g", "Q8", "--tuple", "-1,i,j,k", "--delta-policy", "loose"}).rc, cli::usage);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run({"group", "-g", "Q9"}).rc, cli::invalid);
  EXPECT_EQ(run({"analyze", "-g", "Q8", "--tuple", "i,j"}).rc, cli::invalid);
  EXPECT_EQ(run({"analyze", "-g", "Q8", "--tuple", "i,j,k,x"}).rc, cli::invalid);
  EXPECT_EQ(run({"enumerate", "-g", "Q8"}).rc, cli::invalid);
  EXPECT_EQ(run({"decompose", "-g", "D:4", "--tuple", "s,s,r,r^-1", "--scheme", "dihedral"}).rc, cli::invalid);
  EXPECT_EQ(run({"analyze", "-g", "D:6", "--tuple", "s,s,r^3,r^3"}).rc, cli::invalid);
}

TEST(Cli, RejectionIsReportedAsJson) {
  const auto r = run({"analyze", "-g", "D:6", "--tuple", "s,s,r^3,r^3", "--json"});
  EXPECT_EQ(r.rc, cli::invalid);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.at("valid").get<bool>());
  EXPECT_NE(j.at("reason").get<std::string>().find("generate"), std::string::npos);
}

TEST(Cli, EnumerateGolden) {
  const auto r = run({"enumerate", "-g", "Q8", "-o", "2,4,4,4", "--json"});
  ASSERT_EQ(r.rc, cli::ok);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("total").get<int>(), 24);
  EXPECT_EQ(j.at("classes").size(), 6u);
  EXPECT_EQ(j.at("genus").get<int>(), 4);
  const auto b = nlohmann::json::parse(run({"enumerate", "-g", "Q8", "-o", "2,4,4,4", "--up-to", "braid", "--json"}).out);
  EXPECT_EQ(b.at("classes").size(), 1u);
  const auto all = nlohmann::json::parse(run({"enumerate", "-g", "Q8", "-r", "4", "--json"}).out);
  EXPECT_EQ(all.at("total").get<int>(), 240);
}

TEST(Cli, AnalyzeGolden) {
  const auto r = run({"analyze", "-g", "Q8", "--tuple", "i,i,j,j", "--json"});
  ASSERT_EQ(r.rc, cli::ok);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("genus").get<int>(), 5);
  EXPECT_EQ(j.at("family_dim").get<int>(), 1);
  EXPECT_TRUE(j.at("hyperelliptic_certificate").is_null());
  EXPECT_EQ(j.at("exclusion").at("lower_bound").get<std::string>(), "1");
  const auto gm = nlohmann::json::parse(run({"analyze", "-g", "Q8", "--tuple", "i,i,j,j", "--assume-gm", "--json"}).out);
  EXPECT_EQ(gm.at("exclusion").at("lower_bound").get<std::string>(), "2");
  const auto h = nlohmann::json::parse(run({"analyze", "-g", "Q8", "--tuple", "-1,i,j,k", "--json"}).out);
  EXPECT_EQ(h.at("hyperelliptic_certificate").at("fixed_points").get<int>(), 10);
}

TEST(Cli, JsonIsByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "-g", "D:5", "-r", "4", "--json"},
           {"analyze", "-g", "Q8", "-o", "4,4,4,4", "--json"},
           {"reproduce", "dihedral-bound", "--json"},
           {"reproduce", "q8-simple", "--json"},
           {"group", "chartable", "-g", "D:6", "--json"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.rc, cli::ok);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW((void)nlohmann::json::parse(a.out));
  }
}

TEST(Cli, ReproduceTargets) {
  EXPECT_EQ(run({"reproduce", "dihedral-bound"}).rc, cli::ok);
  EXPECT_EQ(run({"reproduce", "q8-simple"}).rc, cli::ok);
  EXPECT_EQ(run({"reproduce", "q8-nonhyp"}).rc, cli::ok);
  EXPECT_EQ(run({"reproduce", "q8-nonhyp", "--assume-gm"}).rc, cli::ok);
  const auto j = nlohmann::json::parse(run({"reproduce", "q8-nonhyp", "--assume-gm", "--json"}).out);
  for (const auto& c : j.at("checks"))
    EXPECT_TRUE(c.at("passed").get<bool>()) << c.at("name");
}

TEST(Cli, HumanNumbersAppearInJson) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "-g", "Q8", "--tuple", "i,i,j,j"},
           {"analyze", "-g", "D:10", "--tuple", "s,s,r,r^-1"},
           {"enumerate", "-g", "Q8", "-o", "2,4,4,4"},
           {"exclude", "-g", "C:2", "--tuple", "r,r,r,r"}}) {
    const auto human = run(args);
    auto json_args = args;
    json_args.push_back("--json");
    const auto json = run(json_args);
    ASSERT_EQ(human.rc, cli::ok);
    const auto in_json = integers(json.out);
    for (const auto& n : integers(human.out))
      EXPECT_TRUE(in_json.count(n)) << args[0] << " prints " << n << " but the JSON lacks it";
  }
}

TEST(Cli, GroupOutput) {
  const auto r = run({"group", "-g", "Q8"});
  ASSERT_EQ(r.rc, cli::ok);
  EXPECT_NE(r.out.find("order 8"), std::string::npos);
  const auto t = nlohmann::json::parse(run({"group", "chartable", "-g", "D:4", "--method", "dixon", "--json"}).out);
  const auto c = nlohmann::json::parse(run({"group", "chartable", "-g", "D:4", "--method", "closed", "--json"}).out);
  EXPECT_EQ(t.at("characters").size(), 5u);
  EXPECT_EQ(t.at("characters"), c.at("characters"));
}

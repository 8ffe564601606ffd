#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

const std::string kFilms = std::string(IAA_DATA_DIR) + "/films.csv";
const std::string kTopsis = std::string(IAA_DATA_DIR) + "/topsis_fixture.csv";
const std::string kBad = IAA_TEST_DATA_DIR;

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = iaa::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> films(std::vector<std::string> rest) {
  std::vector<std::string> args{"--input", kFilms, "--scale-min", "1", "--scale-max", "10"};
  args.insert(args.end(), rest.begin(), rest.end());
  return args;
}

}  // namespace

TEST(Cli, ExitCodes) {
  auto bad = [](const std::string& file) {
    return invoke({"--input", kBad + "/" + file, "--scale-min", "1", "--scale-max", "10", "build"}).code;
  };
  EXPECT_EQ(invoke(films({"build"})).code, 0);
  EXPECT_EQ(bad("malformed.csv"), 2);
  EXPECT_EQ(bad("does_not_exist.csv"), 2);
  EXPECT_EQ(bad("inverted.csv"), 3);
  EXPECT_EQ(bad("out_of_scale.csv"), 3);
  EXPECT_EQ(bad("empty.csv"), 3);
  EXPECT_EQ(invoke(films({"rank", "--method", "ideal-ratio", "--measure", "jaccard"})).code, 4);
  EXPECT_EQ(invoke({"--input", kFilms, "--scale-min", "5", "--scale-max", "1", "build"}).code, 3);
  EXPECT_EQ(invoke(films({"frobnicate"})).code, 1);
}

TEST(Cli, UndefMessageNamesFilmI) {
  const auto r = invoke(films({"rank", "--method", "ideal-ratio", "--measure", "jaccard"}));
  EXPECT_NE(r.err.find("UNDEF"), std::string::npos);
  EXPECT_NE(r.err.find("Film I"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ErrorNamesOffendingRow) {
  const auto r = invoke({"--input", kBad + "/inverted.csv", "--scale-min", "1", "--scale-max", "10", "build"});
  EXPECT_NE(r.err.find("inverted.csv:3"), std::string::npos) << r.err;
}

TEST(Cli, BuildJsonLines) {
  const auto r = invoke(films({"--format", "json", "build"}));
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  const auto a = nlohmann::json::parse(line);
  EXPECT_EQ(a["label"], "Film A");
  EXPECT_EQ(a["n"], 5);
  EXPECT_EQ(a["regions"], nlohmann::json::parse("[[1.0,1.0,1.0]]"));
  int count = 1;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 10);
}

TEST(Cli, RankUniversalText) {
  const auto r = invoke(films({"rank", "--method", "universal"}));
  ASSERT_EQ(r.code, 0);
  EXPECT_LT(r.out.find("Film J"), r.out.find("Film G"));
  EXPECT_LT(r.out.find("Film H"), r.out.find("Film B"));
}

TEST(Cli, RankIdealRatioJson) {
  const auto r = invoke(films({"--format", "json", "rank", "--method", "ideal-ratio", "--measure", "combined"}));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto& entries = j["entries"];
  ASSERT_EQ(entries.size(), 10u);
  EXPECT_EQ(entries[0]["label"], "Film J");
  EXPECT_EQ(entries[9]["label"], "Film A");
  EXPECT_NEAR(entries[9]["score"].get<double>(), 0.2418, 5e-5);
}

TEST(Cli, RankTextShowsFourDecimals) {
  const auto r = invoke(films({"rank", "--method", "ideal-ratio", "--measure", "combined"}));
  EXPECT_NE(r.out.find("0.2418"), std::string::npos);
  EXPECT_NE(r.out.find("0.7582"), std::string::npos);
}

TEST(Cli, RankWithIdealFile) {
  const auto a = invoke(films({"rank", "--method", "ideal-ratio", "--measure", "combined"}));
  const auto b = invoke(films({"rank", "--method", "ideal-ratio", "--measure", "combined", "--ideal",
                               kBad + "/film_ideals.csv"}));
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SimilarityPair) {
  const auto r = invoke(films({"similarity", "--measure", "jaccard", "Film G", "Film J"}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.2500"), std::string::npos) << r.out;
  EXPECT_EQ(invoke(films({"similarity", "Film G", "Film Z"})).code, 3);
}

TEST(Cli, PlotdataCsv) {
  const auto r = invoke(films({"--format", "csv", "plotdata"}));
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "alternative,criterion,piece,x,mu");
  EXPECT_EQ(first, "Film A,overall,0,1,0");
}

TEST(Cli, TopsisJson) {
  const auto r = invoke({"--input", kTopsis, "--scale-min", "0", "--scale-max", "10", "--format", "json",
                         "topsis", "--measure", "combined", "--weights", "2,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alternatives"][0]["label"], "X");
  EXPECT_EQ(j["alternatives"][0]["closeness"], 1.0);
  EXPECT_EQ(j["alternatives"][0]["rank"], 1);
}

TEST(Cli, TopsisExcludeCriterion) {
  const auto r = invoke({"--input", kTopsis, "--scale-min", "0", "--scale-max", "10", "topsis",
                         "--exclude-criterion", "c1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("c1 "), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "iaa_cli_test_output.txt";
  const auto r = invoke(films({"--output", path.string(), "attributes"}));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), invoke(films({"attributes"})).out);
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"build"},
      {"attributes"},
      {"similarity", "--matrix"},
      {"rank", "--method", "universal"},
      {"rank", "--method", "baseline"},
      {"rank", "--method", "ideal-ratio", "--measure", "combined"},
      {"plotdata"},
  };
  for (const auto& format : {"text", "json", "csv"}) {
    for (const auto& cmd : commands) {
      std::vector<std::string> args{"--format", format};
      args.insert(args.end(), cmd.begin(), cmd.end());
      const auto first = invoke(films(args));
      const auto second = invoke(films(args));
      EXPECT_EQ(first.code, 0) << cmd[0] << " " << first.err;
      EXPECT_EQ(first.out, second.out) << cmd[0];
      EXPECT_FALSE(first.out.empty()) << cmd[0];
    }
  }
}

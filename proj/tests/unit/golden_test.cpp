#include "frobtool/cli/commands.hpp"
#include "frobtool/cli/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

std::string data(const char* name) { return std::string(FROBTOOL_DATA_DIR) + "/" + name; }

std::vector<GoldenCase> cases() {
  return {
      {"fedder_p2.json", {"gallery", "fedder", "--p", "2"}},
      {"fedder_p3.json", {"gallery", "fedder", "--p", "3"}},
      {"fedder_strict.json", {"gallery", "fedder-strict"}},
      {"lift_family.json", {"gallery", "lift-family"}},
      {"katzman.json", {"gallery", "katzman"}},
      {"veronese_p2.json", {"gallery", "veronese", "--p", "2"}},
      {"veronese_p3.json", {"gallery", "veronese", "--p", "3"}},
      {"determinantal.json", {"gallery", "determinantal"}},
      {"poly_twisted_dim3.json", {"gallery", "poly-twisted", "--dim", "3", "--p", "2"}},
      {"fops_katzman.json", {"fops", "--input", data("katzman.frob"), "--ideal", "I"}},
      {"gb_determinantal.json", {"gb", "--input", data("determinantal.frob"), "--ideal", "I"}},
  };
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

}  // namespace

TEST_P(Golden, MatchesFrozenReport) {
  const auto& c = GetParam();
  auto args = c.args;
  args.insert(args.end(), {"--json", "--no-cache"});
  std::ostringstream out, err;
  const int code = frob::cli::run_command(args, out, err);
  ASSERT_EQ(code, frob::cli::kOk) << err.str();
  const std::string actual = frob::cli::comparable(json::parse(out.str())).dump(2) + "\n";

  const fs::path path = fs::path(FROBTOOL_GOLDEN_DIR) / c.file;
  if (const char* update = std::getenv("FROBTOOL_UPDATE_GOLDEN"); update && *update) {
    std::ofstream(path, std::ios::binary) << actual;
    GTEST_SKIP() << "rewrote " << path;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file " << path << "; set FROBTOOL_UPDATE_GOLDEN=1";
  std::stringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(actual, expected.str()) << c.file;
}

INSTANTIATE_TEST_SUITE_P(V1, Golden, ::testing::ValuesIn(cases()),
                         [](const auto& info) {
                           std::string n = info.param.file;
                           n = n.substr(0, n.find('.'));
                           for (auto& ch : n)
                             if (ch == '-') ch = '_';
                           return n;
                         });

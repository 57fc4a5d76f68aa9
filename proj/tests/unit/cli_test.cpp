#include "frobtool/basis_cache.hpp"
#include "frobtool/cli/commands.hpp"
#include "frobtool/cli/disk_cache.hpp"
#include "frobtool/cli/input_document.hpp"
#include "frobtool/cli/report.hpp"
#include "frobtool/errors.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace frob;
using namespace frob::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(FROBTOOL_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("frobtool-cli-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  std::ofstream(dir / name) << text;
  return dir / name;
}

class CacheDir {
 public:
  explicit CacheDir(const std::string& name) : dir_(scratch(name)) {
    ::setenv("FROBTOOL_CACHE", dir_.c_str(), 1);
    BasisCache::global().clear();
  }
  ~CacheDir() {
    ::unsetenv("FROBTOOL_CACHE");
    fs::remove_all(dir_);
  }
  const fs::path& path() const { return dir_; }

 private:
  fs::path dir_;
};

}  // namespace

TEST(InputDocument, ParsesDirectives) {
  auto doc = parse_input(
      "# comment\n"
      "char 3\n"
      "vars a b c\n"
      "weights 1 2 1\n"
      "order lex\n"
      "degree-guard 50\n"
      "ideal J = a*c - b, c^2  # trailing\n");
  EXPECT_EQ(doc.ring->characteristic(), 3u);
  EXPECT_EQ(doc.ring->nvars(), 3u);
  EXPECT_EQ(doc.degree_guard, std::optional<long>(50));
  ASSERT_NE(doc.find("J"), nullptr);
  EXPECT_EQ(doc.find("J")->generators.size(), 2u);
  EXPECT_EQ(doc.find("K"), nullptr);
  EXPECT_THROW(doc.ideal("K"), UnknownIdeal);
}

TEST(InputDocument, RoundTripsThroughCanonicalText) {
  for (const char* text : {
           "char 2\nvars x y z\nideal I = x*y, y*z\n",
           "char 5\nvars a b\nweights 2 3\norder lex\nideal F = a^3 - b^2\nideal G = a\n",
           "char 3\nvars u v\ndegree-guard 40\nideal H = u^2 + 2*u*v, v^3\n",
       }) {
    auto doc = parse_input(text);
    auto printed = print_input_document(doc);
    auto again = parse_input(printed);
    EXPECT_EQ(doc, again) << printed;
    EXPECT_EQ(print_input_document(again), printed);
  }
  for (const char* name : {"katzman.frob", "determinantal.frob", "veronese.frob"}) {
    auto doc = parse_input_file(data(name));
    EXPECT_EQ(parse_input(print_input_document(doc)), doc) << name;
  }
}

TEST(InputDocument, ErrorsCarryPositions) {
  try {
    parse_input("char 4\nvars x\n");
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
  }
  try {
    parse_input("char 2\nvars x y\nideal I = x*y, q\n");
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 16u);
  }
  EXPECT_THROW(parse_input("char 2\nvars x x\n"), ParseError);
  EXPECT_THROW(parse_input("char 2\nvars x\nideal I = x\nideal I = x\n"), ParseError);
  EXPECT_THROW(parse_input("char 2\nvars x\nideal I = x - x\n"), ParseError);
  EXPECT_THROW(parse_input("vars x\n"), ParseError);
  EXPECT_THROW(parse_input_file("/nonexistent/file.frob"), Error);
}

TEST(Cli, ExitCodes) {
  CacheDir cache("exit");
  EXPECT_EQ(run({"fops", "--input", data("katzman.frob"), "--ideal", "I", "--emax", "2"}).code, kOk);
  auto missing = run({"fops", "--input", data("katzman.frob"), "--ideal", "J"});
  EXPECT_EQ(missing.code, kUsageError);
  EXPECT_NE(missing.err.find("no ideal named 'J' in the input"), std::string::npos) << missing.err;
  EXPECT_EQ(run({"nonsense"}).code, kUsageError);
  EXPECT_EQ(run({"fops", "--input", "/nonexistent.frob", "--ideal", "I"}).code, kUsageError);
  EXPECT_EQ(run({"gallery", "katzman", "--emax", "6"}).code, kUsageError);
  EXPECT_EQ(run({"fops", "--input", data("katzman.frob"), "--ideal", "I", "--degree-guard", "1",
                 "--no-cache"})
                .code,
            kDegreeGuard);
  auto bad = scratch("bad");
  auto f = write_file(bad, "bad.frob", "char 4\nvars x\n");
  auto parse = run({"gb", "--input", f.string(), "--ideal", "I"});
  EXPECT_EQ(parse.code, kUsageError);
  EXPECT_NE(parse.err.find("line 1, column 6"), std::string::npos) << parse.err;
  fs::remove_all(bad);
}

TEST(Cli, SubcommandsProduceReports) {
  CacheDir cache("subcommands");
  auto gb = run({"gb", "--input", data("katzman.frob"), "--ideal", "I", "--order", "lex"});
  EXPECT_EQ(gb.code, kOk) << gb.err;
  EXPECT_NE(gb.out.find("x*y"), std::string::npos);
  auto dir = scratch("colon");
  auto f = write_file(dir, "c.frob", "char 2\nvars x y z\nideal A = x^2*y^2, y^2*z^2\nideal B = x*y, y*z\n");
  auto colon = run({"colon", "--input", f.string(), "--lhs", "A", "--rhs", "B", "--json"});
  ASSERT_EQ(colon.code, kOk) << colon.err;
  auto j = nlohmann::json::parse(colon.out);
  EXPECT_EQ(j["command"], "colon lhs=A rhs=B");
  auto fpow = run({"fpow", "--input", f.string(), "--ideal", "B", "--e", "2"});
  EXPECT_EQ(fpow.code, kOk);
  EXPECT_NE(fpow.out.find("x^4*y^4"), std::string::npos) << fpow.out;
  auto tp = run({"twisted-poly", "--dim", "2", "--p", "3", "--emax", "3", "--json"});
  ASSERT_EQ(tp.code, kOk) << tp.err;
  fs::remove_all(dir);
}

TEST(Cli, JsonIsByteStableApartFromTiming) {
  CacheDir cache("stable");
  const std::vector<std::string> args{"fops", "--input", data("katzman.frob"), "--ideal", "I",
                                      "--emax", "3", "--json"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(comparable(ja).dump(2), comparable(jb).dump(2));
  for (const char* key : {"version", "input_digest", "command", "components", "expectations", "timing"})
    EXPECT_TRUE(ja.contains(key)) << key;
  EXPECT_EQ(ja["input_digest"].get<std::string>().size(), 64u);
  EXPECT_EQ(ja["components"][0]["degrees"][2]["note"], "relative to full lower components");
}

TEST(Cli, DiskCacheRoundTrip) {
  CacheDir cache("roundtrip");
  const std::vector<std::string> args{"gallery", "determinantal", "--json"};
  auto first = run(args);
  ASSERT_EQ(first.code, kOk) << first.err;
  BasisCache::global().clear();
  auto second = run(args);
  ASSERT_EQ(second.code, kOk) << second.err;
  auto t1 = nlohmann::json::parse(first.out)["timing"]["cache"];
  auto t2 = nlohmann::json::parse(second.out)["timing"]["cache"];
  EXPECT_GT(t1["misses"].get<long>(), 0);
  EXPECT_GT(t2["store_hits"].get<long>(), 0);
  EXPECT_LT(t2["misses"].get<long>(), t1["misses"].get<long>());
  EXPECT_EQ(comparable(nlohmann::json::parse(first.out)), comparable(nlohmann::json::parse(second.out)));
}

TEST(Cli, CorruptCacheEntryIsDiscarded) {
  CacheDir cache("corrupt");
  const std::vector<std::string> args{"fops", "--input", data("katzman.frob"), "--ideal", "I",
                                      "--emax", "2"};
  ASSERT_EQ(run(args).code, kOk);
  std::size_t corrupted = 0;
  for (const auto& entry : fs::directory_iterator(cache.path())) {
    std::ofstream(entry.path(), std::ios::trunc) << "{ not json";
    ++corrupted;
  }
  ASSERT_GT(corrupted, 0u);
  BasisCache::global().clear();
  auto again = run(args);
  EXPECT_EQ(again.code, kOk);
  EXPECT_NE(again.err.find("warning: discarding corrupt cache entry"), std::string::npos) << again.err;
}

TEST(DiskCache, StoresAndComparesKeys) {
  auto dir = scratch("store");
  std::vector<std::string> warnings;
  DiskCache store(dir, [&](const std::string& w) { warnings.push_back(w); });
  EXPECT_FALSE(store.load("k1").has_value());
  store.save("k1", {"x*y", "y*z"});
  auto got = store.load("k1");
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, (std::vector<std::string>{"x*y", "y*z"}));
  // A file under the right name but holding another key is a mismatch.
  fs::copy_file(store.path_for("k1"), store.path_for("k2"));
  EXPECT_FALSE(store.load("k2").has_value());
  EXPECT_FALSE(fs::exists(store.path_for("k2")));
  EXPECT_EQ(warnings.size(), 1u);
  fs::remove_all(dir);
}

TEST(Report, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

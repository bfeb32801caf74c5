#include "doctest.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

#include "gammafield/cache.hpp"
#include "gammafield/commands.hpp"
#include "gammafield/report.hpp"

using namespace gammafield;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("gammafield-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::permissions(path, fs::perms::owner_all, ec);
    fs::remove_all(path, ec);
  }
};

CommandOptions uncached() {
  CommandOptions o;
  o.use_cache = false;
  return o;
}

CommandOptions cached(const fs::path& dir) {
  CommandOptions o;
  o.cache_dir = dir.string();
  return o;
}

const char* kExamples =
    "label,polynomial\n"
    "# four worked examples\n"
    "s4,x^4 - x^3 - 7*x^2 + 11*x + 3\n"
    "d12,x^6 - 2*x^5 + 3*x^4 - 9*x^3 + 8*x^2 - 7*x - 5\n"
    "\n"
    "sextic_K,x^6 - x^5 - 2*x^4 + x^3 + 7*x^2 - 6*x + 4\n"
    "sextic_L,3,-12,19,-15,10,-3,1\n";

}  // namespace

TEST_CASE("parse_corpus") {
  auto recs = parse_corpus(kExamples);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].label == "s4");
  CHECK(recs[0].line == 3);
  CHECK(recs[3].poly == "3,-12,19,-15,10,-3,1");
  auto bare = parse_corpus("x^2 + 1\n  # comment\nfoo, x^3 - 2 \n");
  REQUIRE(bare.size() == 2);
  CHECK(bare[0].label.empty());
  CHECK(bare[0].poly == "x^2 + 1");
  CHECK(bare[1].poly == "x^3 - 2");
  CHECK(parse_corpus("").empty());
}

TEST_CASE("analyze command") {
  auto r = cmd_analyze("x^4 - 41*x^2 + 144", uncached());
  CHECK(r.exit_code == kExitOk);
  json doc = json::parse(r.out);
  CHECK(doc["discriminant"] == "1221025");
  CHECK(doc["signature"] == json{4, 0});
  CHECK(doc["gamma"]["is_gamma"] == false);

  auto s = json::parse(cmd_analyze("x^6 - x^5 - 2*x^4 + x^3 + 7*x^2 - 6*x + 4", uncached()).out);
  CHECK(s["discriminant"] == "-309123");
  CHECK(s["signature"] == json{0, 3});
  CHECK(s["gamma"]["exceptional"] == "107");

  auto g = json::parse(cmd_analyze("x^2 + 1", uncached()).out);
  CHECK(g["discriminant"] == "-4");
  CHECK(g["trace_form"]["gram"] == json::array({json::array({"2", "0"}), json::array({"0", "-2"})}));

  CommandOptions human = uncached();
  human.human = true;
  auto h = cmd_analyze("x^2 + 1", human);
  CHECK(h.exit_code == kExitOk);
  CHECK(h.out.find("-4") != std::string::npos);
}

TEST_CASE("analyze errors") {
  CHECK(cmd_analyze("x^2 + 0.5", uncached()).exit_code == kExitParse);
  CHECK(cmd_analyze("x^^2", uncached()).exit_code == kExitParse);
  auto red = cmd_analyze("x^2 - 1", uncached());
  CHECK(red.exit_code == kExitInput);
  json doc = json::parse(red.out);
  CHECK(doc["error"]["kind"] == "reducible");
  CHECK(doc["error"]["factors"].size() == 2);
  CHECK(cmd_analyze("2*x^2 + 1", uncached()).exit_code == kExitInput);
  CHECK(cmd_analyze("5", uncached()).exit_code == kExitInput);
}

TEST_CASE("compare command exit codes") {
  auto klein = cmd_compare("x^4 - 41*x^2 + 144", "x^4 - x^3 - 46*x^2 - 115*x - 35", uncached());
  CHECK(klein.exit_code == kExitDifferent);
  json kd = json::parse(klein.out);
  CHECK(kd["spinor_report"]["verdict"] == "different");

  auto sextic = cmd_compare("x^6 - x^5 - 2*x^4 + x^3 + 7*x^2 - 6*x + 4",
                            "x^6 - 3*x^5 + 10*x^4 - 15*x^3 + 19*x^2 - 12*x + 3", uncached());
  CHECK(sextic.exit_code == kExitOk);
  json sd = json::parse(sextic.out);
  CHECK(sd["spinor_report"]["verdict"] == "same-spinor-genus");
  CHECK(sd["theorem"]["isometry_claim"] == true);
  CHECK(sd["cross_validation"]["consistent"] == true);

  CHECK(cmd_compare("x^3 - x - 1", "x^3 - x - 1", uncached()).exit_code == kExitOk);
  auto quad = cmd_compare("x^2 + 1", "x^2 + 1", uncached());
  CHECK(quad.exit_code == kExitNotApplicable);
  CHECK(json::parse(quad.out)["spinor_report"]["reason"] == "degree");
  CHECK(cmd_compare("x^2 - 1", "x^3 - 2", uncached()).exit_code == kExitInput);
}

TEST_CASE("scan command") {
  auto empty = cmd_scan_text("", uncached());
  CHECK(empty.exit_code == kExitOk);
  CHECK(json::parse(empty.out)["summary"]["records"] == 0);

  auto reducible = cmd_scan_text("bad,x^2 - 1\n", uncached());
  CHECK(reducible.exit_code == kExitDifferent);
  json rd = json::parse(reducible.out);
  CHECK(rd["summary"]["failures"] == 1);
  CHECK(rd["records"][0]["error"]["kind"] == "reducible");

  auto mixed = cmd_scan_text("bad,x^2 - 1\ngood,x^2 + 1\n", uncached());
  CHECK(mixed.exit_code == kExitOk);
  CHECK(json::parse(mixed.out)["summary"]["failures"] == 1);

  CommandOptions pairs = uncached();
  pairs.pairs = true;
  auto ex = cmd_scan_text(kExamples, pairs);
  CHECK(ex.exit_code == kExitOk);
  json doc = json::parse(ex.out);
  CHECK(doc["summary"]["analyzed"] == 4);
  CHECK(doc["summary"]["applicable_pairs"] == 1);
  CHECK(doc["summary"]["consistency_failures"] == 0);
  CHECK(doc["pairs"][0]["consistent"] == true);

  pairs.jobs = 4;
  CHECK(cmd_scan_text(kExamples, pairs).out == ex.out);

  CHECK(cmd_scan("/nonexistent/corpus.csv", uncached()).exit_code == kExitParse);
}

TEST_CASE("cache hit returns identical bytes") {
  TempDir tmp;
  auto first = cmd_analyze("x^4 - x^3 - 7*x^2 + 11*x + 3", cached(tmp.path));
  AnalysisCache cache(tmp.path);
  CHECK(cache.load(parse_poly("x^4 - x^3 - 7*x^2 + 11*x + 3")).status == AnalysisCache::Status::hit);
  auto second = cmd_analyze("x^4 - x^3 - 7*x^2 + 11*x + 3", cached(tmp.path));
  CHECK(first.out == second.out);
  CHECK(first.out == cmd_analyze("x^4 - x^3 - 7*x^2 + 11*x + 3", uncached()).out);
}

TEST_CASE("cache keys include the schema version") {
  IntPoly f = parse_poly("x^3 - 2");
  CHECK(AnalysisCache::key(f).find("schema=" + std::to_string(kSchemaVersion)) != std::string::npos);
  CHECK(AnalysisCache::key(f) != AnalysisCache::key(parse_poly("x^3 - 3")));

  TempDir tmp;
  AnalysisCache cache(tmp.path);
  REQUIRE(cache.store(f, to_json(analyze_field(f))));
  // An entry written under another schema version is a miss.
  json entry = json::parse(std::ifstream(cache.entry_path(f)));
  entry["key"] = "schema=0;coeffs=" + f.to_coeff_list();
  std::ofstream(cache.entry_path(f)) << entry.dump();
  CHECK(cache.load(f).status == AnalysisCache::Status::miss);
}

TEST_CASE("corrupt cache entries are recomputed with a warning") {
  TempDir tmp;
  IntPoly f = parse_poly("x^3 - x - 1");
  AnalysisCache cache(tmp.path);
  REQUIRE(cache.store(f, to_json(analyze_field(f))));
  std::ofstream(cache.entry_path(f)) << "{not json";
  CHECK(cache.load(f).status == AnalysisCache::Status::corrupt);

  auto r = cmd_analyze("x^3 - x - 1", cached(tmp.path));
  CHECK(r.exit_code == kExitOk);
  json doc = json::parse(r.out);
  REQUIRE(doc["warnings"].size() == 1);
  CHECK(doc["warnings"][0].get<std::string>().find("corrupt") != std::string::npos);
  CHECK(cache.load(f).status == AnalysisCache::Status::hit);
}

TEST_CASE("unwritable cache directory degrades to a warning") {
  TempDir tmp;
  fs::path ro = tmp.path / "ro";
  fs::create_directories(ro);
  fs::permissions(ro, fs::perms::owner_read | fs::perms::owner_exec);
  // Privileged users ignore permission bits; nothing to check then.
  bool writable = static_cast<bool>(std::ofstream(ro / "probe"));
  if (!writable) {
    auto r = cmd_analyze("x^2 + 1", cached(ro));
    CHECK(r.exit_code == kExitOk);
    CHECK(json::parse(r.out)["warnings"].size() == 1);
  }
  // A regular file where the directory should be is unwritable for everyone.
  fs::path file = tmp.path / "plain";
  std::ofstream(file) << "x";
  auto r = cmd_analyze("x^2 + 1", cached(file));
  CHECK(r.exit_code == kExitOk);
  json doc = json::parse(r.out);
  CHECK(doc["discriminant"] == "-4");
  CHECK(doc["warnings"].size() == 1);
}

TEST_CASE("scan output does not depend on the cache") {
  TempDir tmp;
  CommandOptions opts = cached(tmp.path);
  opts.pairs = true;
  auto a = cmd_scan_text(kExamples, opts);
  auto b = cmd_scan_text(kExamples, opts);
  CommandOptions off = uncached();
  off.pairs = true;
  CHECK(a.out == b.out);
  CHECK(a.out == cmd_scan_text(kExamples, off).out);
}

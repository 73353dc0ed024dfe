#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

using namespace girthlift;
using namespace girthlift::cli;
using Json = nlohmann::json;

namespace {

std::string tmp_path(const std::string& name) { return std::string(GIRTHLIFT_TEST_TMPDIR) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

struct Result {
  int code;
  std::string out;
  std::string log;
};

Result run_cfg(const RunConfig& cfg) {
  std::ostringstream out, log;
  const int code = run(cfg, out, log);
  return {code, out.str(), log.str()};
}

}  // namespace

TEST_CASE("gen writes an edge list") {
  RunConfig cfg;
  cfg.command = "gen";
  cfg.family = "cycle:6";
  const auto r = run_cfg(cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("6 6\n", 0) == 0);

  cfg.family = "random:20:3";
  cfg.girth_min = 5;
  cfg.seed = 1;
  const auto a = run_cfg(cfg);
  CHECK(a.code == kExitOk);
  CHECK(a.out == run_cfg(cfg).out);

  cfg.family = "random:7:3";
  CHECK(run_cfg(cfg).code == kExitUsage);
  cfg.family = "nonsense";
  CHECK(run_cfg(cfg).code == kExitUsage);
}

TEST_CASE("bad input exits 2 and writes nothing") {
  const auto input = tmp_path("disconnected.txt");
  const auto report = tmp_path("never_written.json");
  write_file(input, "4 2\n0 1\n2 3\n");
  std::filesystem::remove(report);
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.input = input;
  cfg.output = report;
  const auto r = run_cfg(cfg);
  CHECK(r.code == kExitUsage);
  CHECK(r.log.find("error") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(report));

  write_file(input, "3 3\n0 1\n1 2\n");
  CHECK(run_cfg(cfg).code == kExitUsage);
  cfg.input = tmp_path("missing.txt");
  CHECK(run_cfg(cfg).code == kExitUsage);
  cfg.input.clear();
  CHECK(run_cfg(cfg).code == kExitUsage);

  RunConfig unknown;
  unknown.command = "frobnicate";
  CHECK(run_cfg(unknown).code == kExitUsage);
}

TEST_CASE("analyze on an even cycle reports an isometry") {
  const auto input = tmp_path("c8.txt");
  RunConfig gen;
  gen.command = "gen";
  gen.family = "cycle:8";
  gen.output = input;
  REQUIRE(run_cfg(gen).code == kExitOk);

  RunConfig cfg;
  cfg.command = "analyze";
  cfg.input = input;
  cfg.tree = "dfs";
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == kExitOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["embedding"]["distortion"]["fraction"] == "1");
  CHECK(doc["embedding"]["lip"]["fraction"] == "1");
  CHECK(doc["lift"]["vertices"] == 16);
  CHECK(doc["lift"]["girth"] == 16);
  CHECK(doc["theorem_bound"]["pass"] == true);
  CHECK(doc["lemma_sweep"]["failed_pairs"] == 0);
  CHECK(doc["pair_policy"]["kind"] == "exhaustive");
}

TEST_CASE("analyze csv has one row per pair") {
  const auto input = tmp_path("c5.txt");
  write_file(input, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.input = input;
  cfg.format = ReportFormat::csv;
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,x_base,x_label,y_base,y_label,distance,l1,C,N,M1,M2,M3,all_pass");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 10 * 9 / 2);
}

TEST_CASE("lift writes the lifted edge list and map") {
  const auto input = tmp_path("k4.txt");
  const auto map = tmp_path("k4.map");
  write_file(input, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  RunConfig cfg;
  cfg.command = "lift";
  cfg.input = input;
  cfg.map_output = map;
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("32 48\n", 0) == 0);
  std::ifstream m(map);
  std::size_t lines = 0;
  for (std::string line; std::getline(m, line);) ++lines;
  CHECK(lines == 32);

  cfg.max_vertices = 16;
  CHECK(run_cfg(cfg).code == kExitUsage);
}

TEST_CASE("verify catches an injected matching fault") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.pairs = "sample:500";
  cfg.inject_fault = true;
  const auto r = run_cfg(cfg);
  CHECK(r.code == kExitVerdictFailure);
  const auto doc = Json::parse(r.out);
  CHECK(doc["pass"] == false);
  for (const auto& inst : doc["instances"]) {
    CHECK(inst["checks"]["cut_partition"]["pass"] == false);
  }
}

TEST_CASE("identical configs give identical reports") {
  const auto input = tmp_path("petersen.txt");
  RunConfig gen;
  gen.command = "gen";
  gen.family = "petersen";
  gen.output = input;
  REQUIRE(run_cfg(gen).code == kExitOk);

  RunConfig cfg;
  cfg.command = "analyze";
  cfg.input = input;
  cfg.pairs = "sample:1000";
  cfg.seed = 7;
  const auto a = run_cfg(cfg);
  const auto b = run_cfg(cfg);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  cfg.seed = 8;
  CHECK(run_cfg(cfg).out != a.out);
}

TEST_CASE("pair policy resolution") {
  RunConfig cfg;
  CHECK(std::holds_alternative<pairs::Exhaustive>(resolve_pair_policy(cfg, kExhaustiveLimit - 1)));
  const auto big = resolve_pair_policy(cfg, kExhaustiveLimit);
  REQUIRE(std::holds_alternative<pairs::Sampled>(big));
  CHECK(std::get<pairs::Sampled>(big).count == kDefaultSampleCount);
  cfg.pairs = "sample:12";
  cfg.seed = 3;
  const auto s = std::get<pairs::Sampled>(resolve_pair_policy(cfg, 10));
  CHECK(s.count == 12);
  CHECK(s.seed == 3);
  cfg.pairs = "exhaustive";
  CHECK(std::holds_alternative<pairs::Exhaustive>(resolve_pair_policy(cfg, 1'000'000)));
  cfg.pairs = "sample:";
  CHECK_THROWS(resolve_pair_policy(cfg, 10));
}

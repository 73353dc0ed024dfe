#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "girthlift/embedding.hpp"
#include "girthlift/graph.hpp"
#include "girthlift/lift.hpp"

namespace girthlift::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailure = 1;
inline constexpr int kExitUsage = 2;

// Environment override for the default lift cap.
inline constexpr const char* kMaxVerticesEnv = "GIRTHLIFT_MAX_VERTICES";

// Below this many lifted vertices the default pair policy is exhaustive.
inline constexpr std::size_t kExhaustiveLimit = 10'000;
inline constexpr std::uint64_t kDefaultSampleCount = 100'000;

enum class ReportFormat { json, csv };

struct RunConfig {
  std::string command;

  // gen
  std::string family = "petersen";
  std::uint32_t girth_min = 3;
  std::uint64_t max_tries = 10'000;

  std::string tree = "bfs";
  VertexId root = 0;
  std::size_t max_vertices = kDefaultMaxVertices;
  // "exhaustive", "sample:N", or empty for the size-based default.
  std::string pairs;
  std::uint64_t seed = 1;

  std::string input;
  std::string output;
  std::string map_output;
  ReportFormat format = ReportFormat::json;

  // verify: perturb one lifted matching per instance.
  bool inject_fault = false;
};

PairPolicy resolve_pair_policy(const RunConfig& cfg, std::size_t lifted_vertices);
std::size_t default_max_vertices();

// Each command writes its artifact to cfg.output (stdout when empty) and
// human-oriented notes to `log`. Returns a process exit code.
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_lift(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log);

// Dispatch on cfg.command, mapping girthlift::Error to kExitUsage.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace girthlift::cli

// Regenerates tests/expectations.json, the regression constants the test
// suites compare against. Every value is measured here, never typed in:
//
//   girthlift-bootstrap -o tests/expectations.json
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "girthlift/embedding.hpp"
#include "girthlift/families.hpp"

using namespace girthlift;
using Json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kHeawoodSamples = 100'000;
constexpr std::uint64_t kHeawoodSeed = 1;

Json measure(NamedGraph which, const PairPolicy& policy) {
  const Graph g = make(family::Named{which});
  const auto lg = build_lift(g, spanning_tree(g));
  const auto fd = fiber_distances(lg);
  const auto table = embed(lg);
  const auto report = distortion(lg, table, fd, policy);
  Json j{{"lifted_vertices", lg.num_vertices()},
         {"lift_girth", *lifted_girth(lg)},
         {"lift_diameter", fd.diameter()},
         {"distortion", to_string(report.distortion)},
         {"pairs_examined", report.pairs_examined}};
  if (const auto* s = std::get_if<pairs::Sampled>(&policy)) {
    j["sample_count"] = s->count;
    j["seed"] = s->seed;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path;
  if (argc == 3 && std::string(argv[1]) == "-o") {
    out_path = argv[2];
  } else if (argc != 1) {
    std::cerr << "usage: girthlift-bootstrap [-o expectations.json]\n";
    return 2;
  }

  Json doc;
  doc["note"] = "Generated by girthlift-bootstrap (BFS tree, root 0). Rerun it to refresh; do not hand-edit.";
  doc["petersen"] = measure(NamedGraph::petersen, pairs::Exhaustive{});
  doc["heawood"] = measure(NamedGraph::heawood, pairs::Sampled{kHeawoodSamples, kHeawoodSeed});
  const auto text = doc.dump(2) + "\n";

  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  file << text;
  return 0;
}

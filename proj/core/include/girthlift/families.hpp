#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "girthlift/error.hpp"
#include "girthlift/graph.hpp"
#include "girthlift/rational.hpp"

namespace girthlift {

enum class NamedGraph { k4, petersen, heawood, pappus, mcgee, tutte_coxeter };

namespace family {

struct Cycle {
  std::size_t n;
};
struct Complete {
  std::size_t n;
};
struct Named {
  NamedGraph which;
};
// Configuration-model k-regular graph on n vertices with girth >= girth_min.
struct RandomRegular {
  std::size_t n;
  std::size_t k;
  std::uint32_t girth_min = 3;
  std::uint64_t seed = 0;
  std::uint64_t max_tries = 10000;
};

}  // namespace family

using FamilySpec = std::variant<family::Cycle, family::Complete, family::Named, family::RandomRegular>;

// Thrown when random_regular runs out of attempts.
class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(std::uint64_t attempts);
  std::uint64_t attempts() const noexcept { return attempts_; }

 private:
  std::uint64_t attempts_;
};

void validate(const FamilySpec& spec);
Graph make(const FamilySpec& spec);

// Documented invariants of a named graph, checked when it is loaded.
struct NamedGraphFacts {
  std::size_t degree;
  std::size_t n;
  std::size_t m;
  std::uint32_t girth;
  std::uint32_t diameter;
};

NamedGraphFacts facts(NamedGraph g);
std::string_view name(NamedGraph g);
NamedGraph parse_named_graph(std::string_view s);
// Raw text of the shipped edge-list file.
std::string_view named_graph_text(NamedGraph g);

// girth / diameter as an exact fraction.
Rational girth_diam_ratio(const Graph& g);

// "petersen", "cycle:6", "complete:5", "random:20:3".
FamilySpec parse_family(std::string_view text, std::uint32_t girth_min, std::uint64_t seed,
                        std::uint64_t max_tries);
std::string describe(const FamilySpec& spec);

}  // namespace girthlift

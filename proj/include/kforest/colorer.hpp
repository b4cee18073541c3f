#pragma once

#include "kforest/coloring.hpp"
#include "kforest/configurations.hpp"
#include "kforest/graph.hpp"
#include "kforest/solvers.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kforest {

// One vertex colored during an extension. config is "C1".."C5" or
// "isolated"; forbidden is the computed forbidden set F, sorted.
struct ExtensionStep {
  std::string config;
  int vertex;
  std::vector<int> forbidden;
  int chosen;
};

struct FallbackEvent {
  std::string reason;  // no_configuration | empty_candidate | verify_failed
  int remaining_vertices = 0;
  // Whether the graph's mad in fact breaks the sparseness assumption for p;
  // computed when the event fires.
  bool mad_hypothesis_violated = false;
};

struct ExtensionTrace {
  std::vector<ExtensionStep> steps;
  std::vector<FallbackEvent> fallbacks;
};

// Thrown by the extend_* routines when some vertex has no color left
// outside its forbidden set.
struct ExtensionError : std::runtime_error {
  int vertex;
  ExtensionError(const std::string& what, int v) : std::runtime_error(what), vertex(v) {}
};

struct ColorOptions {
  bool verify_each_step = false;  // re-verify the partial coloring after every step
  SolveBudget budget;             // used by the fallback solver
};

enum class ColorStatus { Colored, ProvenImpossible, Exhausted };

struct ColorResult {
  ColorStatus status = ColorStatus::Colored;
  Coloring coloring;
  ExtensionTrace trace;
  int q = 0;  // list size the run was validated against
};

// Peel-and-extend list coloring. Repeatedly finds a reducible configuration
// (or an isolated vertex), deletes it, colors the rest, then extends across
// the configuration with the matching recipe. Falls back to the exhaustive
// solver on the remaining subgraph when no configuration exists, or on the
// whole graph when an extension step fails; both paths are recorded in the
// trace. Requires k >= 4, M >= max(k, max degree), p in {1,2,3}, and every
// list of size at least q = ceil(M/(k-1)) + p.
ColorResult color(const Graph& g, const ListAssignment& lists, int k, int p, int M,
                  const ColorOptions& opts = {});

// Extension recipes for a single configuration. The coloring must be valid
// on g minus the configuration's deletion set, which must be uncolored.
// Each colored vertex takes the smallest list color outside its forbidden
// set; steps are appended to *trace when given. Throws ExtensionError when
// a forbidden set swallows a whole list.
Coloring extend_c1(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists, int k, ExtensionTrace* trace = nullptr);
Coloring extend_c2(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists, int k, ExtensionTrace* trace = nullptr);
Coloring extend_c3(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists, int k, ExtensionTrace* trace = nullptr);
Coloring extend_c4(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists, int k, ExtensionTrace* trace = nullptr);
Coloring extend_c5(const Graph& g, const Coloring& c, const Configuration& cfg,
                   const ListAssignment& lists, int k, ExtensionTrace* trace = nullptr);

}  // namespace kforest

#pragma once

#include "kforest/coloring.hpp"
#include "kforest/graph.hpp"

#include <cstdint>
#include <optional>

namespace kforest {

// Caps for the exhaustive solvers. Exceeding a cap yields Exhausted, never a
// wrong answer.
struct SolveBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t wall_time_ms = 120'000;
  int universe_cap = 30;  // kf_choosable refuses q * n beyond this
};

enum class SolveStatus { Solved, Exhausted };

struct ChromaticResult {
  SolveStatus status = SolveStatus::Solved;
  int chromatic = 0;               // meaningful when Solved
  Coloring witness;
  int proven_lower = 0;            // every smaller color count is refuted
  std::uint64_t nodes = 0;
};

struct ListColorResult {
  SolveStatus status = SolveStatus::Solved;
  std::optional<Coloring> coloring;  // Solved with nullopt: proven impossible
  std::uint64_t nodes = 0;
};

struct ChoosableResult {
  SolveStatus status = SolveStatus::Solved;
  bool choosable = false;
  std::optional<ListAssignment> counterexample;  // set when not choosable
  std::uint64_t assignments_checked = 0;
  std::uint64_t nodes = 0;
};

struct ChoiceNumberResult {
  SolveStatus status = SolveStatus::Solved;
  int choice_number = 0;
  std::uint64_t nodes = 0;
};

// Fewest colors in any valid coloring, by iterative deepening from the
// degree lower bound. Any graph is colorable with n colors, so this
// terminates whenever the budget allows.
ChromaticResult kf_chromatic(const Graph& g, int k, const SolveBudget& budget = {});

// Exhaustive search for a coloring choosing each vertex's color from its
// list. Solved + nullopt means no such coloring exists.
ListColorResult kf_list_color(const Graph& g, const ListAssignment& lists, int k,
                              const SolveBudget& budget = {});

// Decides whether every assignment of q-element lists admits a coloring.
// Enumerates list assignments up to color renaming (fresh colors are taken
// consecutively) and prunes assignments whose colored prefix already fails.
// Intended for very small graphs; q * n is capped by the budget.
ChoosableResult kf_choosable(const Graph& g, int k, int q, const SolveBudget& budget = {});

// Smallest q such that the graph is q-choosable, scanning upward from the
// chromatic number. Once q reaches n the answer is q: with n colors per
// list an all-distinct coloring always exists.
ChoiceNumberResult kf_choice_number(const Graph& g, int k, const SolveBudget& budget = {});

}  // namespace kforest

#ifndef DEGSEQ_HUNT_HPP
#define DEGSEQ_HUNT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/cycles.hpp"
#include "degseq/graph.hpp"
#include "degseq/recognize.hpp"
#include "degseq/transform.hpp"

namespace degseq {

enum class SolverVerdict { yes, no, out_of_range };

/// Full certified property battery for one graph. Cycle fields outside the
/// exact-solver bounds are marked out_of_range, never guessed. `violations`
/// lists every structural guarantee of the class theory that the graph
/// breaks while satisfying the hypothesis; a nonempty list on a class member
/// would falsify the theory and is surfaced by the hunt campaigns as a
/// top-severity finding.
struct PropertyReport {
  int order = 0;
  std::size_t edges = 0;
  Membership membership;
  bool connected = false;
  bool two_connected = false;
  std::size_t cut_vertices = 0;
  std::size_t bridges = 0;
  std::optional<int> separability_case;  // two-clique members only; 0 = off-table
  std::optional<int> diameter;           // nullopt = unbounded
  bool bipartite = false;
  std::optional<std::pair<int, int>> bipartite_parts;  // sizes, small first
  std::optional<int> bipartite_case;     // bipartite members only; 0 = off-table
  SolverVerdict hamiltonian = SolverVerdict::out_of_range;
  SolverVerdict traceable = SolverVerdict::out_of_range;
  SolverVerdict pancyclic = SolverVerdict::out_of_range;
  std::optional<CycleWitness> cycle_witness;
  std::optional<CycleWitness> path_witness;
  std::optional<int> first_missing_cycle_length;
  PredicateReport predicates;
  std::optional<std::size_t> independence_number;
  std::vector<std::string> violations;

  bool operator==(const PropertyReport&) const = default;
};

PropertyReport certify(const Graph& g);

enum class HuntMode { exhaustive, random };

struct HuntBudget {
  EnumerationBudget enumeration;
  std::size_t random_samples = 100;  // per cell, random mode
};

struct HuntCell {
  ClassSignature signature;
  HuntMode mode = HuntMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t graphs_tested = 0;
  bool complete = true;

  bool operator==(const HuntCell&) const = default;
};

struct HuntFinding {
  ClassSignature signature;
  std::string canonical_code;
  std::string graph6;
  std::string violated_property;

  bool operator==(const HuntFinding&) const = default;
};

struct HuntReport {
  std::string campaign;  // "traceability" or "diameter4"
  HuntMode mode = HuntMode::exhaustive;
  std::uint64_t seed = 0;
  std::vector<HuntCell> cells;
  std::size_t graphs_tested = 0;
  bool all_complete = true;
  std::vector<HuntFinding> counterexamples;  // sorted by canonical code

  bool operator==(const HuntReport&) const = default;
};

/// All two-clique signatures {m,n} with 2 <= m <= n and m+n <= max_order,
/// excluding the empty class {2,2}.
std::vector<ClassSignature> auto_signatures(int max_order);

/// Searches class members for one without a Hamiltonian path. Exhaustive
/// mode certifies every isomorphism class; random mode certifies
/// budget.random_samples walk samples per cell (8*(m+n) switch steps each).
/// Any theorem violation surfaces as a counterexample too. Every finding is
/// re-validated from its serialized form before the report is returned.
HuntReport hunt_traceability(std::span<const ClassSignature> signatures,
                             HuntMode mode, const HuntBudget& budget,
                             std::uint64_t seed, int jobs = 1);

/// Searches complement-class members for one of diameter 4 (which would
/// answer the open question positively); members of diameter > 4 are
/// reported as theorem violations.
HuntReport hunt_diameter4(std::span<const ClassSignature> signatures,
                          HuntMode mode, const HuntBudget& budget,
                          std::uint64_t seed, int jobs = 1);

}  // namespace degseq

#endif

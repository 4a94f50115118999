#ifndef DEGSEQ_CYCLES_HPP
#define DEGSEQ_CYCLES_HPP

#include <optional>
#include <span>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Exact-search order bounds; the solvers refuse larger inputs rather than
/// answer heuristically.
inline constexpr int kHamiltonianMaxOrder = 20;
inline constexpr int kPancyclicMaxOrder = 14;

struct CycleWitness {
  std::vector<int> vertices;
  bool operator==(const CycleWitness&) const = default;
};

bool is_valid_cycle(const Graph& g, std::span<const int> vertices);
bool is_valid_path(const Graph& g, std::span<const int> vertices);

/// Witness cycle through every vertex, or definite absence. Backtracking
/// with degree/connectivity pruning; throws std::invalid_argument beyond
/// kHamiltonianMaxOrder.
std::optional<CycleWitness> hamiltonian_cycle(const Graph& g);

/// Open path through every vertex, or definite absence.
std::optional<CycleWitness> hamiltonian_path(const Graph& g);

/// Exact search for a simple cycle of exactly the given length.
bool has_cycle_of_length(const Graph& g, int length);

struct PancyclicityResult {
  bool pancyclic = false;
  std::optional<int> first_missing_length;
  bool operator==(const PancyclicityResult&) const = default;
};

/// Cycles of every length 3..order? Throws beyond kPancyclicMaxOrder.
PancyclicityResult is_pancyclic(const Graph& g);

/// Exact nonnegative rational (normalized).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  Rational& operator+=(const Rational& o);
  bool operator<=(long long k) const;
  bool operator==(const Rational&) const = default;
};

/// Hypothesis flags for the classical sufficient conditions. Each flag is
/// true only when the theorem's hypothesis holds, so flag true implies the
/// theorem's conclusion for the input:
///   dirac            n >= 3 and min degree >= n/2          => Hamiltonian
///   ore              n >= 3, nonadjacent degree sums >= n  => Hamiltonian
///   holton_sheehan   2-connected r-regular, n <= 3r+1,
///                    not the Petersen graph                => Hamiltonian
///   rahman_kaykobad  connected, nonadjacent pairs have
///                    degree sum + distance > n             => traceable
///   bondy_premise    Hamiltonian and |E| >= n^2/4          => pancyclic or
///                                                             K_{n/2,n/2}
///   moon_moser       balanced bipartite, parts of size q >= 2, nonadjacent
///                    cross pairs have degree sum >= q+1    => Hamiltonian
/// bondy_premise is unset beyond the Hamiltonian solver bound; moon_moser is
/// unset unless the input is balanced bipartite. caro_wei_bound is the exact
/// lower bound sum 1/(d_i+1) on the independence number.
struct PredicateReport {
  bool dirac = false;
  bool ore = false;
  bool holton_sheehan = false;
  bool rahman_kaykobad = false;
  std::optional<bool> bondy_premise;
  std::optional<bool> moon_moser;
  Rational caro_wei_bound;

  bool operator==(const PredicateReport&) const = default;
};

PredicateReport literature_predicates(const Graph& g);

}  // namespace degseq

#endif

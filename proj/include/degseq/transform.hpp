#ifndef DEGSEQ_TRANSFORM_HPP
#define DEGSEQ_TRANSFORM_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Replaces edges uv, xy by ux, vy. Valid for g iff uv and xy are edges,
/// ux and vy are not, and the four vertices are distinct; the operation
/// preserves the degree multiset.
struct TwoSwitch {
  int u, v, x, y;
  bool operator==(const TwoSwitch&) const = default;
};

bool two_switch_valid(const Graph& g, const TwoSwitch& s);

/// All valid switches as ordered 4-tuples; symmetric forms are not
/// deduplicated, which keeps uniform selection over the list simple.
std::vector<TwoSwitch> enumerate_two_switches(const Graph& g);

/// Throws std::invalid_argument when the switch is not valid for g.
Graph apply_two_switch(const Graph& g, const TwoSwitch& s);

/// Random walk over realizations: starts at the clique union, applies
/// `steps` uniformly random valid switches, then keeps stepping while the
/// result is still a clique union. Deterministic in (sig, steps, seed).
/// Throws std::invalid_argument for empty classes (any part < 2, one part,
/// or {2,2}).
Graph sample_member(const ClassSignature& sig, int steps, std::uint64_t seed);

struct EnumerationBudget {
  std::size_t max_classes = 1'000'000;
  std::size_t max_frontier = 1'000'000;
  std::chrono::milliseconds max_wall{600'000};
};

struct ClassEnumeration {
  ClassSignature signature;
  std::vector<std::string> codes;      // canonical codes, ascending
  std::vector<Graph> representatives;  // parallel to codes
  bool complete = true;                // false when a budget limit was hit
  std::size_t states_expanded = 0;
};

/// Breadth-first search over isomorphism classes of the degree sequence,
/// starting from the clique union and stepping by 2-switches (which reach
/// every realization); the clique union itself is excluded from the result.
ClassEnumeration enumerate_class(const ClassSignature& sig,
                                 const EnumerationBudget& budget = {});

/// K_m minus an edge and K_n minus an edge joined by a twin bridge across
/// the deleted endpoints. Member of G_{m,n}, 2-connected, Hamiltonian.
/// Requires n > m >= 4 (for m = 3 the smaller side would not be
/// 2-connected).
Graph twin_bridge_two_cliques(int m, int n);

enum class AttachPattern { adjacent, nonadjacent };

/// K_n minus two non-incident edges, with two of the four deleted-edge
/// endpoints joined by a twin bridge to a clique K_{n-1}. Member of
/// G_{n-1,n}; requires n >= 4. The attachment pair is either adjacent or
/// non-adjacent in the damaged clique; every other choice is isomorphic to
/// one of these two.
Graph twin_bridge_one_clique(int n, AttachPattern attach);

/// Clique of size n with one edge deleted and a pendant leaf on each
/// deleted-edge endpoint: the unique member of G_{2,n}. Requires n >= 4.
Graph pendant_family(int n);

Graph cycle_graph(int k);
Graph path_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite_graph(int a, int b);
Graph clique_union_graph(const ClassSignature& sig);
Graph cube_graph();
Graph petersen_graph();
Graph icosahedron_graph();
Graph dodecahedron_graph();

/// Named fixture lookup: cube, icosahedron, dodecahedron, petersen,
/// cycle(k), path(k), complete(k), complete_bipartite(a,b),
/// clique_union(p1,p2,...).
Graph fixture(const std::string& name);

}  // namespace degseq

#endif

#ifndef DEGSEQ_STRUCTURE_HPP
#define DEGSEQ_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

struct BlockDecomposition {
  std::vector<int> cut_vertices;         // sorted
  std::vector<VertexPair> bridges;       // (u < v), sorted
  std::vector<std::vector<int>> blocks;  // vertex sets, each sorted
};

bool is_connected(const Graph& g);

/// Connected, no cut-vertex, at least 3 vertices.
bool is_two_connected(const Graph& g);

/// Single depth-first low-link pass; linear in vertices + edges.
BlockDecomposition block_decomposition(const Graph& g);

/// Maps the (cut-vertex count, bridge count) pair onto the five-case table
/// {(0,0),(1,0),(2,1),(2,2),(3,4)} every two-clique class member must hit.
/// Returns the case label 1..5, or 0 when the pair is outside the table.
int separability_case(const BlockDecomposition& d);
int separability_case(const Graph& g);

/// Longest shortest path; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

struct Bipartition {
  std::vector<int> left, right;  // |left| <= |right|, both sorted
  bool operator==(const Bipartition&) const = default;
};

struct BipartitionResult {
  std::optional<Bipartition> parts;
  std::vector<int> odd_cycle;  // shortest odd cycle; nonempty iff !parts
};

BipartitionResult bipartition(const Graph& g);

/// Classifies a bipartite two-clique class member: with |V1| <= |V2| and
/// m <= n, case 1 is balanced parts with n = m+2 and m, n even; case 2 is
/// parts of sizes m and n with n = m+1; case 3 is balanced parts with m = n.
/// Returns 1..3, or 0 when no case matches (a would-be theorem violation).
/// Throws std::invalid_argument unless g is a bipartite member of a
/// two-clique class.
int bipartite_case(const Graph& g, const Bipartition& parts);

}  // namespace degseq

#endif

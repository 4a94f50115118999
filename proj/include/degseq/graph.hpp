#ifndef DEGSEQ_GRAPH_HPP
#define DEGSEQ_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace degseq {

using VertexPair = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..order-1.
/// Adjacency is kept as sorted neighbor lists; for small orders a packed
/// bit matrix is kept alongside for O(1) edge tests.
class Graph {
 public:
  // Orders up to this limit carry the packed bit rows.
  static constexpr int kDenseOrderLimit = 1024;

  Graph() = default;

  /// Builds a graph with the given edges. Duplicate pairs collapse to one
  /// edge; throws std::invalid_argument on self-loops or endpoints >= order.
  Graph(int order, std::span<const VertexPair> edges);
  Graph(int order, std::initializer_list<VertexPair> edges);

  int order() const { return order_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const int> neighbors(int v) const {
    return {flat_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  /// All edges as (u, v) pairs with u < v, sorted.
  std::vector<VertexPair> edges() const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && offsets_ == other.offsets_ &&
           flat_ == other.flat_;
  }

 private:
  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::int32_t> offsets_ = {0};  // size order_+1
  std::vector<std::int32_t> flat_;           // sorted neighbors, concatenated
  std::vector<std::uint64_t> bits_;          // packed rows when order_ small
  int words_per_row_ = 0;

  bool dense_bit(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_per_row_ + (v >> 6)] >>
            (v & 63)) &
           1u;
  }
};

/// Degree multiset as (degree, multiplicity) pairs, ascending by degree.
struct DegreeMultiset {
  std::vector<std::pair<int, int>> counts;
  bool operator==(const DegreeMultiset&) const = default;
};

/// Multiset of clique sizes {p_1,...,p_k}, ascending.
struct ClassSignature {
  std::vector<int> parts;

  ClassSignature() = default;
  explicit ClassSignature(std::vector<int> p);
  ClassSignature(std::initializer_list<int> p);

  int order() const;
  bool two_clique() const { return parts.size() == 2; }
  /// Degrees every member must have: each part p contributes p vertices of
  /// degree p-1.
  DegreeMultiset required_degrees() const;
  /// True when usable as a degree-equivalence class: k >= 1 and every
  /// part >= 2.
  bool valid_class() const;

  bool operator==(const ClassSignature&) const = default;
  bool operator<(const ClassSignature& o) const { return parts < o.parts; }
};

std::string to_string(const ClassSignature& sig);

Graph complement(const Graph& g);
DegreeMultiset degree_sequence(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Component sizes when every component is complete, otherwise nullopt.
std::optional<ClassSignature> is_clique_union(const Graph& g);

}  // namespace degseq

#endif

#ifndef DEGSEQ_REDUCTION_HPP
#define DEGSEQ_REDUCTION_HPP

#include <span>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Largest order max_independent_set_exact accepts.
inline constexpr int kIndependentSetMaxOrder = 24;

/// Doubling construction: two copies of the source with cross edges between
/// distinct non-adjacent originals, so every product vertex ends up with
/// degree n-1 and the product lands in the two-clique class {n,n}.
struct ReductionInstance {
  Graph source;
  Graph product;

  /// copy is 1 or 2; vertex x of the source maps to x (copy 1) or
  /// x + source.order() (copy 2).
  int product_vertex(int x, int copy) const {
    return x + (copy - 1) * source.order();
  }
};

/// Throws std::invalid_argument on disconnected or complete sources (a
/// complete source would produce the excluded clique union).
ReductionInstance build_reduction(const Graph& g);

struct IndependentSet {
  std::vector<int> vertices;  // sorted
  bool operator==(const IndependentSet&) const = default;
};

bool is_independent_set(const Graph& g, std::span<const int> vertices);

/// Maximum-cardinality independent set by branch and bound (greedy initial
/// bound, branching on the densest remaining vertex). Throws beyond
/// kIndependentSetMaxOrder.
IndependentSet max_independent_set_exact(const Graph& g);

/// Projects an independent set of the product onto the source: splits it by
/// copy and keeps the larger half (copy 1 on ties). Throws when the input is
/// not independent in the product.
IndependentSet extract_solution(const ReductionInstance& inst,
                                const IndependentSet& product_set);

struct TwoApproxReport {
  std::size_t exact_size = 0;      // |J|, maximum independent set of source
  std::size_t product_size = 0;    // |I|, maximum independent set of product
  std::size_t extracted_size = 0;  // |S|
  double ratio = 0.0;              // |J| / |S|
  bool within_factor_two = false;  // |J| <= 2|S|

  bool operator==(const TwoApproxReport&) const = default;
};

/// Runs the exact oracle on source and product and checks the extracted
/// solution is a 2-approximation.
TwoApproxReport verify_two_approx(const Graph& g);

/// Via the complement identities: a clique of g is an independent set of
/// the complement; a minimum vertex cover is the complement of a maximum
/// independent set.
std::vector<int> max_clique_exact(const Graph& g);
std::vector<int> min_vertex_cover_exact(const Graph& g);

}  // namespace degseq

#endif

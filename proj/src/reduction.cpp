#include "degseq/reduction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "degseq/structure.hpp"

namespace degseq {

ReductionInstance build_reduction(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g))
    throw std::invalid_argument("reduction source must be connected");
  if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2)
    throw std::invalid_argument(
        "reduction source must not be complete (the product would be the "
        "excluded clique union)");

  std::vector<VertexPair> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);          // copy 1
    edges.emplace_back(u + n, v + n);  // copy 2
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && y > x && !g.has_edge(x, y)) {
        edges.emplace_back(x, y + n);
        edges.emplace_back(y, x + n);
      }
  return ReductionInstance{g, Graph(2 * n, edges)};
}

bool is_independent_set(const Graph& g, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] ||
          g.has_edge(vertices[i], vertices[j]))
        return false;
  }
  return true;
}

namespace {

struct MisSolver {
  int n;
  std::array<std::uint32_t, kIndependentSetMaxOrder> closed{};  // N[v]
  std::uint32_t best_set = 0;
  int best = 0;

  explicit MisSolver(const Graph& g) : n(g.order()) {
    for (int v = 0; v < n; ++v) {
      closed[v] = std::uint32_t{1} << v;
      for (int w : g.neighbors(v)) closed[v] |= std::uint32_t{1} << w;
    }
  }

  int densest(std::uint32_t pool) const {
    int pick = -1, deg = -1;
    for (std::uint32_t m = pool; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const int d = std::popcount(closed[v] & pool) - 1;
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    return pick;
  }

  void greedy_seed(std::uint32_t pool) {
    std::uint32_t chosen = 0;
    int size = 0;
    while (pool) {
      int pick = -1, deg = n + 1;
      for (std::uint32_t m = pool; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        const int d = std::popcount(closed[v] & pool) - 1;
        if (d < deg) {
          deg = d;
          pick = v;
        }
      }
      chosen |= std::uint32_t{1} << pick;
      ++size;
      pool &= ~closed[pick];
    }
    best = size;
    best_set = chosen;
  }

  void search(std::uint32_t pool, std::uint32_t chosen, int size) {
    if (size + std::popcount(pool) <= best) return;
    if (!pool) {
      best = size;
      best_set = chosen;
      return;
    }
    const int v = densest(pool);
    search(pool & ~closed[v], chosen | (std::uint32_t{1} << v), size + 1);
    search(pool & ~(std::uint32_t{1} << v), chosen, size);
  }
};

}  // namespace

IndependentSet max_independent_set_exact(const Graph& g) {
  if (g.order() > kIndependentSetMaxOrder)
    throw std::invalid_argument("max_independent_set_exact supports order <= " +
                                std::to_string(kIndependentSetMaxOrder));
  if (g.order() == 0) return {};
  MisSolver solver(g);
  const std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;
  solver.greedy_seed(all);
  solver.search(all, 0, 0);
  IndependentSet out;
  for (std::uint32_t m = solver.best_set; m;) {
    out.vertices.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

IndependentSet extract_solution(const ReductionInstance& inst,
                                const IndependentSet& product_set) {
  if (!is_independent_set(inst.product, product_set.vertices))
    throw std::invalid_argument(
        "extract_solution requires an independent set of the product");
  const int n = inst.source.order();
  std::vector<int> copy1, copy2;
  for (int v : product_set.vertices)
    (v < n ? copy1 : copy2).push_back(v < n ? v : v - n);
  IndependentSet out;
  out.vertices = copy1.size() >= copy2.size() ? copy1 : copy2;
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

TwoApproxReport verify_two_approx(const Graph& g) {
  ReductionInstance inst = build_reduction(g);
  const IndependentSet exact = max_independent_set_exact(g);
  const IndependentSet product = max_independent_set_exact(inst.product);
  const IndependentSet extracted = extract_solution(inst, product);
  TwoApproxReport rep;
  rep.exact_size = exact.vertices.size();
  rep.product_size = product.vertices.size();
  rep.extracted_size = extracted.vertices.size();
  rep.ratio = rep.extracted_size == 0
                  ? 0.0
                  : static_cast<double>(rep.exact_size) / rep.extracted_size;
  rep.within_factor_two = rep.exact_size <= 2 * rep.extracted_size;
  return rep;
}

std::vector<int> max_clique_exact(const Graph& g) {
  return max_independent_set_exact(complement(g)).vertices;
}

std::vector<int> min_vertex_cover_exact(const Graph& g) {
  const IndependentSet mis = max_independent_set_exact(g);
  std::vector<int> cover;
  std::size_t i = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (i < mis.vertices.size() && mis.vertices[i] == v)
      ++i;
    else
      cover.push_back(v);
  }
  return cover;
}

}  // namespace degseq

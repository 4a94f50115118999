#include "degseq/cycles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "degseq/canonical.hpp"
#include "degseq/structure.hpp"
#include "degseq/transform.hpp"

namespace degseq {

bool is_valid_cycle(const Graph& g, std::span<const int> vertices) {
  if (vertices.size() < 3) return false;
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return g.has_edge(vertices.back(), vertices.front());
}

bool is_valid_path(const Graph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return vertices.empty() || (vertices.front() >= 0 &&
                              vertices.back() < g.order());
}

namespace {

struct ExactSolver {
  int n = 0;
  std::array<std::uint32_t, 32> adj{};
  std::uint32_t all = 0;
  std::uint32_t visited = 0;
  std::vector<int> path;

  void load(const Graph& g, bool with_apex) {
    n = g.order() + (with_apex ? 1 : 0);
    adj.fill(0);
    for (int v = 0; v < g.order(); ++v)
      for (int w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
    if (with_apex) {
      const int apex = g.order();
      for (int v = 0; v < g.order(); ++v) {
        adj[v] |= std::uint32_t{1} << apex;
        adj[apex] |= std::uint32_t{1} << v;
      }
    }
    all = (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  }

  bool mask_connected(std::uint32_t mask) const {
    if (!mask) return true;
    std::uint32_t seen = mask & (~mask + 1);
    std::uint32_t todo = seen;
    while (todo) {
      const int v = std::countr_zero(todo);
      todo &= todo - 1;
      const std::uint32_t fresh = adj[v] & mask & ~seen;
      seen |= fresh;
      todo |= fresh;
    }
    return seen == mask;
  }

  // Hamiltonian cycle anchored at vertex 0.
  bool cycle_dfs(int cur, int depth) {
    if (depth == n) return (adj[cur] & 1u) != 0;
    const std::uint32_t remaining = all & ~visited;
    const std::uint32_t anchors = remaining | (std::uint32_t{1} << cur) | 1u;
    for (std::uint32_t m = remaining; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (std::popcount(adj[v] & anchors) < 2) return false;
    }
    if ((depth & 3) == 0 &&
        !mask_connected(remaining | (std::uint32_t{1} << cur) | 1u))
      return false;
    for (std::uint32_t m = adj[cur] & remaining; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      visited |= std::uint32_t{1} << v;
      path.push_back(v);
      if (cycle_dfs(v, depth + 1)) return true;
      path.pop_back();
      visited &= ~(std::uint32_t{1} << v);
    }
    return false;
  }

  std::optional<std::vector<int>> find_cycle() {
    path.assign(1, 0);
    visited = 1;
    if (cycle_dfs(0, 1)) return path;
    return std::nullopt;
  }
};

bool cycle_precheck_fails(const Graph& g) {
  if (!is_connected(g)) return true;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) return true;
  return !block_decomposition(g).cut_vertices.empty();
}

}  // namespace

std::optional<CycleWitness> hamiltonian_cycle(const Graph& g) {
  if (g.order() > kHamiltonianMaxOrder)
    throw std::invalid_argument("hamiltonian_cycle supports order <= " +
                                std::to_string(kHamiltonianMaxOrder));
  if (g.order() < 3) return std::nullopt;
  if (cycle_precheck_fails(g)) return std::nullopt;
  ExactSolver solver;
  solver.load(g, false);
  if (auto cycle = solver.find_cycle()) return CycleWitness{std::move(*cycle)};
  return std::nullopt;
}

std::optional<CycleWitness> hamiltonian_path(const Graph& g) {
  if (g.order() > kHamiltonianMaxOrder)
    throw std::invalid_argument("hamiltonian_path supports order <= " +
                                std::to_string(kHamiltonianMaxOrder));
  const int n = g.order();
  if (n == 0) return CycleWitness{};
  if (n == 1) return CycleWitness{{0}};
  if (!is_connected(g)) return std::nullopt;
  // A Hamiltonian path of g is a Hamiltonian cycle of g plus a vertex
  // adjacent to everything.
  ExactSolver solver;
  solver.load(g, true);
  auto cycle = solver.find_cycle();
  if (!cycle) return std::nullopt;
  const int apex = n;
  auto it = std::find(cycle->begin(), cycle->end(), apex);
  std::vector<int> path(it + 1, cycle->end());
  path.insert(path.end(), cycle->begin(), it);
  return CycleWitness{std::move(path)};
}

bool has_cycle_of_length(const Graph& g, int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
  const int n = g.order();
  if (length > n) return false;
  if (n > 31)
    throw std::invalid_argument("has_cycle_of_length supports order <= 31");

  std::array<std::uint32_t, 32> adj{};
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;

  std::vector<int> dist(n);
  // Anchor s is the smallest vertex of the cycle; search uses vertices >= s.
  for (int s = 0; s + length <= n; ++s) {
    const std::uint32_t allowed = ((n == 32) ? ~std::uint32_t{0}
                                             : (std::uint32_t{1} << n) - 1) &
                                  ~((std::uint32_t{1} << s) - 1);
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (std::uint32_t m = adj[u] & allowed; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }

    std::uint32_t visited = std::uint32_t{1} << s;
    auto dfs = [&](auto&& self, int cur, int depth) -> bool {
      if (depth == length) return (adj[cur] >> s) & 1u;
      for (std::uint32_t m = adj[cur] & allowed & ~visited; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (dist[v] < 0 || dist[v] > length - depth) continue;
        visited |= std::uint32_t{1} << v;
        if (self(self, v, depth + 1)) return true;
        visited &= ~(std::uint32_t{1} << v);
      }
      return false;
    };
    if (dfs(dfs, s, 1)) return true;
  }
  return false;
}

PancyclicityResult is_pancyclic(const Graph& g) {
  if (g.order() > kPancyclicMaxOrder)
    throw std::invalid_argument("is_pancyclic supports order <= " +
                                std::to_string(kPancyclicMaxOrder));
  if (g.order() < 3) return {false, 3};
  for (int len = 3; len <= g.order(); ++len)
    if (!has_cycle_of_length(g, len)) return {false, len};
  return {true, std::nullopt};
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Rational& Rational::operator+=(const Rational& o) {
  __int128 nn = static_cast<__int128>(num) * o.den +
                static_cast<__int128>(o.num) * den;
  __int128 dd = static_cast<__int128>(den) * o.den;
  __int128 a = nn < 0 ? -nn : nn, b = dd;
  while (b) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    nn /= a;
    dd /= a;
  }
  constexpr __int128 kMax = INT64_MAX;
  if (nn > kMax || dd > kMax || nn < -kMax)
    throw std::overflow_error("rational overflow");
  num = static_cast<long long>(nn);
  den = static_cast<long long>(dd);
  if (num == 0) den = 1;
  return *this;
}

bool Rational::operator<=(long long k) const {
  return static_cast<__int128>(num) <= static_cast<__int128>(k) * den;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int s) {
  std::vector<int> dist(g.order(), -1);
  dist[s] = 0;
  std::deque<int> queue{s};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

PredicateReport literature_predicates(const Graph& g) {
  const int n = g.order();
  PredicateReport rep;

  int min_deg = n == 0 ? 0 : g.degree(0);
  for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
  rep.dirac = n >= 3 && 2 * min_deg >= n;

  if (n >= 3) {
    rep.ore = true;
    for (int u = 0; u < n && rep.ore; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n) {
          rep.ore = false;
          break;
        }
  }

  bool regular = n > 0;
  for (int v = 1; v < n && regular; ++v)
    if (g.degree(v) != g.degree(0)) regular = false;
  if (regular && is_two_connected(g) && n <= 3 * g.degree(0) + 1) {
    rep.holton_sheehan =
        !(n == 10 && g.degree(0) == 3 && is_isomorphic(g, petersen_graph()));
  }

  const bool connected = is_connected(g);
  if (connected) {
    rep.rahman_kaykobad = true;
    for (int u = 0; u < n && rep.rahman_kaykobad; ++u) {
      auto dist = bfs_distances(g, u);
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) &&
            g.degree(u) + g.degree(v) + dist[v] <= n) {
          rep.rahman_kaykobad = false;
          break;
        }
    }
  }

  if (n <= kHamiltonianMaxOrder) {
    const bool ham = hamiltonian_cycle(g).has_value();
    rep.bondy_premise =
        ham && 4 * static_cast<long long>(g.edge_count()) >=
                   static_cast<long long>(n) * n;
  }

  if (auto bip = bipartition(g); bip.parts) {
    const auto& parts = *bip.parts;
    const auto q = parts.left.size();
    if (q >= 2 && q == parts.right.size()) {
      bool ok = true;
      for (int u : parts.left) {
        for (int v : parts.right)
          if (!g.has_edge(u, v) &&
              g.degree(u) + g.degree(v) < static_cast<int>(q) + 1) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      rep.moon_moser = ok;
    }
  }

  Rational bound;
  for (int v = 0; v < n; ++v) bound += Rational(1, g.degree(v) + 1);
  rep.caro_wei_bound = bound;
  return rep;
}

}  // namespace degseq

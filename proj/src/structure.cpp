#include "degseq/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "degseq/recognize.hpp"

namespace degseq {

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return connected_components(g).size() == 1;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_i(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<VertexPair> edge_stack;
  int timer = 0;

  auto emit_block = [&](int u, int v) {
    std::vector<int> verts;
    while (!edge_stack.empty()) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e.first == u && e.second == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.blocks.push_back(std::move(verts));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.blocks.push_back({root});  // isolated vertex: trivial block
      continue;
    }
    int root_children = 0;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const int u = stack.back();
      auto nb = g.neighbors(u);
      if (next_i[u] < nb.size()) {
        const int v = nb[next_i[u]++];
        if (disc[v] == -1) {
          parent[v] = u;
          disc[v] = low[v] = timer++;
          edge_stack.emplace_back(u, v);
          stack.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          edge_stack.emplace_back(u, v);  // back edge
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        const int p = parent[u];
        if (p == -1) continue;
        low[p] = std::min(low[p], low[u]);
        if (p == root) ++root_children;
        if (low[u] >= disc[p]) {
          emit_block(p, u);
          if (p != root) is_cut[p] = true;
          if (low[u] > disc[p]) out.bridges.emplace_back(std::min(p, u),
                                                         std::max(p, u));
        }
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }

  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.bridges.begin(), out.bridges.end());
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

int separability_case(const BlockDecomposition& d) {
  const auto cuts = d.cut_vertices.size();
  const auto bridges = d.bridges.size();
  if (cuts == 0 && bridges == 0) return 1;
  if (cuts == 1 && bridges == 0) return 2;
  if (cuts == 2 && bridges == 1) return 3;
  if (cuts == 2 && bridges == 2) return 4;
  if (cuts == 3 && bridges == 4) return 5;
  return 0;
}

int separability_case(const Graph& g) {
  return separability_case(block_decomposition(g));
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int diam = 0;
  std::vector<int> dist(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      diam = std::max(diam, dist[u]);
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          ++reached;
          queue.push_back(v);
        }
      }
    }
    if (reached < n) return std::nullopt;
  }
  return diam;
}

namespace {

// Shortest odd closed walk through s via breadth-first search on the
// bipartite double cover; the globally shortest one is a simple cycle.
std::vector<int> odd_walk_through(const Graph& g, int s) {
  const int n = g.order();
  std::vector<int> dist(2 * n, -1), from(2 * n, -1);
  std::deque<int> queue{2 * s};
  dist[2 * s] = 0;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const int u = cur / 2, parity = cur % 2;
    for (int v : g.neighbors(u)) {
      const int nxt = 2 * v + (1 - parity);
      if (dist[nxt] < 0) {
        dist[nxt] = dist[cur] + 1;
        from[nxt] = cur;
        queue.push_back(nxt);
      }
    }
  }
  if (dist[2 * s + 1] < 0) return {};
  std::vector<int> walk;
  for (int cur = 2 * s + 1; cur != -1; cur = from[cur]) walk.push_back(cur / 2);
  walk.pop_back();  // drop the duplicated start
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace

BipartitionResult bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  bool odd_found = false;
  for (int s = 0; s < n && !odd_found; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty() && !odd_found) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          odd_found = true;
          break;
        }
      }
    }
  }

  BipartitionResult res;
  if (odd_found) {
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
      auto walk = odd_walk_through(g, s);
      if (!walk.empty() && (best.empty() || walk.size() < best.size()))
        best = std::move(walk);
    }
    res.odd_cycle = std::move(best);
    return res;
  }

  Bipartition parts;
  for (int v = 0; v < n; ++v)
    (color[v] == 0 ? parts.left : parts.right).push_back(v);
  // Keep both sides nonempty when edges cannot force it (edgeless graphs).
  if (parts.right.empty() && parts.left.size() >= 2) {
    parts.right.push_back(parts.left.back());
    parts.left.pop_back();
  }
  if (parts.left.size() > parts.right.size()) std::swap(parts.left, parts.right);
  res.parts = std::move(parts);
  return res;
}

int bipartite_case(const Graph& g, const Bipartition& parts) {
  auto sig = signature_from_degrees(degree_sequence(g));
  if (!sig || !sig->two_clique() || !is_member_g(g, *sig))
    throw std::invalid_argument(
        "bipartite_case requires a two-clique class member");
  const int m = sig->parts[0], n = sig->parts[1];
  const auto s1 = parts.left.size(), s2 = parts.right.size();

  int label = 0, matches = 0;
  if (s1 == s2 && n == m + 2 && m % 2 == 0 && n % 2 == 0) {
    label = 1;
    ++matches;
  }
  if (static_cast<int>(s1) == m && static_cast<int>(s2) == n && n == m + 1) {
    label = 2;
    ++matches;
  }
  if (s1 == s2 && m == n) {
    label = 3;
    ++matches;
  }
  return matches == 1 ? label : 0;
}

}  // namespace degseq

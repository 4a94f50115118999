#include "degseq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace degseq {

Graph::Graph(int order, std::span<const VertexPair> edges) : order_(order) {
  if (order < 0) throw std::invalid_argument("graph order must be >= 0");
  std::vector<VertexPair> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") with order " + std::to_string(order));
    if (u == v)
      throw std::invalid_argument("self-loop not allowed at vertex " +
                                  std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  edge_count_ = norm.size();

  std::vector<std::int32_t> deg(order, 0);
  for (auto [u, v] : norm) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(order + 1, 0);
  for (int v = 0; v < order; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  flat_.resize(offsets_[order]);
  std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : norm) {
    flat_[fill[u]++] = v;
    flat_[fill[v]++] = u;
  }
  for (int v = 0; v < order; ++v)
    std::sort(flat_.begin() + offsets_[v], flat_.begin() + offsets_[v + 1]);

  if (order <= kDenseOrderLimit && order > 0) {
    words_per_row_ = (order + 63) / 64;
    bits_.assign(static_cast<std::size_t>(order) * words_per_row_, 0);
    for (auto [u, v] : norm) {
      bits_[static_cast<std::size_t>(u) * words_per_row_ + (v >> 6)] |=
          std::uint64_t{1} << (v & 63);
      bits_[static_cast<std::size_t>(v) * words_per_row_ + (u >> 6)] |=
          std::uint64_t{1} << (u & 63);
    }
  }
}

Graph::Graph(int order, std::initializer_list<VertexPair> edges)
    : Graph(order, std::span<const VertexPair>(edges.begin(), edges.size())) {}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_ || u == v) return false;
  if (!bits_.empty()) return dense_bit(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

ClassSignature::ClassSignature(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end());
}

ClassSignature::ClassSignature(std::initializer_list<int> p)
    : ClassSignature(std::vector<int>(p)) {}

int ClassSignature::order() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

DegreeMultiset ClassSignature::required_degrees() const {
  DegreeMultiset d;
  for (int p : parts) {
    if (!d.counts.empty() && d.counts.back().first == p - 1)
      d.counts.back().second += p;
    else
      d.counts.emplace_back(p - 1, p);
  }
  return d;
}

bool ClassSignature::valid_class() const {
  if (parts.empty()) return false;
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 2; });
}

std::string to_string(const ClassSignature& sig) {
  std::string s = "{";
  for (std::size_t i = 0; i < sig.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sig.parts[i]);
  }
  return s + "}";
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexPair> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edge_count());
  for (int u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    std::size_t i = 0;
    for (int v = u + 1; v < n; ++v) {
      while (i < nb.size() && nb[i] < v) ++i;
      if (i >= nb.size() || nb[i] != v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

DegreeMultiset degree_sequence(const Graph& g) {
  std::vector<int> degs(g.order());
  for (int v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
  std::sort(degs.begin(), degs.end());
  DegreeMultiset d;
  for (int x : degs) {
    if (!d.counts.empty() && d.counts.back().first == x)
      ++d.counts.back().second;
    else
      d.counts.emplace_back(x, 1);
  }
  return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> parts;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(parts.size());
    parts.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      parts[id].push_back(u);
      for (int v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(parts[id].begin(), parts[id].end());
  }
  return parts;
}

std::optional<ClassSignature> is_clique_union(const Graph& g) {
  // A component of size s is complete iff all its vertices have degree s-1.
  auto parts = connected_components(g);
  std::vector<int> sizes;
  sizes.reserve(parts.size());
  for (const auto& part : parts) {
    const int s = static_cast<int>(part.size());
    for (int v : part)
      if (g.degree(v) != s - 1) return std::nullopt;
    sizes.push_back(s);
  }
  if (sizes.empty()) return std::nullopt;
  return ClassSignature(std::move(sizes));
}

}  // namespace degseq

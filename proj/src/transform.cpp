#include "degseq/transform.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "degseq/canonical.hpp"

namespace degseq {

bool two_switch_valid(const Graph& g, const TwoSwitch& s) {
  const int u = s.u, v = s.v, x = s.x, y = s.y;
  if (u == v || u == x || u == y || v == x || v == y || x == y) return false;
  return g.has_edge(u, v) && g.has_edge(x, y) && !g.has_edge(u, x) &&
         !g.has_edge(v, y);
}

std::vector<TwoSwitch> enumerate_two_switches(const Graph& g) {
  std::vector<TwoSwitch> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      for (int x = 0; x < n; ++x) {
        if (x == u || x == v || g.has_edge(u, x)) continue;
        for (int y : g.neighbors(x)) {
          if (y == u || y == v || g.has_edge(v, y)) continue;
          out.push_back({u, v, x, y});
        }
      }
    }
  }
  return out;
}

Graph apply_two_switch(const Graph& g, const TwoSwitch& s) {
  if (!two_switch_valid(g, s))
    throw std::invalid_argument("two-switch is not valid for this graph");
  std::vector<VertexPair> edges = g.edges();
  const VertexPair drop1{std::min(s.u, s.v), std::max(s.u, s.v)};
  const VertexPair drop2{std::min(s.x, s.y), std::max(s.x, s.y)};
  std::erase_if(edges, [&](const VertexPair& e) {
    return e == drop1 || e == drop2;
  });
  edges.emplace_back(std::min(s.u, s.x), std::max(s.u, s.x));
  edges.emplace_back(std::min(s.v, s.y), std::max(s.v, s.y));
  return Graph(g.order(), edges);
}

namespace {

void require_nonempty_two_clique(const ClassSignature& sig) {
  if (!sig.two_clique())
    throw std::invalid_argument("signature must have exactly two parts");
  const int m = sig.parts[0], n = sig.parts[1];
  if (m < 2 || n < 2 || (m == 2 && n == 2))
    throw std::invalid_argument("class " + to_string(sig) + " is empty");
}

}  // namespace

Graph sample_member(const ClassSignature& sig, int steps, std::uint64_t seed) {
  require_nonempty_two_clique(sig);
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  std::mt19937_64 rng(seed);
  Graph g = clique_union_graph(sig);
  auto step = [&] {
    auto switches = enumerate_two_switches(g);
    g = apply_two_switch(g, switches[rng() % switches.size()]);
  };
  for (int i = 0; i < steps; ++i) step();
  while (is_clique_union(g)) step();
  return g;
}

ClassEnumeration enumerate_class(const ClassSignature& sig,
                                 const EnumerationBudget& budget) {
  if (!sig.valid_class())
    throw std::invalid_argument("signature parts must all be >= 2");
  if (sig.order() > kCanonicalMaxOrder)
    throw std::invalid_argument("class order exceeds the canonical-form bound");

  ClassEnumeration result;
  result.signature = sig;
  const auto deadline = std::chrono::steady_clock::now() + budget.max_wall;

  std::deque<Graph> frontier{clique_union_graph(sig)};
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;

  while (!frontier.empty()) {
    if (std::chrono::steady_clock::now() > deadline) {
      result.complete = false;
      break;
    }
    Graph g = std::move(frontier.front());
    frontier.pop_front();
    ++result.states_expanded;
    bool stop = false;
    for (const TwoSwitch& s : enumerate_two_switches(g)) {
      Graph h = apply_two_switch(g, s);
      // Any clique union reached here is the start class again.
      if (is_clique_union(h)) continue;
      std::string code = canonical_form(h);
      if (!seen.insert(code).second) continue;
      if (found.size() >= budget.max_classes) {
        result.complete = false;
        stop = true;
        break;
      }
      if (frontier.size() >= budget.max_frontier)
        result.complete = false;
      else
        frontier.push_back(h);
      found.emplace_back(std::move(code), std::move(h));
    }
    if (stop) break;
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [code, rep] : found) {
    result.codes.push_back(std::move(code));
    result.representatives.push_back(std::move(rep));
  }
  return result;
}

Graph twin_bridge_two_cliques(int m, int n) {
  if (!(n > m && m >= 4))
    throw std::invalid_argument(
        "twin_bridge_two_cliques requires n > m >= 4 (a clique of size 3 "
        "minus an edge is not 2-connected)");
  std::vector<VertexPair> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) edges.emplace_back(m + i, m + j);
  edges.emplace_back(0, m);      // u -- u'
  edges.emplace_back(1, m + 1);  // v -- v'
  return Graph(m + n, edges);
}

Graph twin_bridge_one_clique(int n, AttachPattern attach) {
  if (n < 4)
    throw std::invalid_argument("twin_bridge_one_clique requires n >= 4");
  // Damaged clique on 0..n-1 with edges (0,1) and (2,3) removed; intact
  // clique K_{n-1} on n..2n-2 attached at vertices n and n+1.
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1) && !(i == 2 && j == 3)) edges.emplace_back(i, j);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) edges.emplace_back(n + i, n + j);
  edges.emplace_back(0, n);
  edges.emplace_back(attach == AttachPattern::adjacent ? 2 : 1, n + 1);
  return Graph(2 * n - 1, edges);
}

Graph pendant_family(int n) {
  if (n < 4) throw std::invalid_argument("pendant_family requires n >= 4");
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
  edges.emplace_back(0, n);
  edges.emplace_back(1, n + 1);
  return Graph(n + 2, edges);
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle_graph requires k >= 3");
  std::vector<VertexPair> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, edges);
}

Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path_graph requires k >= 1");
  std::vector<VertexPair> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, edges);
}

Graph complete_graph(int k) {
  if (k < 1) throw std::invalid_argument("complete_graph requires k >= 1");
  std::vector<VertexPair> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph(k, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete_bipartite_graph requires a, b >= 1");
  std::vector<VertexPair> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, edges);
}

Graph clique_union_graph(const ClassSignature& sig) {
  if (sig.parts.empty())
    throw std::invalid_argument("clique union needs at least one part");
  std::vector<VertexPair> edges;
  int base = 0;
  for (int p : sig.parts) {
    if (p < 1) throw std::invalid_argument("clique sizes must be >= 1");
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) edges.emplace_back(base + i, base + j);
    base += p;
  }
  return Graph(base, edges);
}

Graph cube_graph() {
  std::vector<VertexPair> edges;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (std::popcount(static_cast<unsigned>(i ^ j)) == 1)
        edges.emplace_back(i, j);
  return Graph(8, edges);
}

Graph petersen_graph() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph icosahedron_graph() {
  // Pole 0, upper ring 1..5, lower ring 6..10, pole 11.
  std::vector<VertexPair> edges;
  for (int i = 1; i <= 5; ++i) edges.emplace_back(0, i);
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(1 + i, 1 + (i + 1) % 5);
    edges.emplace_back(6 + i, 6 + (i + 1) % 5);
    edges.emplace_back(1 + i, 6 + i);
    edges.emplace_back(1 + i, 6 + (i + 4) % 5);
    edges.emplace_back(11, 6 + i);
  }
  return Graph(12, edges);
}

Graph dodecahedron_graph() {
  // Generalized Petersen graph GP(10,2).
  std::vector<VertexPair> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  return Graph(20, edges);
}

namespace {

std::vector<int> parse_args(const std::string& inside) {
  std::vector<int> args;
  std::size_t pos = 0;
  while (pos < inside.size()) {
    std::size_t next = inside.find(',', pos);
    if (next == std::string::npos) next = inside.size();
    const std::string tok = inside.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      const int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      args.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad fixture argument: '" + tok + "'");
    }
    pos = next + 1;
  }
  return args;
}

}  // namespace

Graph fixture(const std::string& name) {
  const std::size_t open = name.find('(');
  std::string head = name.substr(0, open);
  std::vector<int> args;
  if (open != std::string::npos) {
    if (name.back() != ')')
      throw std::invalid_argument("unbalanced fixture name: " + name);
    args = parse_args(name.substr(open + 1, name.size() - open - 2));
  }
  auto expect = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("fixture " + head + " expects " +
                                  std::to_string(k) + " argument(s)");
  };
  if (head == "cube") {
    expect(0);
    return cube_graph();
  }
  if (head == "icosahedron") {
    expect(0);
    return icosahedron_graph();
  }
  if (head == "dodecahedron") {
    expect(0);
    return dodecahedron_graph();
  }
  if (head == "petersen") {
    expect(0);
    return petersen_graph();
  }
  if (head == "cycle") {
    expect(1);
    return cycle_graph(args[0]);
  }
  if (head == "path") {
    expect(1);
    return path_graph(args[0]);
  }
  if (head == "complete") {
    expect(1);
    return complete_graph(args[0]);
  }
  if (head == "complete_bipartite") {
    expect(2);
    return complete_bipartite_graph(args[0], args[1]);
  }
  if (head == "clique_union") {
    if (args.empty())
      throw std::invalid_argument("clique_union needs at least one size");
    return clique_union_graph(ClassSignature(args));
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace degseq

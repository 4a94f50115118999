#include "degseq/canonical.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace degseq {
namespace {

// Canonical labeling by individualization-refinement. The code of a labeling
// p_0..p_{n-1} is the upper triangle of the permuted adjacency matrix read
// column by column, each column most-significant-bit first; the chosen
// labeling minimizes that bit string over all labelings consistent with the
// refinement cell order.
struct Canonicalizer {
  int n;
  std::array<std::uint32_t, kCanonicalMaxOrder> adj{};
  std::vector<std::uint32_t> best;  // per-position column values
  int best_len = 0;
  std::vector<int> prefix;  // vertices already holding labels 0..t-1

  explicit Canonicalizer(const Graph& g) : n(g.order()) {
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
    best.assign(n, 0);
    prefix.reserve(n);
  }

  // Equitable refinement: split cells by neighbor counts into splitter cells,
  // subcells ordered by ascending count. Restarts after each split; cheap at
  // this order bound.
  static void refine(std::vector<std::uint32_t>& cells,
                     const std::array<std::uint32_t, kCanonicalMaxOrder>& adj) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        const std::uint32_t splitter = cells[si];
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
          std::uint32_t cell = cells[ci];
          if (std::popcount(cell) <= 1) continue;
          std::array<std::uint32_t, kCanonicalMaxOrder + 1> by_key{};
          for (std::uint32_t m = cell; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            by_key[std::popcount(adj[v] & splitter)] |= std::uint32_t{1} << v;
          }
          std::vector<std::uint32_t> groups;
          for (const std::uint32_t grp : by_key)
            if (grp) groups.push_back(grp);
          if (groups.size() <= 1) continue;
          cells.erase(cells.begin() + ci);
          cells.insert(cells.begin() + ci, groups.begin(), groups.end());
          changed = true;
          break;
        }
      }
    }
  }

  // Every permutation of a twin cell (clique or independent set whose members
  // have identical neighborhoods outside the cell) is an automorphism fixing
  // the rest, so one candidate suffices.
  bool twin_cell(std::uint32_t cell) const {
    const int first = std::countr_zero(cell);
    const std::uint32_t inside0 = adj[first] & cell;
    const bool complete = inside0 == (cell ^ (std::uint32_t{1} << first));
    if (!complete && inside0 != 0) return false;
    const std::uint32_t outside0 = adj[first] & ~cell;
    for (std::uint32_t m = cell & (cell - 1); m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const std::uint32_t inside = adj[v] & cell;
      if (complete) {
        if (inside != (cell ^ (std::uint32_t{1} << v))) return false;
      } else {
        if (inside != 0) return false;
      }
      if ((adj[v] & ~cell) != outside0) return false;
    }
    return true;
  }

  std::uint32_t column_value(int v) const {
    std::uint32_t val = 0;
    for (int p : prefix) val = (val << 1) | ((adj[v] >> p) & 1u);
    return val;
  }

  // Compares and installs columns for newly determined positions, then
  // branches on the first non-singleton cell.
  void dfs(std::vector<std::uint32_t> cells, int depth) {
    std::size_t idx = static_cast<std::size_t>(depth);
    const std::size_t pushed_at = prefix.size();
    while (idx < cells.size() && std::popcount(cells[idx]) == 1) {
      const int v = std::countr_zero(cells[idx]);
      const std::uint32_t col = column_value(v);
      const int k = static_cast<int>(idx);
      if (k < best_len) {
        if (col > best[k]) {
          prefix.resize(pushed_at);
          return;  // worse than best prefix
        }
        if (col < best[k]) {
          best[k] = col;
          best_len = k + 1;
        }
      } else {
        best[k] = col;
        best_len = k + 1;
      }
      prefix.push_back(v);
      ++idx;
    }
    if (idx == cells.size()) {
      prefix.resize(pushed_at);
      return;  // leaf: best already holds this code
    }
    const std::uint32_t target = cells[idx];
    const bool twins = twin_cell(target);
    for (std::uint32_t m = target; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      std::vector<std::uint32_t> next(cells.begin(),
                                      cells.begin() + static_cast<long>(idx));
      next.push_back(std::uint32_t{1} << v);
      next.push_back(target ^ (std::uint32_t{1} << v));
      next.insert(next.end(), cells.begin() + static_cast<long>(idx) + 1,
                  cells.end());
      refine(next, adj);
      dfs(std::move(next), static_cast<int>(idx));
      if (twins) break;
    }
    prefix.resize(pushed_at);
  }

  std::string run() {
    if (n == 0) return "0:";
    std::vector<std::uint32_t> cells{(std::uint32_t{1} << n) - 1};
    refine(cells, adj);
    dfs(std::move(cells), 0);
    // Pack columns 1..n-1 (column k carries k bits, MSB first) into hex.
    std::string hex;
    int acc = 0, nbits = 0;
    auto flush = [&](int bit) {
      acc = (acc << 1) | bit;
      if (++nbits == 4) {
        hex += "0123456789abcdef"[acc];
        acc = 0;
        nbits = 0;
      }
    };
    for (int k = 1; k < n; ++k)
      for (int i = k - 1; i >= 0; --i) flush((best[k] >> i) & 1u);
    if (nbits > 0) hex += "0123456789abcdef"[acc << (4 - nbits)];
    return std::to_string(n) + ":" + hex;
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical_form supports order <= " +
                                std::to_string(kCanonicalMaxOrder) + ", got " +
                                std::to_string(g.order()));
  return Canonicalizer(g).run();
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (!(degree_sequence(g) == degree_sequence(h))) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace degseq

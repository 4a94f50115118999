#include "degseq/recognize.hpp"

namespace degseq {

std::optional<ClassSignature> signature_from_degrees(const DegreeMultiset& d) {
  if (d.counts.empty()) return std::nullopt;
  std::vector<int> parts;
  for (auto [degree, mult] : d.counts) {
    if (degree < 1) return std::nullopt;
    if (mult % (degree + 1) != 0) return std::nullopt;
    const int k = mult / (degree + 1);
    parts.insert(parts.end(), k, degree + 1);
  }
  return ClassSignature(std::move(parts));
}

bool is_member_g(const Graph& g, const ClassSignature& sig) {
  if (!(degree_sequence(g) == sig.required_degrees())) return false;
  auto base = is_clique_union(g);
  return !(base && *base == sig);
}

bool is_member_complement(const Graph& g, int m, int n) {
  if (m < 2 || n < 2) return false;
  if (m > n) std::swap(m, n);
  // Complement-class degrees: n vertices of degree m and m of degree n.
  DegreeMultiset want;
  if (m == n)
    want.counts = {{n, 2 * n}};
  else
    want.counts = {{m, n}, {n, m}};
  if (!(degree_sequence(g) == want)) return false;
  return is_member_g(complement(g), ClassSignature{m, n});
}

Membership classify(const Graph& g) {
  const DegreeMultiset d = degree_sequence(g);

  if (auto sig = signature_from_degrees(d)) {
    auto base = is_clique_union(g);
    if (base && *base == *sig)
      return Membership{ClassKind::neither, std::nullopt, true};
    return Membership{ClassKind::g_class, std::move(sig), false};
  }

  // Two-clique complement form: degrees {m^n, n^m} (or {n^2n} when m = n).
  std::optional<std::pair<int, int>> mn;
  if (d.counts.size() == 1) {
    auto [degree, mult] = d.counts[0];
    if (degree >= 2 && mult == 2 * degree) mn = {degree, degree};
  } else if (d.counts.size() == 2) {
    auto [d1, c1] = d.counts[0];
    auto [d2, c2] = d.counts[1];
    if (d1 >= 2 && c1 == d2 && c2 == d1) mn = {d1, d2};
  }
  if (mn) {
    auto [m, n] = *mn;
    Graph co = complement(g);
    auto base = is_clique_union(co);
    const ClassSignature sig{m, n};
    if (base && *base == sig)
      return Membership{ClassKind::neither, std::nullopt, true};
    if (is_member_g(co, sig))
      return Membership{ClassKind::complement_class, sig, false};
  }
  return Membership{};
}

}  // namespace degseq

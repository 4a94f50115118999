#ifndef DEGSEQ_RECOGNIZE_HPP
#define DEGSEQ_RECOGNIZE_HPP

#include <optional>

#include "degseq/graph.hpp"

namespace degseq {

enum class ClassKind { g_class, complement_class, neither };

struct Membership {
  ClassKind kind = ClassKind::neither;
  std::optional<ClassSignature> signature;
  // Degrees match but the graph is the excluded base point itself: the
  // clique union for G-classes, the complete bipartite complement of it for
  // complement classes.
  bool excluded_as_base = false;

  bool operator==(const Membership&) const = default;
};

/// The unique signature implied degree-by-degree: degree p with multiplicity
/// c contributes c/(p+1) parts of size p+1; nullopt if any degree fails the
/// divisibility test (or is 0, which would need size-1 parts).
std::optional<ClassSignature> signature_from_degrees(const DegreeMultiset& d);

/// True iff g has the degrees of the disjoint clique union given by sig and
/// is not that union itself. Runs in O(V+E).
bool is_member_g(const Graph& g, const ClassSignature& sig);

/// True iff complement(g) is a member of the two-clique class {m,n};
/// equivalently g has degrees {m^n, n^m} and is not the complete
/// multipartite complement of the clique union.
bool is_member_complement(const Graph& g, int m, int n);

/// Dispatches over both recognizers. For degree multisets admitting a
/// signature with more than two parts, only G-class membership is reported.
Membership classify(const Graph& g);

}  // namespace degseq

#endif

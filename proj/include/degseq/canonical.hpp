#ifndef DEGSEQ_CANONICAL_HPP
#define DEGSEQ_CANONICAL_HPP

#include <string>

#include "degseq/graph.hpp"

namespace degseq {

/// Largest order canonical_form / is_isomorphic accept.
inline constexpr int kCanonicalMaxOrder = 16;

/// Label-independent code: equal codes iff isomorphic graphs.
/// Format "<order>:<hex of packed upper-triangle bits, column-major>".
/// Throws std::invalid_argument when order exceeds kCanonicalMaxOrder.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace degseq

#endif

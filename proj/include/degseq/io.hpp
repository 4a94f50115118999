#ifndef DEGSEQ_IO_HPP
#define DEGSEQ_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "degseq/graph.hpp"
#include "degseq/hunt.hpp"
#include "degseq/recognize.hpp"

namespace degseq::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { graph6, edge_list };

/// Standard graph6 line (bit-exact: size prefix, upper triangle by columns,
/// 6-bit groups offset by 63). Throws ParseError on malformed input,
/// including nonzero padding bits.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// First line "n", then one "u v" pair per line, 0-indexed.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);

/// Undirected DOT block; vertices labeled by index, optionally annotated
/// with their degree. Output only.
std::string emit_dot(const Graph& g, bool degree_labels = false);

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Membership& m);
Membership membership_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PropertyReport& r);
PropertyReport property_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HuntReport& r);
HuntReport hunt_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassEnumeration& e);

}  // namespace degseq::io

#endif

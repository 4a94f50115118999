#include "degseq/io.hpp"

#include <charconv>
#include <sstream>

namespace degseq::io {

namespace {

using nlohmann::json;

void append_six_bit_groups(std::string& out, const std::vector<bool>& bits) {
  int acc = 0, nbits = 0;
  for (bool b : bits) {
    acc = (acc << 1) | (b ? 1 : 0);
    if (++nbits == 6) {
      out += static_cast<char>(acc + 63);
      acc = 0;
      nbits = 0;
    }
  }
  if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_six_bit_groups(out, bits);
  return out;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 input");
  for (char c : line)
    if (c < 63 || c > 126)
      throw ParseError("graph6 character out of range: " +
                       std::to_string(static_cast<int>(c)));

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = line[0] - 63;
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw ParseError("truncated graph6 size prefix");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (line[k] - 63);
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("truncated graph6 size prefix");
    for (int k = 2; k <= 7; ++k) n = (n << 6) | (line[k] - 63);
    pos = 8;
  }
  if (n < 0 || n > 1'000'000) throw ParseError("unreasonable graph6 order");

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expect = (nbits + 5) / 6;
  if (line.size() - pos != expect)
    throw ParseError("graph6 body length mismatch: expected " +
                     std::to_string(expect) + " characters, got " +
                     std::to_string(line.size() - pos));

  std::vector<VertexPair> edges;
  std::size_t bit = 0;
  int i = 0, j = 1;
  for (std::size_t k = pos; k < line.size(); ++k) {
    const int group = line[k] - 63;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (group >> shift) & 1;
      if (bit >= nbits) {
        if (set) throw ParseError("nonzero graph6 padding bits");
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string first;
  if (!(in >> first)) throw ParseError("empty edge-list input");
  int n = 0;
  auto [p1, ec1] = std::from_chars(first.data(), first.data() + first.size(), n);
  if (ec1 != std::errc() || p1 != first.data() + first.size() || n < 0)
    throw ParseError("bad vertex count: '" + first + "'");
  std::vector<VertexPair> edges;
  std::string a, b;
  while (in >> a) {
    if (!(in >> b)) throw ParseError("dangling edge endpoint: '" + a + "'");
    int u = 0, v = 0;
    auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), u);
    auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), v);
    if (ea != std::errc() || pa != a.data() + a.size() || eb != std::errc() ||
        pb != b.data() + b.size())
      throw ParseError("bad edge line: '" + a + " " + b + "'");
    edges.emplace_back(u, v);
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text)
                                       : parse_edge_list(text);
}

std::string emit_dot(const Graph& g, bool degree_labels) {
  std::ostringstream out;
  out << "graph degseq {\n";
  for (int v = 0; v < g.order(); ++v) {
    if (degree_labels)
      out << "  " << v << " [label=\"" << v << " (deg " << g.degree(v)
          << ")\"];\n";
    else if (g.degree(v) == 0)
      out << "  " << v << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

json signature_json(const ClassSignature& sig) { return json(sig.parts); }

ClassSignature signature_from(const json& j) {
  return ClassSignature(j.get<std::vector<int>>());
}

std::string kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::g_class:
      return "G";
    case ClassKind::complement_class:
      return "complement";
    default:
      return "neither";
  }
}

ClassKind kind_from(const std::string& s) {
  if (s == "G") return ClassKind::g_class;
  if (s == "complement") return ClassKind::complement_class;
  if (s == "neither") return ClassKind::neither;
  throw ParseError("unknown class kind: " + s);
}

std::string verdict_name(SolverVerdict v) {
  switch (v) {
    case SolverVerdict::yes:
      return "yes";
    case SolverVerdict::no:
      return "no";
    default:
      return "out_of_range";
  }
}

SolverVerdict verdict_from(const std::string& s) {
  if (s == "yes") return SolverVerdict::yes;
  if (s == "no") return SolverVerdict::no;
  if (s == "out_of_range") return SolverVerdict::out_of_range;
  throw ParseError("unknown solver verdict: " + s);
}

std::string mode_name(HuntMode m) {
  return m == HuntMode::exhaustive ? "exhaustive" : "random";
}

HuntMode mode_from(const std::string& s) {
  if (s == "exhaustive") return HuntMode::exhaustive;
  if (s == "random") return HuntMode::random;
  throw ParseError("unknown hunt mode: " + s);
}

template <typename T>
json opt_json(const std::optional<T>& v) {
  if (v) return json(*v);
  return json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

void check_schema(const json& j, const char* kind) {
  if (!j.is_object() || j.value("schema_version", -1) != kSchemaVersion)
    throw ParseError("missing or unsupported schema_version");
  if (j.value("kind", "") != kind)
    throw ParseError(std::string("expected document kind '") + kind + "'");
}

}  // namespace

json to_json(const Membership& m) {
  json j{{"schema_version", kSchemaVersion},
         {"kind", "membership"},
         {"class", kind_name(m.kind)},
         {"excluded_as_base", m.excluded_as_base}};
  j["signature"] = m.signature ? signature_json(*m.signature) : json(nullptr);
  return j;
}

Membership membership_from_json(const json& j) {
  check_schema(j, "membership");
  Membership m;
  m.kind = kind_from(j.at("class").get<std::string>());
  m.excluded_as_base = j.at("excluded_as_base").get<bool>();
  if (!j.at("signature").is_null())
    m.signature = signature_from(j.at("signature"));
  return m;
}

json to_json(const PropertyReport& r) {
  json p{{"dirac", r.predicates.dirac},
         {"ore", r.predicates.ore},
         {"holton_sheehan", r.predicates.holton_sheehan},
         {"rahman_kaykobad", r.predicates.rahman_kaykobad},
         {"bondy_premise", opt_json(r.predicates.bondy_premise)},
         {"moon_moser", opt_json(r.predicates.moon_moser)},
         {"caro_wei_num", r.predicates.caro_wei_bound.num},
         {"caro_wei_den", r.predicates.caro_wei_bound.den}};
  json j{{"schema_version", kSchemaVersion},
         {"kind", "property_report"},
         {"order", r.order},
         {"edges", r.edges},
         {"membership", to_json(r.membership)},
         {"connected", r.connected},
         {"two_connected", r.two_connected},
         {"cut_vertices", r.cut_vertices},
         {"bridges", r.bridges},
         {"separability_case", opt_json(r.separability_case)},
         {"diameter", opt_json(r.diameter)},
         {"bipartite", r.bipartite},
         {"bipartite_case", opt_json(r.bipartite_case)},
         {"hamiltonian", verdict_name(r.hamiltonian)},
         {"traceable", verdict_name(r.traceable)},
         {"pancyclic", verdict_name(r.pancyclic)},
         {"first_missing_cycle_length", opt_json(r.first_missing_cycle_length)},
         {"predicates", std::move(p)},
         {"independence_number", opt_json(r.independence_number)},
         {"violations", r.violations}};
  j["bipartite_parts"] =
      r.bipartite_parts
          ? json::array({r.bipartite_parts->first, r.bipartite_parts->second})
          : json(nullptr);
  j["cycle_witness"] =
      r.cycle_witness ? json(r.cycle_witness->vertices) : json(nullptr);
  j["path_witness"] =
      r.path_witness ? json(r.path_witness->vertices) : json(nullptr);
  return j;
}

PropertyReport property_report_from_json(const json& j) {
  check_schema(j, "property_report");
  PropertyReport r;
  r.order = j.at("order").get<int>();
  r.edges = j.at("edges").get<std::size_t>();
  r.membership = membership_from_json(j.at("membership"));
  r.connected = j.at("connected").get<bool>();
  r.two_connected = j.at("two_connected").get<bool>();
  r.cut_vertices = j.at("cut_vertices").get<std::size_t>();
  r.bridges = j.at("bridges").get<std::size_t>();
  r.separability_case = opt_from<int>(j.at("separability_case"));
  r.diameter = opt_from<int>(j.at("diameter"));
  r.bipartite = j.at("bipartite").get<bool>();
  if (!j.at("bipartite_parts").is_null())
    r.bipartite_parts = {j.at("bipartite_parts")[0].get<int>(),
                         j.at("bipartite_parts")[1].get<int>()};
  r.bipartite_case = opt_from<int>(j.at("bipartite_case"));
  r.hamiltonian = verdict_from(j.at("hamiltonian").get<std::string>());
  r.traceable = verdict_from(j.at("traceable").get<std::string>());
  r.pancyclic = verdict_from(j.at("pancyclic").get<std::string>());
  if (!j.at("cycle_witness").is_null())
    r.cycle_witness = CycleWitness{j.at("cycle_witness").get<std::vector<int>>()};
  if (!j.at("path_witness").is_null())
    r.path_witness = CycleWitness{j.at("path_witness").get<std::vector<int>>()};
  r.first_missing_cycle_length =
      opt_from<int>(j.at("first_missing_cycle_length"));
  const json& p = j.at("predicates");
  r.predicates.dirac = p.at("dirac").get<bool>();
  r.predicates.ore = p.at("ore").get<bool>();
  r.predicates.holton_sheehan = p.at("holton_sheehan").get<bool>();
  r.predicates.rahman_kaykobad = p.at("rahman_kaykobad").get<bool>();
  r.predicates.bondy_premise = opt_from<bool>(p.at("bondy_premise"));
  r.predicates.moon_moser = opt_from<bool>(p.at("moon_moser"));
  r.predicates.caro_wei_bound =
      Rational(p.at("caro_wei_num").get<long long>(),
               p.at("caro_wei_den").get<long long>());
  r.independence_number = opt_from<std::size_t>(j.at("independence_number"));
  r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

json to_json(const HuntReport& r) {
  json cells = json::array();
  for (const HuntCell& c : r.cells)
    cells.push_back(json{{"signature", signature_json(c.signature)},
                         {"mode", mode_name(c.mode)},
                         {"seed", c.seed},
                         {"graphs_tested", c.graphs_tested},
                         {"complete", c.complete}});
  json ces = json::array();
  for (const HuntFinding& f : r.counterexamples)
    ces.push_back(json{{"signature", signature_json(f.signature)},
                       {"canonical", f.canonical_code},
                       {"graph6", f.graph6},
                       {"violated_property", f.violated_property}});
  return json{{"schema_version", kSchemaVersion},
              {"kind", "hunt_report"},
              {"campaign", r.campaign},
              {"mode", mode_name(r.mode)},
              {"seed", r.seed},
              {"cells", std::move(cells)},
              {"graphs_tested", r.graphs_tested},
              {"all_complete", r.all_complete},
              {"counterexamples", std::move(ces)}};
}

HuntReport hunt_report_from_json(const json& j) {
  check_schema(j, "hunt_report");
  HuntReport r;
  r.campaign = j.at("campaign").get<std::string>();
  r.mode = mode_from(j.at("mode").get<std::string>());
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const json& c : j.at("cells")) {
    HuntCell cell;
    cell.signature = signature_from(c.at("signature"));
    cell.mode = mode_from(c.at("mode").get<std::string>());
    cell.seed = c.at("seed").get<std::uint64_t>();
    cell.graphs_tested = c.at("graphs_tested").get<std::size_t>();
    cell.complete = c.at("complete").get<bool>();
    r.cells.push_back(std::move(cell));
  }
  r.graphs_tested = j.at("graphs_tested").get<std::size_t>();
  r.all_complete = j.at("all_complete").get<bool>();
  for (const json& c : j.at("counterexamples")) {
    HuntFinding f;
    f.signature = signature_from(c.at("signature"));
    f.canonical_code = c.at("canonical").get<std::string>();
    f.graph6 = c.at("graph6").get<std::string>();
    f.violated_property = c.at("violated_property").get<std::string>();
    r.counterexamples.push_back(std::move(f));
  }
  return r;
}

json to_json(const ClassEnumeration& e) {
  json classes = json::array();
  for (std::size_t i = 0; i < e.codes.size(); ++i)
    classes.push_back(json{{"canonical", e.codes[i]},
                           {"graph6", emit_graph6(e.representatives[i])}});
  return json{{"schema_version", kSchemaVersion},
              {"kind", "enumeration"},
              {"signature", signature_json(e.signature)},
              {"count", e.codes.size()},
              {"complete", e.complete},
              {"states_expanded", e.states_expanded},
              {"classes", std::move(classes)}};
}

}  // namespace degseq::io

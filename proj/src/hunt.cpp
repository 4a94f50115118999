#include "degseq/hunt.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "degseq/canonical.hpp"
#include "degseq/io.hpp"
#include "degseq/reduction.hpp"
#include "degseq/structure.hpp"

namespace degseq {

namespace {

bool is_complete_balanced_bipartite(const Graph& g) {
  auto bip = bipartition(g);
  if (!bip.parts) return false;
  const auto a = bip.parts->left.size(), b = bip.parts->right.size();
  return a == b && g.edge_count() == a * b;
}

}  // namespace

PropertyReport certify(const Graph& g) {
  PropertyReport r;
  r.order = g.order();
  r.edges = g.edge_count();
  r.membership = classify(g);

  const BlockDecomposition decomp = block_decomposition(g);
  r.connected = is_connected(g);
  r.two_connected = is_two_connected(g);
  r.cut_vertices = decomp.cut_vertices.size();
  r.bridges = decomp.bridges.size();
  r.diameter = diameter(g);

  const auto bip = bipartition(g);
  r.bipartite = bip.parts.has_value();
  if (bip.parts)
    r.bipartite_parts = {static_cast<int>(bip.parts->left.size()),
                         static_cast<int>(bip.parts->right.size())};

  if (g.order() <= kHamiltonianMaxOrder) {
    r.cycle_witness = hamiltonian_cycle(g);
    r.hamiltonian =
        r.cycle_witness ? SolverVerdict::yes : SolverVerdict::no;
    r.path_witness = hamiltonian_path(g);
    r.traceable = r.path_witness ? SolverVerdict::yes : SolverVerdict::no;
  }
  if (g.order() <= kPancyclicMaxOrder) {
    const PancyclicityResult pan = is_pancyclic(g);
    r.pancyclic = pan.pancyclic ? SolverVerdict::yes : SolverVerdict::no;
    r.first_missing_cycle_length = pan.first_missing_length;
  }
  r.predicates = literature_predicates(g);
  if (g.order() <= kIndependentSetMaxOrder)
    r.independence_number = max_independent_set_exact(g).vertices.size();

  auto flag = [&](const std::string& slug) { r.violations.push_back(slug); };

  const bool g_member = r.membership.kind == ClassKind::g_class &&
                        r.membership.signature->two_clique();
  const bool co_member = r.membership.kind == ClassKind::complement_class;

  if (g_member) {
    const int m = r.membership.signature->parts[0];
    const int n = r.membership.signature->parts[1];
    if (!r.connected) flag("connectivity.disconnected-member");
    r.separability_case = separability_case(decomp);
    if (*r.separability_case == 0) flag("separability.case-outside-table");
    if (r.cut_vertices >= 1) {
      if (r.traceable == SolverVerdict::no)
        flag("separability.cut-vertex-member-not-traceable");
      if (r.hamiltonian == SolverVerdict::yes)
        flag("consistency.cut-vertex-but-hamiltonian");
    }
    if (m == n) {
      if (!r.two_connected) flag("balanced.not-two-connected");
      if (r.hamiltonian == SolverVerdict::no) flag("balanced.not-hamiltonian");
    }
    if (r.bipartite) {
      r.bipartite_case = bipartite_case(g, *bip.parts);
      if (*r.bipartite_case == 0) {
        flag("bipartite.case-outside-table");
      } else if (*r.bipartite_case == 2) {
        if (r.traceable == SolverVerdict::no)
          flag("bipartite.case-2-not-traceable");
      } else if (r.hamiltonian == SolverVerdict::no) {
        flag("bipartite.case-" + std::to_string(*r.bipartite_case) +
             "-not-hamiltonian");
      }
    }
  }

  if (co_member) {
    const int m = r.membership.signature->parts[0];
    const int n = r.membership.signature->parts[1];
    if (m != n && !r.two_connected) flag("complement.not-two-connected");
    if (m == n && r.pancyclic == SolverVerdict::no)
      flag("complement.balanced-not-pancyclic");
    if (n - m == 1 && r.traceable == SolverVerdict::no)
      flag("complement.near-balanced-not-traceable");
    if (r.bipartite) flag("complement.bipartite");
  }

  if (g_member || co_member) {
    if (!r.diameter)
      flag("diameter.unbounded");
    else if (*r.diameter > 4)
      flag("diameter.exceeds-4");
  }

  const bool ham_known = r.hamiltonian != SolverVerdict::out_of_range;
  if (ham_known && r.hamiltonian == SolverVerdict::no) {
    if (r.predicates.dirac) flag("predicate.dirac-but-not-hamiltonian");
    if (r.predicates.ore) flag("predicate.ore-but-not-hamiltonian");
    if (r.predicates.holton_sheehan)
      flag("predicate.holton-sheehan-but-not-hamiltonian");
    if (r.predicates.moon_moser && *r.predicates.moon_moser)
      flag("predicate.moon-moser-but-not-hamiltonian");
  }
  if (r.traceable == SolverVerdict::no && r.predicates.rahman_kaykobad)
    flag("predicate.rahman-kaykobad-but-not-traceable");
  if (r.predicates.bondy_premise && *r.predicates.bondy_premise &&
      r.pancyclic == SolverVerdict::no && !is_complete_balanced_bipartite(g))
    flag("predicate.bondy-but-not-pancyclic");
  if (r.independence_number &&
      !(r.predicates.caro_wei_bound <=
        static_cast<long long>(*r.independence_number)))
    flag("predicate.caro-wei-exceeds-independence-number");

  if (r.cycle_witness && (!is_valid_cycle(g, r.cycle_witness->vertices) ||
                          r.cycle_witness->vertices.size() !=
                              static_cast<std::size_t>(g.order())))
    flag("internal.cycle-witness-invalid");
  if (r.path_witness && (!is_valid_path(g, r.path_witness->vertices) ||
                         r.path_witness->vertices.size() !=
                             static_cast<std::size_t>(g.order())))
    flag("internal.path-witness-invalid");

  return r;
}

std::vector<ClassSignature> auto_signatures(int max_order) {
  std::vector<ClassSignature> sigs;
  for (int m = 2; 2 * m <= max_order; ++m)
    for (int n = m; m + n <= max_order; ++n) {
      if (m == 2 && n == 2) continue;
      sigs.push_back(ClassSignature{m, n});
    }
  return sigs;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t seed, const ClassSignature& sig) {
  std::uint64_t h = seed;
  for (int p : sig.parts) h = splitmix64(h ^ static_cast<std::uint64_t>(p));
  return h;
}

struct CellResult {
  HuntCell cell;
  std::vector<HuntFinding> findings;
};

enum class Campaign { traceability, diameter4 };

CellResult run_cell(Campaign campaign, const ClassSignature& sig,
                    HuntMode mode, const HuntBudget& budget,
                    std::uint64_t seed) {
  CellResult result;
  result.cell.signature = sig;
  result.cell.mode = mode;
  result.cell.seed = cell_seed(seed, sig);

  std::vector<Graph> members;
  if (mode == HuntMode::exhaustive) {
    ClassEnumeration e = enumerate_class(sig, budget.enumeration);
    members = std::move(e.representatives);
    result.cell.complete = e.complete;
  } else {
    const int steps = 8 * sig.order();
    for (std::size_t i = 0; i < budget.random_samples; ++i)
      members.push_back(
          sample_member(sig, steps, splitmix64(result.cell.seed + i)));
    result.cell.complete = true;
  }

  std::vector<std::pair<std::string, std::string>> seen;  // (code, property)
  for (const Graph& member : members) {
    const Graph subject =
        campaign == Campaign::diameter4 ? complement(member) : member;
    const PropertyReport rep = certify(subject);

    std::vector<std::string> hits = rep.violations;
    if (campaign == Campaign::traceability &&
        rep.traceable == SolverVerdict::no)
      hits.push_back("traceability.no-hamiltonian-path");
    if (campaign == Campaign::diameter4 && rep.diameter &&
        *rep.diameter == 4)
      hits.push_back("diameter4.found");
    if (hits.empty()) continue;

    const std::string code = subject.order() <= kCanonicalMaxOrder
                                 ? canonical_form(subject)
                                 : "uncanonical:" + io::emit_graph6(subject);
    for (const std::string& property : hits) {
      if (std::find(seen.begin(), seen.end(),
                    std::make_pair(code, property)) != seen.end())
        continue;
      seen.emplace_back(code, property);
      result.findings.push_back(
          {sig, code, io::emit_graph6(subject), property});
    }
  }
  result.cell.graphs_tested = members.size();
  return result;
}

// Counterexamples must survive a fresh deserialization and re-check.
void revalidate(Campaign campaign, const HuntFinding& f) {
  const Graph g = io::parse_graph6(f.graph6);
  if (g.order() <= kCanonicalMaxOrder &&
      canonical_form(g) != f.canonical_code)
    throw std::logic_error("hunt finding failed canonical re-validation");
  if (campaign == Campaign::traceability &&
      !is_member_g(g, f.signature))
    throw std::logic_error("hunt finding is not a class member");
  if (campaign == Campaign::diameter4 &&
      !is_member_complement(g, f.signature.parts[0], f.signature.parts[1]))
    throw std::logic_error("hunt finding is not a complement-class member");
  bool holds = false;
  if (f.violated_property == "traceability.no-hamiltonian-path")
    holds = !hamiltonian_path(g).has_value();
  else if (f.violated_property == "diameter4.found")
    holds = diameter(g) == std::optional<int>(4);
  else {
    const PropertyReport rep = certify(g);
    holds = std::find(rep.violations.begin(), rep.violations.end(),
                      f.violated_property) != rep.violations.end();
  }
  if (!holds)
    throw std::logic_error("hunt finding failed property re-validation: " +
                           f.violated_property);
}

HuntReport run_campaign(Campaign campaign,
                        std::span<const ClassSignature> signatures,
                        HuntMode mode, const HuntBudget& budget,
                        std::uint64_t seed, int jobs) {
  HuntReport report;
  report.campaign =
      campaign == Campaign::traceability ? "traceability" : "diameter4";
  report.mode = mode;
  report.seed = seed;

  std::vector<CellResult> results(signatures.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= signatures.size()) return;
      try {
        results[i] = run_cell(campaign, signatures[i], mode, budget, seed);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  const int pool = std::max(
      1, std::min<int>(jobs, static_cast<int>(signatures.size())));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (CellResult& res : results) {
    report.cells.push_back(std::move(res.cell));
    report.graphs_tested += report.cells.back().graphs_tested;
    report.all_complete = report.all_complete && report.cells.back().complete;
    for (HuntFinding& f : res.findings)
      report.counterexamples.push_back(std::move(f));
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const HuntFinding& a, const HuntFinding& b) {
              return std::tie(a.canonical_code, a.violated_property) <
                     std::tie(b.canonical_code, b.violated_property);
            });
  for (const HuntFinding& f : report.counterexamples) revalidate(campaign, f);
  return report;
}

}  // namespace

HuntReport hunt_traceability(std::span<const ClassSignature> signatures,
                             HuntMode mode, const HuntBudget& budget,
                             std::uint64_t seed, int jobs) {
  return run_campaign(Campaign::traceability, signatures, mode, budget, seed,
                      jobs);
}

HuntReport hunt_diameter4(std::span<const ClassSignature> signatures,
                          HuntMode mode, const HuntBudget& budget,
                          std::uint64_t seed, int jobs) {
  return run_campaign(Campaign::diameter4, signatures, mode, budget, seed,
                      jobs);
}

}  // namespace degseq

// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Optional argv[1] is the CLI binary, exercised where a
// criterion is stated against the command-line surface.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "degseq/canonical.hpp"
#include "degseq/cycles.hpp"
#include "degseq/hunt.hpp"
#include "degseq/io.hpp"
#include "degseq/recognize.hpp"
#include "degseq/reduction.hpp"
#include "degseq/structure.hpp"
#include "degseq/transform.hpp"
#include "oracles.hpp"

using namespace degseq;
using nlohmann::json;

namespace {

struct Harness {
  int failures = 0;

  void criterion(int num, const std::string& what, bool ok,
                 const std::string& detail, double seconds) {
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << what;
    if (!detail.empty()) line << " — " << detail;
    line << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& command) {
  CliResult res;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// Enumerated members per signature, shared by several criteria.
std::map<std::vector<int>, std::vector<Graph>> build_corpus(int max_order) {
  std::map<std::vector<int>, std::vector<Graph>> corpus;
  for (const ClassSignature& sig : auto_signatures(max_order))
    corpus[sig.parts] = enumerate_class(sig).representatives;
  return corpus;
}

std::vector<Graph> fixture_corpus() {
  std::vector<Graph> out;
  for (const char* name : {"cube", "icosahedron", "dodecahedron", "petersen"})
    out.push_back(fixture(name));
  for (int k = 3; k <= 10; ++k) out.push_back(cycle_graph(k));
  for (int k = 1; k <= 10; ++k) out.push_back(path_graph(k));
  for (int k = 1; k <= 12; ++k) out.push_back(complete_graph(k));
  for (auto [a, b] : {std::pair{1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3},
                      {3, 4}, {4, 4}, {5, 5}})
    out.push_back(complete_bipartite_graph(a, b));
  for (auto sig : {ClassSignature{2, 2}, ClassSignature{2, 3},
                   ClassSignature{3, 4}, ClassSignature{4, 4},
                   ClassSignature{5, 5}})
    out.push_back(clique_union_graph(sig));
  for (int n = 4; n <= 6; ++n) out.push_back(pendant_family(n));
  out.push_back(twin_bridge_two_cliques(4, 5));
  out.push_back(twin_bridge_two_cliques(4, 6));
  for (int n = 4; n <= 5; ++n) {
    out.push_back(twin_bridge_one_clique(n, AttachPattern::adjacent));
    out.push_back(twin_bridge_one_clique(n, AttachPattern::nonadjacent));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  Harness h;

  // ---- criterion 1: enumeration exactness ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    const auto e23 = enumerate_class(ClassSignature{2, 3});
    ok &= e23.complete && e23.codes.size() == 1 &&
          is_isomorphic(e23.representatives[0], path_graph(5));

    const auto e22 = enumerate_class(ClassSignature{2, 2});
    ok &= e22.complete && e22.codes.empty();

    const auto e33 = enumerate_class(ClassSignature{3, 3});
    ok &= e33.complete && e33.codes.size() == 1 &&
          is_isomorphic(e33.representatives[0], cycle_graph(6));

    // independent oracle: adjacency-matrix backtracking enumerator
    std::size_t oracle33 = 0;
    for (const Graph& g : oracles::enumerate_realizations(
             ClassSignature{3, 3}.required_degrees()))
      if (!is_clique_union(g)) ++oracle33;
    ok &= oracle33 == 1;

    if (!cli.empty()) {
      const CliResult r = run_cli(cli + " enumerate --sig 2,3");
      ok &= r.exit_code == 0 && json::parse(r.out).at("count") == 1;
      if (r.exit_code != 0) detail = "CLI enumerate failed";
    }
    const double secs = seconds_since(t0);
    ok &= secs < 5.0;
    h.criterion(1, "enumeration exactness for {2,3}, {2,2}, {3,3}", ok, detail,
                secs);
  }

  const auto corpus = build_corpus(10);

  // ---- criterion 2: connectivity and cut/bridge profile suite ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t violations = 0, tested = 0;
    for (const auto& [parts, members] : corpus) {
      for (const Graph& g : members) {
        ++tested;
        if (!is_connected(g)) ++violations;
        const auto d = block_decomposition(g);
        if (separability_case(d) == 0) ++violations;
        if (!d.cut_vertices.empty()) {
          if (!hamiltonian_path(g)) ++violations;
          if (hamiltonian_cycle(g)) ++violations;
        }
      }
    }
    const double secs = seconds_since(t0);
    h.criterion(2,
                "members with order <= 10: connected, cut/bridge pair in "
                "table, cut-vertex members traceable and non-Hamiltonian",
                violations == 0 && secs < 600.0,
                std::to_string(tested) + " graphs", secs);
  }

  // ---- criterion 3: balanced classes 2-connected and Hamiltonian ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t violations = 0, tested = 0;
    for (auto sig : {ClassSignature{3, 3}, ClassSignature{4, 4},
                     ClassSignature{5, 5}}) {
      for (const Graph& g : corpus.at(sig.parts)) {
        ++tested;
        if (!is_two_connected(g)) ++violations;
        if (!hamiltonian_cycle(g)) ++violations;
      }
    }
    h.criterion(3, "balanced-class members 2-connected and Hamiltonian",
                violations == 0, std::to_string(tested) + " graphs",
                seconds_since(t0));
  }

  // ---- criterion 4: complement suite ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t violations = 0, tested = 0;
    for (const auto& [parts, members] : corpus) {
      const int m = parts[0], n = parts[1];
      for (const Graph& member : members) {
        const Graph g = complement(member);
        ++tested;
        if (!is_member_complement(g, m, n)) ++violations;
        if (m != n && !is_two_connected(g)) ++violations;
        if (m == n && !is_pancyclic(g).pancyclic) ++violations;
        if (n - m == 1 && !hamiltonian_path(g)) ++violations;
        if (bipartition(g).parts) ++violations;
        const auto diam = diameter(g);
        if (!diam || *diam > 4) ++violations;
      }
    }
    h.criterion(4,
                "complement-class members: 2-connected (m!=n), pancyclic "
                "(m=n), traceable (|m-n|=1), non-bipartite, diameter <= 4",
                violations == 0, std::to_string(tested) + " graphs",
                seconds_since(t0));
  }

  // ---- criterion 5: bipartite classification ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t violations = 0, bipartite_count = 0;
    for (const auto& [parts, members] : corpus) {
      for (const Graph& g : members) {
        const auto r = bipartition(g);
        if (!r.parts) continue;
        ++bipartite_count;
        const int label = bipartite_case(g, *r.parts);
        if (label == 0) {
          ++violations;
          continue;
        }
        if (label == 2) {
          if (!hamiltonian_path(g)) ++violations;
        } else if (!hamiltonian_cycle(g)) {
          ++violations;
        }
      }
    }
    h.criterion(5,
                "bipartite members match exactly one case; cases 1/3 "
                "Hamiltonian, case 2 traceable",
                violations == 0 && bipartite_count > 0,
                std::to_string(bipartite_count) + " bipartite members",
                seconds_since(t0));
  }

  // ---- criterion 6: twin-bridge fidelity ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph a = twin_bridge_one_clique(4, AttachPattern::adjacent);
    const Graph b = twin_bridge_one_clique(4, AttachPattern::nonadjacent);
    const bool distinct = canonical_form(a) != canonical_form(b);
    const bool a_ham = hamiltonian_cycle(a).has_value();
    const bool b_ham = hamiltonian_cycle(b).has_value();
    const Graph& non_ham = a_ham ? b : a;
    const bool ok = distinct && (a_ham != b_ham) &&
                    hamiltonian_path(non_ham).has_value() &&
                    is_member_g(a, ClassSignature{3, 4}) &&
                    is_member_g(b, ClassSignature{3, 4});
    h.criterion(6,
                "twin-bridge construction at n=4: exactly two classes, one "
                "Hamiltonian, one traceable-not-Hamiltonian",
                ok, "", seconds_since(t0));
  }

  // ---- criterion 7: reduction suite ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260809);
    std::size_t violations = 0;
    const int instances = 60;
    for (int i = 0; i < instances; ++i) {
      const int n = 3 + static_cast<int>(rng() % 8);  // order 3..10
      const Graph g = oracles::random_connected_noncomplete_graph(n, rng);
      const auto inst = build_reduction(g);
      if (!is_member_g(inst.product, ClassSignature{n, n})) ++violations;
      for (int v = 0; v < inst.product.order(); ++v)
        if (inst.product.degree(v) != n - 1) ++violations;
      const auto rep = verify_two_approx(g);
      if (!rep.within_factor_two) ++violations;
      if (rep.exact_size > rep.product_size) ++violations;
    }
    const double secs = seconds_since(t0);
    h.criterion(7,
                "reduction products are class members of degree n-1 and the "
                "extracted set is a 2-approximation",
                violations == 0 && secs < 300.0,
                std::to_string(instances) + " random sources", secs);
  }

  // ---- criterion 8: predicate soundness ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> battery = fixture_corpus();
    for (const auto& [parts, members] : corpus)
      for (const Graph& g : members) {
        battery.push_back(g);
        battery.push_back(complement(g));
      }
    std::size_t violations = 0;
    for (const Graph& g : battery) {
      const PredicateReport p = literature_predicates(g);
      const bool ham_claim = p.dirac || p.ore || p.holton_sheehan ||
                             (p.moon_moser && *p.moon_moser);
      if (g.order() <= kHamiltonianMaxOrder) {
        if (ham_claim && !hamiltonian_cycle(g)) ++violations;
        if (p.rahman_kaykobad && !hamiltonian_path(g)) ++violations;
      }
      if (p.bondy_premise && *p.bondy_premise &&
          g.order() <= kPancyclicMaxOrder) {
        const auto bip = bipartition(g);
        const bool exception = bip.parts &&
                               bip.parts->left.size() ==
                                   bip.parts->right.size() &&
                               g.edge_count() == bip.parts->left.size() *
                                                     bip.parts->right.size();
        if (!is_pancyclic(g).pancyclic && !exception) ++violations;
      }
      if (g.order() <= kIndependentSetMaxOrder) {
        const auto alpha = max_independent_set_exact(g).vertices.size();
        if (!(p.caro_wei_bound <= static_cast<long long>(alpha))) ++violations;
      }
    }
    h.criterion(8,
                "classical sufficient conditions imply their conclusions "
                "across the corpus and fixtures",
                violations == 0, std::to_string(battery.size()) + " graphs",
                seconds_since(t0));
  }

  // ---- criterion 9: 2-switch invariance ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(77);
    std::size_t violations = 0;
    Graph walk = clique_union_graph(ClassSignature{4, 5});
    const DegreeMultiset target = degree_sequence(walk);
    for (int step = 0; step < 100'000; ++step) {
      const auto switches = enumerate_two_switches(walk);
      walk = apply_two_switch(walk, switches[rng() % switches.size()]);
      if (!(degree_sequence(walk) == target)) {
        ++violations;
        break;
      }
    }
    for (const ClassSignature& sig : auto_signatures(10))
      for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull})
        if (!is_member_g(sample_member(sig, 8 * sig.order(), seed), sig))
          ++violations;
    const double secs = seconds_since(t0);
    h.criterion(9,
                "100000 random 2-switches preserve the degree multiset; "
                "every sampled graph is a class member",
                violations == 0 && secs < 30.0, "", secs);
  }

  // ---- criterion 10: hunt evidence ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sigs = auto_signatures(10);
    const HuntReport tr1 =
        hunt_traceability(sigs, HuntMode::exhaustive, HuntBudget{}, 11, 2);
    const HuntReport tr2 =
        hunt_traceability(sigs, HuntMode::exhaustive, HuntBudget{}, 11, 1);
    const HuntReport d1 =
        hunt_diameter4(sigs, HuntMode::exhaustive, HuntBudget{}, 11, 2);
    const HuntReport d2 =
        hunt_diameter4(sigs, HuntMode::exhaustive, HuntBudget{}, 11, 1);
    bool ok = tr1.counterexamples.empty() && tr1.all_complete &&
              d1.counterexamples.empty() && d1.all_complete && tr1 == tr2 &&
              d1 == d2;
    std::string detail = std::to_string(tr1.graphs_tested) + " members, " +
                         std::to_string(d1.graphs_tested) + " complements";
    if (!cli.empty()) {
      const CliResult r = run_cli(
          cli + " hunt diam4 --sigs auto --max-order 9 --mode exhaustive "
                "--seed 11 > /dev/null 2>&1; echo -n $?");
      ok &= r.out == "0";
    }
    const double secs = seconds_since(t0);
    ok &= secs < 1800.0;
    h.criterion(10,
                "exhaustive hunts report zero traceability counterexamples "
                "and zero diameter-4 members, deterministically",
                ok, detail, secs);
  }

  // ---- criterion 11: infrastructure ----
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<Graph> everything = fixture_corpus();
    for (const auto& [parts, members] : corpus)
      for (const Graph& g : members) {
        everything.push_back(g);
        everything.push_back(complement(g));
      }
    for (const Graph& g : everything) {
      if (io::parse_graph6(io::emit_graph6(g)) != g) ok = false;
      if (io::parse_edge_list(io::emit_edge_list(g)) != g) ok = false;
    }
    // canonical form vs permutation brute force on everything of order <= 8
    std::vector<const Graph*> small;
    for (const Graph& g : everything)
      if (g.order() <= 8) small.push_back(&g);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = i + 1; j < small.size(); ++j) {
        const Graph &a = *small[i], &b = *small[j];
        if (a.order() != b.order()) continue;
        const bool same_degrees = degree_sequence(a) == degree_sequence(b);
        const bool codes_equal = canonical_form(a) == canonical_form(b);
        if (!same_degrees) {
          if (codes_equal) ok = false;
          continue;
        }
        ++pairs;
        if (codes_equal != oracles::brute_isomorphic(a, b)) ok = false;
      }
    h.criterion(11,
                "serialization round-trips over the whole corpus; canonical "
                "form agrees with the permutation oracle at order <= 8",
                ok,
                std::to_string(everything.size()) + " graphs, " +
                    std::to_string(pairs) + " oracle pairs",
                seconds_since(t0));
  }

  std::cout << (h.failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " +
                                      std::to_string(h.failures) +
                                      " criterion(s) failed")
            << std::endl;
  return h.failures;
}

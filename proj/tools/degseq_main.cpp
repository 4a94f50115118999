#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/canonical.hpp"
#include "degseq/hunt.hpp"
#include "degseq/io.hpp"
#include "degseq/recognize.hpp"
#include "degseq/reduction.hpp"
#include "degseq/transform.hpp"

namespace {

using degseq::ClassSignature;
using degseq::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitFinding = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw degseq::io::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

degseq::io::GraphFormat pick_format(const std::string& format,
                                    const std::string& path) {
  if (format == "g6" || format == "graph6") return degseq::io::GraphFormat::graph6;
  if (format == "edgelist") return degseq::io::GraphFormat::edge_list;
  // auto: decide by extension
  if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6")
    return degseq::io::GraphFormat::graph6;
  if (path.size() >= 7 && path.substr(path.size() - 7) == ".graph6")
    return degseq::io::GraphFormat::graph6;
  return degseq::io::GraphFormat::edge_list;
}

Graph load_graph(const std::string& path, const std::string& format) {
  return degseq::io::parse_graph(read_file(path), pick_format(format, path));
}

ClassSignature parse_sig(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    parts.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (parts.empty()) throw CLI::ValidationError("--sig", "empty signature");
  return ClassSignature(parts);
}

int default_jobs() {
  if (const char* env = std::getenv("DEGSEQ_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "degseq: recognize, generate, analyze, and exhaustively verify graphs "
      "degree-equivalent to disjoint clique unions, and their complements"};
  app.require_subcommand(1);

  std::string input_path, format = "auto", out_format = "g6";
  std::string sig_text, mode_text = "exhaustive";
  std::vector<std::string> sig_list;
  int steps = 64, max_order = 0, jobs = default_jobs();
  std::uint64_t seed = 1;
  std::size_t max_classes = 1'000'000, max_frontier = 1'000'000, samples = 100;
  double max_seconds = 600.0;
  bool degree_labels = false;

  auto* cmd_recognize = app.add_subcommand(
      "recognize", "Report class membership of a graph as JSON");
  cmd_recognize->add_option("file", input_path)->required();
  cmd_recognize->add_option("--format", format, "auto|g6|edgelist");

  auto* cmd_certify = app.add_subcommand(
      "certify", "Run the full property battery on a graph, emit JSON");
  cmd_certify->add_option("file", input_path)->required();
  cmd_certify->add_option("--format", format, "auto|g6|edgelist");

  auto* cmd_sample = app.add_subcommand(
      "sample", "Random class member via a seeded 2-switch walk");
  cmd_sample->add_option("--sig", sig_text, "two clique sizes, e.g. 3,4")
      ->required();
  cmd_sample->add_option("--steps", steps, "number of 2-switch steps");
  cmd_sample->add_option("--seed", seed);
  cmd_sample->add_option("--to", out_format, "g6|edgelist|dot");

  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "All isomorphism classes of a class, emitted as JSON");
  cmd_enumerate->add_option("--sig", sig_text)->required();
  cmd_enumerate->add_option("--max-classes", max_classes);
  cmd_enumerate->add_option("--max-frontier", max_frontier);
  cmd_enumerate->add_option("--max-seconds", max_seconds);

  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Build the two-copy product of a connected non-complete "
                "graph and verify the 2-approximation");
  cmd_reduce->add_option("file", input_path)->required();
  cmd_reduce->add_option("--format", format, "auto|g6|edgelist");

  auto* cmd_hunt = app.add_subcommand(
      "hunt", "Search campaigns over class members (exit 3 on findings)");
  std::string campaign;
  cmd_hunt->add_option("campaign", campaign, "traceability|diam4")->required();
  cmd_hunt->add_option("--sigs", sig_list,
                       "signatures m,n (repeatable) or 'auto'");
  cmd_hunt->add_option("--max-order", max_order,
                       "order bound for --sigs auto");
  cmd_hunt->add_option("--mode", mode_text, "exhaustive|random");
  cmd_hunt->add_option("--seed", seed);
  cmd_hunt->add_option("--samples", samples, "samples per cell, random mode");
  cmd_hunt->add_option("--jobs", jobs, "worker pool size (env DEGSEQ_JOBS)");
  cmd_hunt->add_option("--max-classes", max_classes);
  cmd_hunt->add_option("--max-frontier", max_frontier);
  cmd_hunt->add_option("--max-seconds", max_seconds);

  auto* cmd_convert = app.add_subcommand("convert", "Convert graph formats");
  cmd_convert->add_option("file", input_path)->required();
  cmd_convert->add_option("--from", format, "auto|g6|edgelist");
  cmd_convert->add_option("--to", out_format, "g6|edgelist|dot")->required();
  cmd_convert->add_flag("--degree-labels", degree_labels,
                        "annotate DOT vertices with degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_recognize->parsed()) {
      print_json(degseq::io::to_json(degseq::classify(load_graph(input_path, format))));
      return kExitOk;
    }

    if (cmd_certify->parsed()) {
      print_json(degseq::io::to_json(degseq::certify(load_graph(input_path, format))));
      return kExitOk;
    }

    if (cmd_sample->parsed()) {
      const Graph g = degseq::sample_member(parse_sig(sig_text), steps, seed);
      if (out_format == "edgelist")
        std::cout << degseq::io::emit_edge_list(g);
      else if (out_format == "dot")
        std::cout << degseq::io::emit_dot(g, degree_labels);
      else
        std::cout << degseq::io::emit_graph6(g) << "\n";
      return kExitOk;
    }

    if (cmd_enumerate->parsed()) {
      degseq::EnumerationBudget budget;
      budget.max_classes = max_classes;
      budget.max_frontier = max_frontier;
      budget.max_wall = std::chrono::milliseconds(
          static_cast<long long>(max_seconds * 1000));
      print_json(degseq::io::to_json(
          degseq::enumerate_class(parse_sig(sig_text), budget)));
      return kExitOk;
    }

    if (cmd_reduce->parsed()) {
      const Graph g = load_graph(input_path, format);
      const degseq::ReductionInstance inst = degseq::build_reduction(g);
      json j{{"schema_version", degseq::io::kSchemaVersion},
             {"kind", "reduction"},
             {"source_graph6", degseq::io::emit_graph6(inst.source)},
             {"product_graph6", degseq::io::emit_graph6(inst.product)},
             {"product_order", inst.product.order()}};
      if (inst.product.order() <= degseq::kIndependentSetMaxOrder) {
        const degseq::TwoApproxReport rep = degseq::verify_two_approx(g);
        j["two_approx"] = json{{"exact_size", rep.exact_size},
                               {"product_size", rep.product_size},
                               {"extracted_size", rep.extracted_size},
                               {"ratio", rep.ratio},
                               {"within_factor_two", rep.within_factor_two}};
      } else {
        j["two_approx"] = nullptr;  // beyond the exact-oracle bound
      }
      print_json(j);
      return kExitOk;
    }

    if (cmd_hunt->parsed()) {
      std::vector<ClassSignature> sigs;
      for (const std::string& s : sig_list) {
        if (s == "auto") {
          if (max_order < 4)
            throw CLI::ValidationError("--max-order",
                                       "required (>= 4) with --sigs auto");
          auto expanded = degseq::auto_signatures(max_order);
          sigs.insert(sigs.end(), expanded.begin(), expanded.end());
        } else {
          sigs.push_back(parse_sig(s));
        }
      }
      if (sigs.empty())
        throw CLI::ValidationError("--sigs", "at least one signature needed");
      degseq::HuntBudget budget;
      budget.enumeration.max_classes = max_classes;
      budget.enumeration.max_frontier = max_frontier;
      budget.enumeration.max_wall = std::chrono::milliseconds(
          static_cast<long long>(max_seconds * 1000));
      budget.random_samples = samples;
      const degseq::HuntMode mode = mode_text == "random"
                                        ? degseq::HuntMode::random
                                        : degseq::HuntMode::exhaustive;
      degseq::HuntReport report;
      if (campaign == "traceability")
        report = degseq::hunt_traceability(sigs, mode, budget, seed, jobs);
      else if (campaign == "diam4")
        report = degseq::hunt_diameter4(sigs, mode, budget, seed, jobs);
      else
        throw CLI::ValidationError("campaign", "must be traceability|diam4");
      print_json(degseq::io::to_json(report));
      return report.counterexamples.empty() ? kExitOk : kExitFinding;
    }

    if (cmd_convert->parsed()) {
      const Graph g = load_graph(input_path, format);
      if (out_format == "edgelist")
        std::cout << degseq::io::emit_edge_list(g);
      else if (out_format == "dot")
        std::cout << degseq::io::emit_dot(g, degree_labels);
      else if (out_format == "g6" || out_format == "graph6")
        std::cout << degseq::io::emit_graph6(g) << "\n";
      else
        throw CLI::ValidationError("--to", "must be g6|edgelist|dot");
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const degseq::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitUsage;
}

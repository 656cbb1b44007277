#include "pcube/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcube/canonical.hpp"
#include "pcube/catalog.hpp"
#include "pcube/enumeration.hpp"
#include "pcube/io.hpp"
#include "pcube/labeling.hpp"
#include "pcube/theta.hpp"

namespace pcube::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Solver { kBacktrack, kBrute };
enum class Format { kText, kJson };

struct RunConfig {
  std::string command;
  std::string input = "-";
  std::string certificate;
  std::string mode;
  std::string name;
  int dimension = 0;
  int threads = 1;
  Solver solver = Solver::kBacktrack;
  bool solver_given = false;
  Format format = Format::kText;
  bool reduce_symmetry = false;
  std::string output;
};

// Usage errors detected after CLI parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

Graph load_graph(const RunConfig& cfg, std::istream& in) {
  if (cfg.input == "-") return read_edge_list(in);
  std::ifstream file(cfg.input);
  if (!file) throw UsageError("cannot open " + cfg.input);
  return read_edge_list(file);
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void print_classes(std::ostream& out, const Graph& g, const ThetaPartition& p) {
  for (int c = 0; c < p.count(); ++c) {
    out << "class " << c << ":";
    for (int e : p.classes[static_cast<std::size_t>(c)]) out << ' ' << edge_text(g.edge(e));
    out << '\n';
  }
}

json classes_json(const Graph& g, const ThetaPartition& p) {
  json classes = json::array();
  for (const auto& cls : p.classes) {
    json edges = json::array();
    for (int e : cls) edges.push_back(edge_json(g.edge(e)));
    classes.push_back(std::move(edges));
  }
  return classes;
}

ThetaPartition partition_or_empty(const Graph& g) {
  return g.order() <= 1 ? ThetaPartition{} : theta_classes(g);
}

int cmd_recognize(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  const auto verdict = is_partial_cube(g);
  if (!verdict) {
    if (cfg.format == Format::kJson) {
      out << json{{"partial_cube", false}, {"reason", verdict.describe(g)}}.dump(2) << '\n';
    } else {
      out << "not a partial cube: " << verdict.describe(g) << '\n';
    }
    return kFalse;
  }
  const auto p = partition_or_empty(g);
  const bool median = is_median_graph(g);
  if (cfg.format == Format::kJson) {
    out << json{{"partial_cube", true},
                {"dimension", p.count()},
                {"median", median},
                {"classes", classes_json(g, p)}}
               .dump(2)
        << '\n';
  } else {
    out << "partial cube, dimension " << p.count() << '\n';
    out << (median ? "median graph" : "not a median graph") << '\n';
    print_classes(out, g, p);
  }
  return kTrue;
}

int cmd_classes(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  const auto p = theta_classes(g);
  const bool partial = static_cast<bool>(is_partial_cube(g));
  if (cfg.format == Format::kJson) {
    out << json{{"count", p.count()},
                {"closure_added", p.closure_added},
                {"partial_cube", partial},
                {"classes", classes_json(g, p)}}
               .dump(2)
        << '\n';
  } else {
    out << p.count() << " classes" << (p.closure_added ? " (transitive closure added pairs)" : "") << '\n';
    print_classes(out, g, p);
  }
  return partial ? kTrue : kFalse;
}

int cmd_embed(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  const auto verdict = is_partial_cube(g);
  if (!verdict) {
    out << "not a partial cube: " << verdict.describe(g) << '\n';
    return kFalse;
  }
  const auto emb = hypercube_embedding(g);
  if (cfg.format == Format::kJson) {
    json coords = json::array();
    for (int v = 0; v < g.order(); ++v) coords.push_back(emb.tuple(v));
    out << json{{"dimension", emb.dim}, {"coords", coords}}.dump(2) << '\n';
  } else {
    out << "dimension " << emb.dim << '\n';
    for (int v = 0; v < g.order(); ++v) out << v << ' ' << emb.tuple(v) << '\n';
  }
  return kTrue;
}

int cmd_median(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  const bool median = is_median_graph(g);
  if (cfg.format == Format::kJson) {
    out << json{{"median", median}}.dump(2) << '\n';
  } else {
    out << (median ? "median graph" : "not a median graph") << '\n';
  }
  return median ? kTrue : kFalse;
}

int cmd_label(const RunConfig& cfg, const Graph& g, std::istream& in, std::ostream& out) {
  const auto verdict = is_partial_cube(g);
  if (!verdict) throw PreconditionError("label requires a partial cube: " + verdict.describe(g));

  if (cfg.mode == "verify") {
    if (cfg.certificate.empty()) throw UsageError("label verify needs a certificate file");
    Labeling f;
    if (cfg.certificate == "-") {
      if (cfg.input == "-") throw UsageError("graph and certificate cannot both be read from standard input");
      f = read_certificate(in, g.order());
    } else {
      std::ifstream file(cfg.certificate);
      if (!file) throw UsageError("cannot open " + cfg.certificate);
      f = read_certificate(file, g.order());
    }
    const auto result = verify_theta_graceful(g, f);
    const auto cycles = verify_consistency(g, f, ConsistencyScope::kFourCycles);
    if (cfg.format == Format::kJson) {
      out << json{{"valid", result.ok}, {"reason", result.reason}, {"four_cycle_consistent", cycles.ok}}.dump(2)
          << '\n';
    } else {
      out << (result.ok ? "valid Theta-graceful labeling" : "invalid: " + result.reason) << '\n';
      out << "4-cycle antipodal sums: " << (cycles.ok ? "consistent" : cycles.reason) << '\n';
    }
    return result.ok ? kTrue : kFalse;
  }

  if (cfg.mode == "count") {
    if (cfg.solver_given && cfg.solver != Solver::kBrute) {
      throw UsageError("label count requires --solver brute");
    }
    const auto outcome = brute_force_search(g, true, cfg.threads);
    const auto count = *outcome.solutions_count;
    if (cfg.format == Format::kJson) {
      out << json{{"solutions", count}, {"permutations", outcome.nodes_explored}}.dump(2) << '\n';
    } else {
      out << count << " solutions over " << outcome.nodes_explored << " permutations\n";
    }
    return count > 0 ? kTrue : kFalse;
  }

  if (cfg.mode != "find") throw UsageError("label mode must be find, verify or count");
  const auto outcome =
      cfg.solver == Solver::kBrute ? brute_force_search(g, false, cfg.threads) : backtracking_search(g);
  if (cfg.format == Format::kJson) {
    json doc{{"found", outcome.found.has_value()}, {"nodes_explored", outcome.nodes_explored}};
    if (outcome.found) {
      doc["certificate"] = std::vector<int>(outcome.found->values().begin(), outcome.found->values().end());
    }
    out << doc.dump(2) << '\n';
  } else if (outcome.found) {
    write_certificate(out, *outcome.found);
  } else {
    out << "NONE (search exhausted)\n";
  }
  return outcome.found ? kTrue : kFalse;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto classes = enumerate_partial_cube_classes(cfg.dimension, cfg.threads, cfg.reduce_symmetry);
  if (cfg.format == Format::kJson) {
    json doc = json::array();
    for (const auto& c : classes) {
      json edges = json::array();
      for (const auto& e : c.graph.edges()) edges.push_back(edge_json(e));
      doc.push_back({{"code_hex", c.code.hex()}, {"n", c.graph.order()}, {"m", c.graph.size()}, {"edges", edges}});
    }
    out << doc.dump(2) << '\n';
    return kTrue;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out << '\n';
    out << "# class " << i + 1 << " of " << classes.size() << ", code " << classes[i].code.hex() << '\n';
    write_edge_list(out, classes[i].graph);
  }
  return kTrue;
}

// Catalog graphs small enough to canonicalize, keyed by code.
std::map<CanonicalCode, std::string> catalog_codes() {
  std::map<CanonicalCode, std::string> codes;
  for (const auto& name : catalog_names()) {
    const auto g = named_graph(name);
    if (g && g->order() <= kCanonicalMaxVertices) codes.emplace(canonical_form(*g), name);
  }
  return codes;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto report = classify_gracefulness(cfg.dimension, cfg.threads, cfg.reduce_symmetry);
  if (cfg.format == Format::kJson) {
    out << report_json(report) << '\n';
    return kTrue;
  }
  const auto names = catalog_codes();
  out << "dimension " << report.dimension << ": " << report.total_classes << " classes, "
      << report.non_graceful() << " non-graceful\n";
  out << "  n   m  graceful  median  code\n";
  for (const auto& e : report.entries) {
    char row[64];
    std::snprintf(row, sizeof row, "%3d %3d  %-8s  %-6s  ", e.n, e.m, e.graceful ? "yes" : "NO",
                  e.median ? "yes" : "no");
    out << row << e.code.hex();
    if (const auto it = names.find(e.code); it != names.end()) out << "  (" << it->second << ")";
    out << '\n';
  }
  for (const auto& e : report.entries) {
    if (e.graceful) continue;
    const auto it = names.find(e.code);
    out << "non-graceful: " << (it != names.end() ? it->second : "unnamed") << " n=" << e.n << " m=" << e.m
        << " code " << e.code.hex() << '\n';
  }
  return kTrue;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto g = named_graph(cfg.name);
  if (!g) {
    err << "unknown graph name '" << cfg.name << "'; valid names: g8, q3minus, cq3minus, q<d> (0..6), "
        << "c<k> (even k >= 4), sk<r> (r >= 2), fib<d> (1..8), p<n>\n";
    return kError;
  }
  write_edge_list(out, *g);
  return kTrue;
}

int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.command == "gen") return cmd_gen(cfg, out, err);
  if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out);
  const Graph g = load_graph(cfg, in);
  if (cfg.solver == Solver::kBrute && g.order() > kBruteForceMaxVertices) {
    throw ScaleError("--solver brute accepts at most " + std::to_string(kBruteForceMaxVertices) +
                     " vertices (graph has " + std::to_string(g.order()) + ")");
  }
  if (cfg.command == "recognize") return cmd_recognize(cfg, g, out);
  if (cfg.command == "classes") return cmd_classes(cfg, g, out);
  if (cfg.command == "embed") return cmd_embed(cfg, g, out);
  if (cfg.command == "median") return cmd_median(cfg, g, out);
  if (cfg.command == "label") return cmd_label(cfg, g, in, out);
  throw UsageError("unknown command " + cfg.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  CLI::App app{"Partial cube recognition, Theta-graceful labeling and enumeration"};
  app.require_subcommand(1);
  app.fallthrough();
  const std::map<std::string, Solver> solvers{{"backtrack", Solver::kBacktrack}, {"brute", Solver::kBrute}};
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};
  auto* solver_opt = app.add_option("--solver", cfg.solver, "labeling solver: backtrack (default) or brute")
                         ->transform(CLI::CheckedTransformer(solvers, CLI::ignore_case))
                         ->option_text("backtrack|brute");
  app.add_option("--format", cfg.format, "output format: text (default) or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("text|json");
  app.add_option("--threads", cfg.threads, "worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--symmetry-reduction", cfg.reduce_symmetry,
               "enumerate/classify: canonicalize one subset per hypercube-automorphism orbit");
  app.add_option("--output", cfg.output, "write results to PATH instead of standard output");

  auto graph_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", cfg.input, "edge-list file, or - for standard input");
    return sub;
  };
  graph_command("recognize", "test whether the graph is a partial cube");
  graph_command("classes", "print the Theta-classes");
  graph_command("embed", "print hypercube coordinates");
  graph_command("median", "test whether the graph is a median graph");
  auto* label = app.add_subcommand("label", "find, verify or count Theta-graceful labelings");
  label->add_option("mode", cfg.mode, "find, verify or count")
      ->required()
      ->check(CLI::IsMember({"find", "verify", "count"}));
  label->add_option("graph", cfg.input, "edge-list file, or - for standard input");
  label->add_option("certificate", cfg.certificate, "certificate file for verify, or -");
  auto* enumerate = app.add_subcommand("enumerate", "list partial cubes of one isometric dimension");
  enumerate->add_option("dimension", cfg.dimension, "isometric dimension (0..4)")->required();
  auto* classify = app.add_subcommand("classify", "classify Theta-gracefulness of one dimension");
  classify->add_option("dimension", cfg.dimension, "isometric dimension (0..4)")->required();
  auto* gen = app.add_subcommand("gen", "emit a named graph as an edge list");
  gen->add_option("name", cfg.name, "g8, q3, c6, sk4, fib3, q3minus, cq3minus, ...")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kTrue : kError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.solver_given = solver_opt->count() > 0;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kError;
    }
    sink = &file;
  }
  try {
    return dispatch(cfg, in, *sink, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace pcube::cli

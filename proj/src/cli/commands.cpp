#include "polyk/cli/commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyk/analysis/planarity.hpp"
#include "polyk/analysis/verify.hpp"
#include "polyk/constructions/builder.hpp"
#include "polyk/constructions/formula.hpp"
#include "polyk/constructions/radial.hpp"
#include "polyk/core/graph6.hpp"
#include "polyk/core/json_io.hpp"
#include "polyk/enumeration/oracles.hpp"
#include "polyk/enumeration/polyhedra.hpp"

namespace polyk::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ExitCode construct(const CommandOptions& s, std::ostream& out) {
  const auto inst = build_extremal(*s.k, *s.a, s.all_red_deg3);
  const std::string path = s.output.empty() ? "extremal_k" + std::to_string(*s.k) + "_a" +
                                                  std::to_string(*s.a) + ".json"
                                            : s.output;
  emit(path, dump(colored_to_json(inst.result)), out);
  const long long expected = p_formula(*s.k, *s.a);
  const int order = inst.result.graph().order();
  out << "order " << order << (order == expected ? " = " : " != ") << "p(" << *s.k << "," << *s.a
      << ")\n";
  return order == expected && inst.result.certified() ? ExitCode::Ok : ExitCode::Failed;
}

ExitCode verify(const CommandOptions& s, std::ostream& out) {
  ColoredGraph c = read_graph_file(s.input);
  if (s.k) c = c.with_k(*s.k);
  const auto report = verify_certificate(c);
  out << dump(report.to_json());
  return report.certificate_valid ? ExitCode::Ok : ExitCode::Failed;
}

ExitCode enumerate(const CommandOptions& s, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const GenerationRun run = s.kind == "triangulations" ? enumerate_triangulation_run(*s.n)
                                                       : enumerate_polyhedra(*s.n);
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  std::string lines;
  for (const auto& g : run.graphs) lines += to_graph6(g) + "\n";
  emit(s.output, lines, out);

  Json summary;
  summary["kind"] = to_string(run.kind);
  summary["n"] = run.n;
  summary["count"] = run.count();
  if (s.timings) summary["elapsed_ms"] = elapsed.count();
  const std::string summary_path =
      s.summary.empty() ? "enumerate_" + to_string(run.kind) + "_n" + std::to_string(*s.n) + ".json"
                        : s.summary;
  write_text_file(summary_path, dump(summary));
  return ExitCode::Ok;
}

ExitCode minimality(const CommandOptions& s, std::ostream& out) {
  const auto report = minimality_oracle(*s.k, *s.a);
  if (!s.output.empty()) write_text_file(s.output, dump(report.to_json()));
  out << report.summary() << "\n";
  if (!report.holds) {
    out << "lower bound violated: a polyhedron below order " << report.formula_order
        << " has a " << *s.k << "-independent set of size " << *s.a << "\n";
    return ExitCode::Failed;
  }
  return ExitCode::Ok;
}

ExitCode radial(const CommandOptions& s, std::ostream& out) {
  const ColoredGraph in = read_graph_file(s.input);
  const Embedding e = in.has_embedding() ? in.embedding() : planar_embedding(in.graph());
  const ColoredGraph result = radial_graph(e);
  emit(s.output, dump(colored_to_json(result)), out);
  return ExitCode::Ok;
}

ExitCode classify(const CommandOptions& s, std::ostream& out) {
  const auto report = classify_extremal(*s.a, s.forward_only);
  emit(s.output, dump(report.to_json()), out);
  return report.passed() ? ExitCode::Ok : ExitCode::Failed;
}

ExitCode export_graph(const CommandOptions& s, std::ostream& out) {
  const ColoredGraph c = read_graph_file(s.input);
  std::string text;
  if (s.format == "json")
    text = dump(colored_to_json(c));
  else if (s.format == "graph6")
    text = to_graph6(c.graph()) + "\n";
  else
    text = to_dot(c);
  emit(s.output, text, out);
  return ExitCode::Ok;
}

}  // namespace

std::string to_dot(const ColoredGraph& c) {
  std::ostringstream dot;
  dot << "graph G {\n  node [style=filled, fontcolor=white];\n";
  for (Vertex v = 0; v < c.graph().order(); ++v)
    dot << "  " << v << " [fillcolor=" << (c.is_red(v) ? "red" : "blue") << "];\n";
  for (const auto& [u, v] : c.graph().edges()) dot << "  " << u << " -- " << v << ";\n";
  dot << "}\n";
  return dot.str();
}

std::string validate(const CommandOptions& s) {
  auto need = [](const std::optional<int>& x, const char* name, int lo) -> std::string {
    if (!x) return std::string("--") + name + " is required";
    if (*x < lo) return std::string("--") + name + " must be >= " + std::to_string(lo);
    return {};
  };
  std::string why;
  switch (s.subcommand) {
    case Subcommand::Construct:
    case Subcommand::Minimality:
      if (why = need(s.k, "k", 1); !why.empty()) return why;
      return need(s.a, "a", 1);
    case Subcommand::Verify:
      if (s.input.empty()) return "an input graph file is required";
      if (s.k && *s.k < 1) return "--k must be >= 1";
      return {};
    case Subcommand::Enumerate:
      if (why = need(s.n, "n", 4); !why.empty()) return why;
      if (s.kind != "polyhedra" && s.kind != "triangulations")
        return "--kind must be polyhedra or triangulations";
      if (s.kind == "polyhedra" && *s.n > kMaxPolyhedronOrder)
        return "--n must be <= 9 for polyhedra";
      if (s.kind == "triangulations" && *s.n > kMaxTriangulationOrder)
        return "--n must be <= 10 for triangulations";
      return {};
    case Subcommand::Classify:
      if (why = need(s.a, "a", 4); !why.empty()) return why;
      if (*s.a % 2 != 0) return "--a must be even";
      return {};
    case Subcommand::Radial:
      if (s.input.empty()) return "an input graph file is required";
      return {};
    case Subcommand::Export:
      if (s.input.empty()) return "an input graph file is required";
      if (s.format != "json" && s.format != "graph6" && s.format != "dot")
        return "--format must be json, graph6 or dot";
      return {};
  }
  return "unknown subcommand";
}

ExitCode run(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  if (auto why = validate(opts); !why.empty()) {
    err << "usage error: " << why << "\n";
    return ExitCode::Usage;
  }
  try {
    switch (opts.subcommand) {
      case Subcommand::Construct: return construct(opts, out);
      case Subcommand::Verify: return verify(opts, out);
      case Subcommand::Enumerate: return enumerate(opts, out);
      case Subcommand::Minimality: return minimality(opts, out);
      case Subcommand::Radial: return radial(opts, out);
      case Subcommand::Classify: return classify(opts, out);
      case Subcommand::Export: return export_graph(opts, out);
    }
  } catch (const EnvelopeError& ex) {
    err << "error: " << ex.what() << "\n";
    return ExitCode::Usage;
  } catch (const GraphError& ex) {
    err << "error: " << ex.what() << "\n";
    return ExitCode::Usage;
  } catch (const std::logic_error& ex) {
    err << "invariant failed: " << ex.what() << "\n";
    return ExitCode::Failed;
  } catch (const std::runtime_error& ex) {
    err << "error: " << ex.what() << "\n";
    return ExitCode::Usage;
  }
  return ExitCode::Usage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal polyhedral graphs with k-independent sets"};
  app.require_subcommand(1);
  CommandOptions opts;

  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", opts.k, "independence radius"); };
  auto add_a = [&](CLI::App* sub) { sub->add_option("--a", opts.a, "independent set size"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--output", opts.output, "output path"); };

  auto* construct_cmd = app.add_subcommand("construct", "build an extremal graph for (k, a)");
  add_k(construct_cmd);
  add_a(construct_cmd);
  add_out(construct_cmd);
  construct_cmd->add_flag("--all-red-deg3", opts.all_red_deg3, "every red vertex has degree 3");

  auto* verify_cmd = app.add_subcommand("verify", "check polyhedrality and the red certificate");
  verify_cmd->add_option("input", opts.input, "graph file (JSON or graph6)");
  add_k(verify_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list polyhedra or triangulations");
  enumerate_cmd->add_option("--n", opts.n, "vertex count");
  enumerate_cmd->add_option("--kind", opts.kind, "polyhedra | triangulations");
  enumerate_cmd->add_option("--summary", opts.summary, "summary JSON path");
  enumerate_cmd->add_flag("--timings", opts.timings, "record elapsed time in the summary");
  add_out(enumerate_cmd);

  auto* minimality_cmd = app.add_subcommand("minimality", "exhaustive lower-bound scan");
  add_k(minimality_cmd);
  add_a(minimality_cmd);
  add_out(minimality_cmd);

  auto* radial_cmd = app.add_subcommand("radial", "vertex-face graph of an embedded polyhedron");
  radial_cmd->add_option("input", opts.input, "graph file");
  add_out(radial_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "extremal graph characterization for even a");
  add_a(classify_cmd);
  classify_cmd->add_flag("--forward-only", opts.forward_only, "skip the exhaustive reverse scan");
  add_out(classify_cmd);

  auto* export_cmd = app.add_subcommand("export", "convert between json, graph6 and dot");
  export_cmd->add_option("input", opts.input, "graph file");
  export_cmd->add_option("--format", opts.format, "json | graph6 | dot");
  add_out(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {construct_cmd, Subcommand::Construct}, {verify_cmd, Subcommand::Verify},
      {enumerate_cmd, Subcommand::Enumerate}, {minimality_cmd, Subcommand::Minimality},
      {radial_cmd, Subcommand::Radial},       {classify_cmd, Subcommand::Classify},
      {export_cmd, Subcommand::Export}};
  for (const auto& [sub, which] : table)
    if (sub->parsed()) opts.subcommand = which;
  return static_cast<int>(run(opts, out, err));
}

}  // namespace polyk::cli

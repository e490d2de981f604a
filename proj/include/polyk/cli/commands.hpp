#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyk/core/colored_graph.hpp"

namespace polyk::cli {

enum class Subcommand { Construct, Verify, Enumerate, Minimality, Radial, Classify, Export };

enum class ExitCode : int { Ok = 0, Failed = 1, Usage = 2 };

struct CommandOptions {
  Subcommand subcommand = Subcommand::Construct;
  std::optional<int> k;
  std::optional<int> a;
  std::optional<int> n;
  std::string input;
  std::string output;
  std::string format = "json";        ///< json | graph6 | dot
  std::string kind = "polyhedra";     ///< enumerate: polyhedra | triangulations
  std::string summary;                ///< enumerate: summary JSON path
  bool all_red_deg3 = false;
  bool forward_only = false;
  bool timings = false;
};

/// Empty when the opts is runnable, otherwise the usage problem.
std::string validate(const CommandOptions& opts);

ExitCode run(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// DOT rendering with red/blue vertex fill.
std::string to_dot(const ColoredGraph& c);

/// Parses argv with CLI11 and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyk::cli

#pragma once

#include "fibrenrich/corpus.hpp"

// Command dispatch shared by the command-line tool and the test-suite: every
// subcommand is a pure function of (workspace, arguments, options) producing a
// Report, so output bytes are reproducible run to run (timing aside).

namespace fibrenrich {

struct Options {
  int budget = 60;  // enumeration bound for the uniqueness sweep
  long seed = 0;    // reserved for randomized instance generation
};

struct Report {
  std::string command;   // the invocation, echoed back
  std::string verdict;   // "pass" | "fail" | "error"
  std::vector<Finding> findings;
  std::string error;     // diagnostic when verdict is "error"
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;

  // pass -> 0, fail (law findings) -> 1, error (misuse/defect) -> 2.
  int exit_code() const;
  std::string render_json(bool with_timing = true) const;
  std::string render_text(bool with_timing = true) const;
};

// Runs one subcommand (args[0]) with its arguments against the workspace.
// Never throws: misuse and engine defects surface as "error" reports.
Report run_command(const Workspace& ws, const std::vector<std::string>& args,
                   const Options& opt = {});

// All subcommand names in display order.
const std::vector<std::string>& command_names();

}  // namespace fibrenrich

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibrenrich/frontend.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fibrenrich: exact checker for finite categorical structures"};
  app.allow_extras();

  std::string workspace_path;
  bool as_json = false;
  bool as_text = false;
  int budget = -1;
  long seed = 0;
  app.add_option("--workspace", workspace_path, "workspace file (default: built-in corpus)");
  app.add_flag("--json", as_json, "machine-readable report (default)");
  app.add_flag("--text", as_text, "human-readable report");
  app.add_option("--budget", budget, "search budget for exhaustive checks");
  app.add_option("--seed", seed, "seed for randomized modes (reserved)");

  CLI11_PARSE(app, argc, argv);
  std::vector<std::string> args = app.remaining();

  fibrenrich::Options opt;
  if (budget >= 0) {
    opt.budget = budget;
  } else if (const char* env = std::getenv("FIBRENRICH_BUDGET")) {
    try {
      opt.budget = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: FIBRENRICH_BUDGET is not a number\n";
      return 2;
    }
  }
  opt.seed = seed;

  try {
    // `corpus --dump` prints the workspace document itself so it can be fed
    // back through --workspace; everything else goes through the report path.
    if (args.size() == 2 && args[0] == "corpus" && args[1] == "--dump" && workspace_path.empty()) {
      std::cout << fibrenrich::emit_workspace(fibrenrich::corpus());
      return 0;
    }

    const fibrenrich::Workspace* ws = nullptr;
    fibrenrich::Workspace file_ws;
    if (workspace_path.empty()) {
      ws = &fibrenrich::corpus();
    } else {
      std::ifstream in(workspace_path);
      if (!in) {
        std::cerr << "error: cannot open '" << workspace_path << "'\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      file_ws = fibrenrich::parse_workspace(buf.str());
      ws = &file_ws;
    }

    fibrenrich::Report rep = fibrenrich::run_command(*ws, args, opt);
    std::cout << (as_text && !as_json ? rep.render_text() : rep.render_json());
    return rep.exit_code();
  } catch (const fibrenrich::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

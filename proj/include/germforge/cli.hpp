#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace germforge {

// Exit codes of run_command.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,          // malformed input or request
  kExitCertification = 2,  // no truncation degree could be certified
  kExitInfinite = 3,       // infinite codimension where finiteness is required
  kExitNumeric = 4,        // numeric sampling or residual budget exhausted
  kExitNoSolution = 5,     // inconsistent system (no contact transformation)
};

struct CommandRequest {
  std::string command;
  std::vector<std::string> args;  // positional operands
  std::vector<std::string> vars{"x", "lambda"};
  std::vector<std::string> params;  // unfolding parameters; detected when empty
  std::optional<unsigned> degree;
  std::string ring = "jet";  // jet | poly
  std::string order;         // alex | lex | degrevlex; defaults by ring
  bool json = false;
  bool normalize = false;
  bool short_list = false;
  double box = 1.0;
  unsigned grid = 0;
  std::string svg;  // output file, or file prefix for several plots
};

struct CommandResult {
  int code = kExitOk;
  std::string out;
  std::string err;
  std::vector<std::pair<std::string, std::string>> files;  // path, contents
};

const std::vector<std::string>& command_names();
CommandResult run_command(const CommandRequest& req);

}  // namespace germforge

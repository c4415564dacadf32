#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ore {

// One dispatchable command: the subcommand name, the operation positional
// (empty when the subcommand acts directly), and the library operations the
// command drives.  The coverage test walks this table.
struct CliCommand {
  std::string subcommand;
  std::string op;
  std::vector<std::string> operations;
};

const std::vector<CliCommand> &cli_command_table();

// Runs one invocation (args exclude the program name) and prints the
// deterministic report JSON to `out`.  Returns the process exit code:
// 0 all checks passed, 1 check failures, 2 usage or input-format errors.
int cli_run(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace ore

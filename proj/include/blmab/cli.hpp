#pragma once

namespace blmab {

// Full command-line front end (subcommands `run` and `bounds`).
// Returns 0 on success, 2 on usage/configuration errors, 1 on runtime
// failures.
int cli_main(int argc, char** argv);

}  // namespace blmab

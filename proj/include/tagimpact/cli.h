#ifndef TAGIMPACT_CLI_H_
#define TAGIMPACT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tagimpact {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitTagger = 3,
};

// Runs one subcommand. `args` excludes the program name, e.g.
// {"eval-tags", "--gold", "g.tag", "--pred", "p.tag"}. Summaries go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

// Directory holding the bundled lexicon, rules and fixtures.
std::string default_data_dir();

}  // namespace tagimpact

#endif  // TAGIMPACT_CLI_H_

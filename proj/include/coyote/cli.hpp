#ifndef COYOTE_CLI_HPP
#define COYOTE_CLI_HPP

#include <string>
#include <vector>

namespace coyote::cli {

/// Entry point behind the coyote binary. Subcommands: simulate,
/// simulate-cutoff, hangtime, asympt, fit-springs, compare, sweep,
/// demo-two-mass. Returns 0 on success, 1 on domain errors, 2 on usage
/// errors. Every primary output gets a <out>.manifest.json next to it.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

} // namespace coyote::cli

#endif

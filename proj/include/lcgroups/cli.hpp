#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcg {

// Runs one invocation of the command-line driver against the given streams.
// `args` excludes the program name.  Returns the process exit code: 0 on
// success (negative mathematical verdicts are still successes), 1 when a
// verification run reports failures or the engine refuses at runtime, 2 on
// usage or input errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcg

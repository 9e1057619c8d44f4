#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo::cli {

// Dispatch one invocation. Exit codes: 0 success, 1 domain error (the module
// error name is carried verbatim in the report), 2 usage error. The report
// goes to `out`; diagnostics and timing go to `err` so stdout stays
// byte-identical across identical invocations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli

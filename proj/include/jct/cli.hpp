#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace jct {

// Front end behind the jct binary.  `args` excludes the program name.
// Returns the process exit code: 0 on success, 1 on usage errors (bad flag,
// unknown config key, malformed word), 2 on domain errors, which print the
// module error name verbatim on `err`.  Reports go to `out` as key = value
// lines followed by a JSON block; identical args produce identical bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The acceptance suite behind `jct selftest`: prints one PASS/FAIL line per
// criterion and returns the number of unexpected failures (clauses known to
// be out of numerical reach at feasible resolutions print FAIL with the
// measured value and a note, and do not count).
int run_acceptance(std::ostream& out);

} // namespace jct

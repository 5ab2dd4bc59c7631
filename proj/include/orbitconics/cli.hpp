#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitconics::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 1;
inline constexpr int kExitNumericalFailure = 2;

/// Version stamped into every JSON report as "schema_version".
inline constexpr int kSchemaVersion = 1;

/// Runs one CLI invocation. args[0] is the program name. Reports go to `out`
/// unless redirected with --out; errors go to `err` as a single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the file through a temporary sibling and a rename.
void write_file_atomically(const std::string& path, const std::string& contents);

/// Shortest round-trip formatting with up to 17 significant digits.
std::string format_number(double value);

}  // namespace orbitconics::cli

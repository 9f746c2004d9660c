#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nilsol/suite.hpp"

namespace nilsol {

namespace exit_code {
constexpr int ok = 0;
constexpr int parse_error = 1;
constexpr int invalid_algebra = 2;
constexpr int inconclusive = 3;
constexpr int usage = 64;
}  // namespace exit_code

struct CliEnvironment {
  /// Resolves catalog names, both as input arguments and inside paper-suite.
  CatalogLookup lookup;
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnvironment& env);

}  // namespace nilsol

#ifndef WGMCOOL_CLI_HPP
#define WGMCOOL_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>

namespace wgmcool::cli {

enum ExitCode : int { success = 0, domain_failure = 1, usage_failure = 2 };

// Entry point of the wgmcool executable. Commands: spectrum, resonance,
// limits, gas, cool, toy. Configuration layers, later ones winning:
// --preset, --config file, --set key=value, then the command's own flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Text of a bundled preset; throws UsageError for unknown names.
std::string_view preset(const std::string& name);

}  // namespace wgmcool::cli

#endif

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradus/report.hpp"

namespace gradus::cli {

inline const std::vector<std::string> kVerbs = {"hilbert", "dim", "depth", "cm",    "sop",  "koszul",
                                                "lc",      "lh",  "ndim",  "width", "cocm", "verify"};
inline const std::vector<std::string> kStatements = {"prop21", "cor22", "prop23", "prop24",
                                                     "cocm",   "thm31", "cor32",  "thm34"};

struct CommandConfig {
  std::string verb;
  std::string statement;  // verify only
  std::string module_path;
  std::optional<std::string> ideal;
  std::optional<std::string> sop;
  std::optional<std::pair<int, int>> window;
  std::optional<int> levels;
  std::optional<int> streak;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  Format format = Format::kText;
  std::optional<std::string> out;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// "lo..hi", lo <= hi. Throws InputError.
std::pair<int, int> parse_window(const std::string& text);

/// Runs one command. Usage and parse errors become exit code 1 with the
/// message as output.
CommandResult run(const CommandConfig& cfg);

int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gradus::cli

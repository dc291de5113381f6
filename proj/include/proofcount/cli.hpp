#pragma once

#include <iosfwd>
#include <string>

#include "proofcount/pse_gen.hpp"

namespace pc {

struct RunConfig {
  enum class Cmd { Count, Enumerate, Equations, Check, Reverse };
  Cmd cmd = Cmd::Count;
  Mode mode;                 // ignored by Reverse
  int max_size = 12;         // Enumerate
  bool json = false;
  std::string input;         // formula text, PSE document/path, "-" for stdin
  std::string term;          // Check: the proof term
  std::string corpus;        // Count: batch file, one formula per line
};

// Exit status: 0 success, 1 parse or validation error, 2 internal invariant
// violation. Diagnostics go to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace pc

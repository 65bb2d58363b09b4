#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symdehn::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

// One entry of the verify-paper battery. Expected values are literals; computed
// values come from the library.
struct PaperCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<PaperCheck> paper_checks();

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdehn::cli

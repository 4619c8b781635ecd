#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pathsig::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kConfigError = 3 };

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output;  // empty = stdout
  int depth = 2;
  std::string embedding;
  std::string layout;
  bool log_signature = false;
  bool standardize = false;
  bool null_labels = false;
  std::uint64_t seed = 42;
  double lambda1 = 0.01;
  double lambda2 = 0.0;
};

int cmd_sig(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_features(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cde_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathsig::cli

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lipscomb/rational.hpp"

namespace lipscomb {

enum ExitCode : int {
  exit_ok = 0,
  exit_bad_input = 1,
  exit_resource_cap = 2,
  exit_disconnected = 3,
  exit_invariant = 4,
};

struct RunConfig {
  std::string graph_path;
  std::optional<std::string> z;
  std::size_t depth = 8;
  std::optional<Rational> epsilon;
  std::string format = "text";
  std::size_t point_cap = 10'000'000;
  unsigned threads = 1;

  // Throws InvalidInput on a zero point cap or thread count, or an unknown format.
  void validate() const;
};

// Point cap from LIPSCOMB_POINT_CAP, if set.
std::optional<std::size_t> point_cap_from_env();

// "key = value" lines; '#' starts a comment. Keys: graph, z, depth, epsilon,
// format, point_cap, threads.
void apply_config_text(RunConfig& cfg, std::string_view text);

// Full command line without the program name, e.g. {"embed", "--graph", ...}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lipscomb

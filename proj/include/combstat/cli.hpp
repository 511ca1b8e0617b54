#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "combstat/objects.hpp"

namespace combstat {

// Settings shared by every subcommand; a config file is applied first, flags override it.
struct RunConfig {
  std::optional<int> trunc_z, trunc_x, trunc_y;
  Budgets budgets{};
  std::string format = "csv";  // csv | json | plotdata
  bool decimal = false;
  int digits = 4;
  int workers = 1;
  std::string suite = "all";
  int max_n = -1;
};

// Reads a JSON object with keys named after the long flags ("format", "trunc-z", "budget", ...).
void apply_config_file(const std::string& path, RunConfig& cfg);

// Exit codes: 0 success, 1 a check or budget failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combstat

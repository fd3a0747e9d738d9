#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcdb/config.hpp"

namespace rcdb {

// Exit codes: 0 success, 1 configuration error, 2 numerical failure.
// Each command writes a CSV to out_path and echoes the resolved config to
// out_path + ".config.json".

int cmd_run(const std::string& config_path, const std::string& out_path,
            std::optional<std::uint64_t> seed_override, bool quiet);

int cmd_compare(const std::string& config_path, const std::string& out_path, bool quiet);

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& budgets_csv, bool quiet);

// CSV number format: up to 6 significant digits.
std::string format_number(double x);

// Parses "20,40,60" into ascending nonnegative integers; throws ConfigError.
std::vector<int> parse_budgets(const std::string& budgets_csv);

}  // namespace rcdb

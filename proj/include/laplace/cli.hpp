#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace laplace {

enum class Command { coeffs, gamma, igamma, tables, verify };
enum class RouteChoice { direct, wojdylo, comtet, all };
enum class OutputFormat { table, json, csv };

struct CliConfig {
  Command command = Command::coeffs;
  std::optional<std::string> input_path;
  RouteChoice route = RouteChoice::all;
  int n_max = -1;  // -1 selects the per-command default
  OutputFormat format = OutputFormat::table;
  bool pad = false;
  double lambda_min = 10.0;   // verify only
  double lambda_max = 1000.0;  // verify only
  int points = 9;              // verify only; >= 4 for order fitting
  unsigned long seed = 12345;  // verify route sweep
  std::optional<std::string> out_path;  // file (reports) or directory (verify)
};

// Runs one command, writing the report to `out` and diagnostics to `err`.
// Exit codes: 0 success; 1 invalid input; 2 exact route disagreement
// (impossible unless the implementation is broken); 3 numeric verification
// failure.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace laplace

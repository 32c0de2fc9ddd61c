#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "laplace/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact scaled coefficients of Laplace-type asymptotic expansions, computed by\n"
      "independent routes that must agree bit for bit, plus numeric verification sweeps."};
  app.require_subcommand(1);

  laplace::CliConfig cfg;
  std::string route = "all";
  std::string format = "table";
  std::string input;
  std::string out;

  const auto add_common = [&](CLI::App* sub, const char* out_help) {
    sub->add_option("--format", format, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", out, out_help);
  };
  const auto add_n_max = [&](CLI::App* sub, const char* help) {
    sub->add_option("--n-max", cfg.n_max, help)->check(CLI::NonNegativeNumber);
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "Scaled coefficients of a problem file");
  coeffs->add_option("--input", input, "problem description (JSON)")->required();
  coeffs->add_option("--route", route, "direct, wojdylo, comtet, or all")
      ->check(CLI::IsMember({"direct", "wojdylo", "comtet", "all"}));
  add_n_max(coeffs, "override the file's n_max");
  coeffs->add_flag("--pad", cfg.pad, "treat missing a_k / b_k as zero");
  add_common(coeffs, "write the report to this file");

  CLI::App* gamma =
      app.add_subcommand("gamma", "Stirling-series coefficients by five independent routes");
  add_n_max(gamma, "largest coefficient index (default 4)");
  add_common(gamma, "write the report to this file");

  CLI::App* igamma = app.add_subcommand(
      "igamma", "Incomplete-gamma polynomials Q_n and diagonal coefficients C_n(0)");
  add_n_max(igamma, "largest index (default 3)");
  add_common(igamma, "write the report to this file");

  CLI::App* tables =
      app.add_subcommand("tables", "Bell, potential, and Stirling number triangles");
  tables->add_option("--input", input, "optional JSON {\"f\": [...], \"rho\": \"p/q\"}");
  add_n_max(tables, "triangle depth (default 6)");
  add_common(tables, "write the report to this file");

  CLI::App* verify = app.add_subcommand(
      "verify", "Numeric sweeps against high-precision references; writes CSV + JSON artifacts");
  add_n_max(verify, "terms per sweep (default 6)");
  verify->add_option("--lambda-min", cfg.lambda_min, "grid start (default 10)");
  verify->add_option("--lambda-max", cfg.lambda_max, "grid end (default 1000)");
  verify->add_option("--points", cfg.points, "grid size (default 9, minimum 4)");
  verify->add_option("--seed", cfg.seed, "seed for the exact route-agreement sweep");
  add_common(verify, "directory for artifacts (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // --help exits 0; bad flags exit 1
  }

  if (gamma->parsed())
    cfg.command = laplace::Command::gamma;
  else if (igamma->parsed())
    cfg.command = laplace::Command::igamma;
  else if (tables->parsed())
    cfg.command = laplace::Command::tables;
  else if (verify->parsed())
    cfg.command = laplace::Command::verify;
  else
    cfg.command = laplace::Command::coeffs;

  cfg.route = route == "direct"    ? laplace::RouteChoice::direct
              : route == "wojdylo" ? laplace::RouteChoice::wojdylo
              : route == "comtet"  ? laplace::RouteChoice::comtet
                                   : laplace::RouteChoice::all;
  cfg.format = format == "json"  ? laplace::OutputFormat::json
               : format == "csv" ? laplace::OutputFormat::csv
                                 : laplace::OutputFormat::table;
  if (!input.empty()) cfg.input_path = input;
  if (!out.empty()) cfg.out_path = out;

  return laplace::run(cfg, std::cout, std::cerr);
}

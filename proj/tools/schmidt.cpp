// schmidt: compute Schmidt numbers c_n^(r), their inner sums t_{n,j}^(r),
// and run the exact verification sweeps.
//
//   schmidt compute    --r 4 --n-max 10 [--routes definition,inverse,closed]
//   schmidt t-table    --r 3 --n-max 6
//   schmidt verify     --r-max 8 --n-max 12
//   schmidt identities --trials 100 --m-max 5 --seed 42
//
// Every command accepts --format plain|json|csv.  Results go to stdout,
// diagnostics (including elapsed time) to stderr.

#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "schmidt/cli.hpp"

namespace {

using schmidt::cli::Format;
using schmidt::cli::Route;
using schmidt::cli::RunConfig;

void add_format(CLI::App* cmd, RunConfig& config) {
  static const std::map<std::string, Format> kFormats{
      {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
  cmd->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Exact computation and verification of Schmidt numbers"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Print c_0^(r)..c_nMax^(r) by each route");
  compute->add_option("--r", config.r, "Exponent r")->check(CLI::Range(1u, 1000u));
  compute->add_option("--n-max", config.n_max, "Largest n");
  static const std::map<std::string, Route> kRoutes{{"definition", Route::definition},
                                                    {"inverse", Route::inverse},
                                                    {"closed", Route::closed}};
  compute->add_option("--routes", config.routes, "Routes to compute and compare")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(kRoutes, CLI::ignore_case));
  add_format(compute, config);

  auto* t_table = app.add_subcommand("t-table", "Print t_{n,j}^(r) and C(2j,j)t/C(2n,n)");
  t_table->add_option("--r", config.r, "Exponent r")->check(CLI::Range(1u, 1000u));
  t_table->add_option("--n-max", config.n_max, "Largest n");
  add_format(t_table, config);

  auto* verify = app.add_subcommand("verify", "Run the integrality and route-agreement sweep");
  verify->add_option("--r-max", config.r_max, "Largest exponent r");
  verify->add_option("--n-max", config.n_max, "Largest n");
  add_format(verify, config);

  auto* identities =
      app.add_subcommand("identities", "Check the hypergeometric identities on seeded samples");
  identities->add_option("--trials", config.trials, "Random trials per identity");
  identities->add_option("--m-max", config.m_max, "Largest termination index m");
  identities->add_option("--seed", config.seed, "Sampler seed");
  add_format(identities, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? schmidt::cli::kExitOk : schmidt::cli::kExitUsage;
  }

  if (compute->parsed()) config.command = schmidt::cli::Command::compute;
  if (t_table->parsed()) config.command = schmidt::cli::Command::t_table;
  if (verify->parsed()) config.command = schmidt::cli::Command::verify;
  if (identities->parsed()) config.command = schmidt::cli::Command::identities;

  if (config.command == schmidt::cli::Command::compute && config.routes.empty()) {
    std::cerr << "compute: --routes must name at least one route\n";
    return schmidt::cli::kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  schmidt::cli::CommandOutput output;
  try {
    output = schmidt::cli::run(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return schmidt::cli::kExitCheckFailed;
  }
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;

  std::cout << output.text << std::flush;
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return output.exit_code;
}

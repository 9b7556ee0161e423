#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace rotavg::cli;

  CLI::App app{"Exact rotational averages of direction-cosine products and Cartesian tensors"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "Average of one direction-cosine monomial");
  auto* chi_opt = compute_cmd->add_option("--chi", compute.chi, "Power matrix, e.g. \"[[1,0,0],[0,1,0],[0,0,1]]\"");
  compute_cmd->add_option("--indices", compute.indices, "Lab/mol digit pairs, e.g. \"11,23,32\"")->excludes(chi_opt);

  AverageOptions average;
  auto* average_cmd = app.add_subcommand("average", "Rotationally average a tensor file");
  average_cmd->add_option("input", average.input, "Tensor JSON file, or - for stdin")->required();
  average_cmd->add_option("-o,--output", average.output, "Output file, default stdout");
  average_cmd->add_flag("--nonzero-only", average.nonzero_only, "Emit only nonzero components");
  average_cmd->add_option("--max-rank", average.max_rank, "Largest accepted tensor rank");
  average_cmd->add_option("--threads", average.threads, "Worker threads, 0 = all cores");

  EnumerateOptions enumerate;
  std::string format = "json";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Table of all rank-n power matrices with values");
  enumerate_cmd->add_option("-n,--rank", enumerate.rank, "Rank")->required();
  enumerate_cmd->add_flag("--nonzero", enumerate.nonzero, "Only matrices passing the selection rule");
  enumerate_cmd->add_flag("--canonical", enumerate.canonical, "One record per symmetry orbit");
  enumerate_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  enumerate_cmd->add_option("--max-rank", enumerate.max_rank, "Largest accepted rank");
  enumerate_cmd->add_option("--threads", enumerate.threads, "Worker threads, 0 = all cores");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check evaluation routes and vanishing rules");
  verify_cmd->add_option("--suite", verify.suite, "oracle, beta, mc, props or all")
      ->check(CLI::IsMember({"oracle", "beta", "mc", "props", "all"}));
  verify_cmd->add_option("-n,--ranks", verify.ranks, "Rank or range a..b");
  verify_cmd->add_option("--samples", verify.samples, "Monte Carlo samples per matrix");
  verify_cmd->add_option("--seed", verify.seed, "Monte Carlo seed");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (*compute_cmd) return run_compute(compute, std::cout, std::cerr);
  if (*average_cmd) return run_average(average, std::cout, std::cerr);
  if (*enumerate_cmd) {
    enumerate.format = format == "csv" ? Format::csv : Format::json;
    return run_enumerate(enumerate, std::cout, std::cerr);
  }
  return run_verify(verify, std::cout, std::cerr);
}

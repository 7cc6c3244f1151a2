#include <iostream>

#include <CLI11.hpp>

#include "cohomog/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cohomology of cohomogeneity-one actions"};
  app.require_subcommand(1);

  std::string path;
  cohomog::RunOptions options;
  std::string format = "text";

  CLI::App* run = app.add_subcommand(
      "run", "Classify an action spec and present its cohomology ring");
  run->add_option("path", path, "action-spec file")->required();
  run->add_option("--max-degree", options.max_degree,
                  "truncation degree (default 40)");
  run->add_flag("--verify", options.verify,
                "run the degreewise verification oracle");
  run->add_option("--trials", options.trials,
                  "product spot-check trials (default 50)");
  run->add_option("--seed", options.seed, "spot-check RNG seed");
  run->add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  run->add_option("--out", options.out, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  options.format = format == "machine" ? cohomog::RunOptions::Format::Machine
                                       : cohomog::RunOptions::Format::Text;
  return cohomog::run(path, options, std::cout, std::cerr);
}

#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "flipchain/cli.hpp"

namespace {

void add_format_flags(CLI::App* cmd, flipchain::Format& format) {
  auto* group = cmd->add_option_group("format", "output format (text by default)");
  group->add_flag_callback("--json", [&format] { format = flipchain::Format::Json; }, "emit JSON");
  group->add_flag_callback("--csv", [&format] { format = flipchain::Format::Csv; }, "emit CSV");
  group->add_flag_callback("--latex", [&format] { format = flipchain::Format::Latex; }, "emit LaTeX tabulars");
  group->require_option(0, 1);
}

}  // namespace

int main(int argc, char** argv) {
  using flipchain::Command;
  flipchain::RunConfig config;

  CLI::App app{"Chambers, Poincare polynomials and stability checks for the chain of C*-flips of rank-2 framed modules"};
  app.require_subcommand(1);

  auto* chambers = app.add_subcommand("chambers", "walls, chambers and flip loci of type (2, d, O_X)");
  auto* betti = app.add_subcommand("betti", "Poincare polynomials of FM^i with two-route verification");
  auto* stability = app.add_subcommand("stability-check", "stability verdicts for a FramedModel JSON file");
  auto* verify = app.add_subcommand("verify-all", "full consistency grid and stability property suite");

  for (auto* cmd : {chambers, betti}) {
    cmd->add_option("--d", config.d, "degree d < 0")->required();
    cmd->add_option("--g", config.g, "genus g >= 2")->required();
  }
  betti->add_option("--chamber", config.chamber, "only FM^i for this i");
  stability->add_option("--model", config.model_path, "path to the model JSON")->required();

  std::vector<std::int64_t> grid;
  verify->add_option("--grid", grid, "g_max d_min")->expected(2);
  verify->add_option("--seed", config.seed, "seed for the random models");
  verify->add_option("--models", config.models, "number of random rank-2 models");

  for (auto* cmd : {chambers, betti, stability, verify}) add_format_flags(cmd, config.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : flipchain::kExitInvalidInput;
  }

  if (chambers->parsed()) config.command = Command::Chambers;
  if (betti->parsed()) config.command = Command::Betti;
  if (stability->parsed()) config.command = Command::StabilityCheck;
  if (verify->parsed()) {
    config.command = Command::VerifyAll;
    if (!grid.empty()) config.grid = std::make_pair(static_cast<int>(grid[0]), grid[1]);
  }
  return flipchain::run(config, std::cout, std::cerr);
}

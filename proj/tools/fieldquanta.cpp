// fieldquanta: classify the particle content of linear field theories.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fieldquanta/cli.hpp"

namespace {

void add_input_options(CLI::App* cmd, fieldquanta::RunConfig& cfg, std::string& builtin, std::string& spec) {
  auto* b = cmd->add_option("--builtin", builtin, "Built-in theory name");
  auto* s = cmd->add_option("--spec", spec, "Theory spec file (fieldquanta-spec/1 JSON)");
  b->excludes(s);
  cmd->add_option("--seed", cfg.seed, "Seed for randomized searches (default: $FIELDQUANTA_SEED or 0)");
  cmd->add_option("--eps-rel", cfg.tol.eps_rel, "Relative tolerance");
  cmd->add_option("--eps-rank", cfg.tol.eps_rank, "Rank cut relative to the operator norm");
  cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

void finish_input(fieldquanta::RunConfig& cfg, const std::string& builtin, const std::string& spec) {
  if (!builtin.empty()) cfg.builtin = builtin;
  if (!spec.empty()) cfg.spec_path = spec;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fieldquanta;

  CLI::App app{"Classify particles and antiparticles of linear field theories from their symmetry data"};
  app.set_version_flag("--version", cli::version());
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.seed = cli::default_seed();
  std::string builtin;
  std::string spec;
  std::string modes;
  std::string field;
  std::string demo;

  auto* classify = app.add_subcommand("classify", "Run the full classification pipeline");
  add_input_options(classify, cfg, builtin, spec);
  classify->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--modes", modes, "Verify antiparticle content on a lattice with M sites and length L (M,L)");

  auto* export_modes = app.add_subcommand("modes", "Export mode coefficients of a seeded random solution as CSV");
  add_input_options(export_modes, cfg, builtin, spec);
  export_modes->add_option("--field", field, "Field name (default: the first field)");
  export_modes->add_option("--lattice", modes, "Lattice as M,L (default 64,2pi)");

  auto* demo_cmd = app.add_subcommand("demo", "Walk through a worked example");
  demo_cmd->add_option("name", demo, "so2-vs-so3, higgs or goldstone")->required();

  auto* export_cmd = app.add_subcommand("export", "Print the spec JSON of a built-in theory");
  export_cmd->add_option("--builtin", builtin, "Built-in theory name")->required();
  export_cmd->add_option("--out", cfg.out, "Write to this file instead of stdout");

  auto* builtins_cmd = app.add_subcommand("builtins", "List the built-in theories");

  auto* validate = app.add_subcommand("validate", "Check a spec file");
  validate->add_option("--spec", spec, "Theory spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!modes.empty()) cfg.modes = cli::parse_modes(modes);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (*classify) {
    finish_input(cfg, builtin, spec);
    return cli::classify_command(cfg, std::cout, std::cerr);
  }
  if (*export_modes) {
    finish_input(cfg, builtin, spec);
    return cli::modes_command(cfg, field, std::cout, std::cerr);
  }
  if (*demo_cmd) return cli::demo_command(demo, std::cout, std::cerr);
  if (*export_cmd) return cli::export_command(builtin, cfg.out, std::cout, std::cerr);
  if (*builtins_cmd) return cli::builtins_command(std::cout);
  return cli::validate_command(spec, std::cout, std::cerr);
}

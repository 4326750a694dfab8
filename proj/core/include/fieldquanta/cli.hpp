#pragma once

// The classification pipeline behind the fieldquanta command line tool.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "fieldquanta/catalog.hpp"
#include "fieldquanta/report.hpp"

namespace fieldquanta {

struct ModesOptions {
  int sites = 64;
  double length = 6.283185307179586;
};

struct RunConfig {
  /// Exactly one of builtin / spec_path.
  std::optional<std::string> builtin;
  std::optional<std::filesystem::path> spec_path;
  std::string format = "text";
  std::uint64_t seed = 0;
  TolerancePolicy tol;
  /// Lattice verification of the antiparticle prediction, off unless set.
  std::optional<ModesOptions> modes;
  std::optional<std::filesystem::path> out;

  /// Throws InvalidInput.
  void validate() const;
};

namespace cli {

/// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 failed
/// cross-module consistency check.
int exit_code(ErrorCode code);

/// FIELDQUANTA_SEED if set and numeric, else 0.
std::uint64_t default_seed();

/// Parses "M,L" (L optional, default 2 pi).
ModesOptions parse_modes(const std::string& text);

std::string version();

TheorySpec load_input(const RunConfig& cfg);

FieldReport classify_field(const FieldSpec& field, const RunConfig& cfg);
SpectrumReport classify(const TheorySpec& spec, const RunConfig& cfg);

/// Writes the rendered report to cfg.out or `out`; diagnostics go to `err`.
int classify_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int validate_command(const std::filesystem::path& spec, std::ostream& out, std::ostream& err);

/// so2-vs-so3, higgs, goldstone.
std::vector<std::string> demo_names();
int demo_command(const std::string& name, std::ostream& out, std::ostream& err);

/// The spec JSON of a built-in theory, to stdout or `out_path`.
int export_command(const std::string& builtin, const std::optional<std::filesystem::path>& out_path,
                   std::ostream& out, std::ostream& err);
/// One built-in name per line.
int builtins_command(std::ostream& out);

/// CSV of a seeded random real solution for one field of the input.
int modes_command(const RunConfig& cfg, const std::string& field, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace fieldquanta

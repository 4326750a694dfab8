#pragma once

// The classification report, schema "fieldquanta-report/1". Plain values
// only, so that parse(render(r)) == r holds exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fieldquanta {

using Rows = std::vector<std::vector<double>>;

struct DofCount {
  int classical = 0;        // four components per internal direction
  int after_constraint = 0; // Gauss law removes one
  int physical = 0;         // two polarizations
  int absorbed = 0;         // removed by gauge symmetry

  bool operator==(const DofCount&) const = default;
};

struct ModesCheck {
  int sites = 0;
  double length = 0.0;
  std::string dynamics;
  /// Absent when the representation is honestly real.
  std::optional<double> antiparticle_content;
  bool agrees_with_labels = false;

  bool operator==(const ModesCheck&) const = default;
};

struct FieldReport {
  std::string name;
  std::string kind;
  std::string statistics;
  std::string family;
  int multiplicity = 1;
  std::string group_label;
  int internal_dim = 0;
  int generator_count = 0;
  bool real_irreducible = false;
  std::string real_type;
  int commutant_dim = 1;
  bool quaternionic = false;
  /// The chosen complex structure; empty when honestly real.
  Rows complex_structure;
  std::string theorem_branch;
  double theorem_residual = 0.0;
  bool complexified_irreducible = false;
  /// Complex dimension of each of the particle and antiparticle sectors; 0 when honestly real.
  int sector_dim = 0;
  std::vector<std::string> labels;
  bool antiparticles = false;
  std::string antiparticle_reason;
  std::vector<double> masses_squared;
  int massless_count = 0;
  std::optional<DofCount> gauge_dof;
  std::optional<ModesCheck> modes;
  /// Acceptance checks backing this field's lines.
  std::vector<std::string> evidence;

  bool operator==(const FieldReport&) const = default;
};

struct BlockReport {
  int dim = 0;
  std::string real_type;
  bool trivial = false;
  /// Columns of the block basis, each written as a row here, in the
  /// coordinates of the vacuum field's symmetry algebra.
  Rows basis;

  bool operator==(const BlockReport&) const = default;
};

struct BreakingReport {
  std::string field;
  std::vector<double> phi0;
  std::vector<double> masses_squared;
  int goldstone_count = 0;
  int orbit_dim = 0;
  double finite_difference_agreement = 0.0;
  /// Generator names of the vacuum field, the basis for the coefficients below.
  std::vector<std::string> algebra_basis;
  /// One row per stabilizer element.
  Rows stabilizer_coefficients;
  double subalgebra_residual = 0.0;
  std::vector<BlockReport> residual_blocks;
  /// Shared factors acting trivially on the vacuum field.
  std::vector<std::string> unbroken_factors;
  int massive_vectors = 0;
  int physical_scalars = 0;

  bool operator==(const BreakingReport&) const = default;
};

struct CheckReport {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const CheckReport&) const = default;
};

struct Provenance {
  std::string tool_version;
  std::uint64_t seed = 0;
  double eps_rel = 0.0;
  double eps_rank = 0.0;

  bool operator==(const Provenance&) const = default;
};

struct SpectrumReport {
  std::string schema = "fieldquanta-report/1";
  std::string theory;
  std::vector<FieldReport> fields;
  /// Physical gauge degrees of freedom per gauge field, in field order.
  std::vector<int> gauge_physical_dof;
  int gauge_absorbed_dof = 0;
  std::optional<BreakingReport> breaking;
  std::vector<CheckReport> checks;
  Provenance provenance;

  bool operator==(const SpectrumReport&) const = default;
  bool all_checks_passed() const;
};

namespace report {

/// Pretty-printed JSON with sorted keys; byte-stable for equal reports.
std::string to_json(const SpectrumReport& r);
/// Throws ParseError.
SpectrumReport from_json(const std::string& text);
std::string to_text(const SpectrumReport& r);

}  // namespace report
}  // namespace fieldquanta

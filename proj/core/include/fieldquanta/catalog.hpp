#pragma once

// Field and theory descriptions: the built-in fixtures and the JSON spec
// format "fieldquanta-spec/1".

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fieldquanta/breaking.hpp"
#include "fieldquanta/discrete.hpp"
#include "fieldquanta/modes.hpp"

namespace fieldquanta {

enum class FieldKind { Scalar, WeylLeft, WeylRight, Majorana, Vector, GaugeVector };
enum class Statistics { Bose, Fermi };

std::string_view to_string(FieldKind kind);
std::string_view to_string(Statistics s);
FieldKind field_kind_from_string(std::string_view text);
Statistics statistics_from_string(std::string_view text);

/// One factor of the shared internal symmetry group, e.g. su(2).
struct SymmetryFactor {
  std::string name;
  int dim = 0;
  bool gauged = false;
};

struct FieldSpec {
  std::string name;
  FieldKind kind = FieldKind::Scalar;
  Statistics statistics = Statistics::Bose;
  /// Fields sharing a family are reported together (e.g. the three gauge fields).
  std::string family;
  /// Number of identical copies (generations). Metadata.
  int multiplicity = 1;
  DispersionKind dynamics = DispersionKind::Relativistic;
  double mass = 1.0;
  /// The purely internal action.
  RepData internal;
  /// Indices into internal.generators through which each shared factor acts.
  /// A factor missing from the map acts trivially.
  std::map<std::string, std::vector<int>> factor_actions;
  /// u(1) factor name -> charge. The charge is already folded into the
  /// generator; this is the record of it.
  std::map<std::string, double> charges;
  std::vector<DiscreteCandidate> discrete_candidates;
  std::optional<QuarticPotential> potential;
  /// For gauge fields: the factor whose connection this is.
  std::string gauges;
};

struct VacuumSpec {
  std::string field;
  RealVector phi0;
};

struct TheorySpec {
  std::string name;
  std::vector<SymmetryFactor> factors;
  std::vector<FieldSpec> fields;
  std::optional<VacuumSpec> vacuum;

  const FieldSpec* find(std::string_view field_name) const;
};

namespace catalog {

/// real-kg, complex-kg, kg-internal(N), weyl-l, weyl-r, dirac, majorana,
/// real-vector, complex-vector, gauge(su2), gauge(su3), schroedinger,
/// standard-model, higgs-sector. Throws UnknownName.
TheorySpec builtin(std::string_view name);

/// Names accepted by builtin(); kg-internal is listed as kg-internal(3).
std::vector<std::string> builtin_names();

/// Every violated invariant, each message prefixed with its location.
std::vector<std::string> check(const TheorySpec& spec, const TolerancePolicy& tol = {});
/// Throws ValidationError listing every message from check().
void validate(const TheorySpec& spec, const TolerancePolicy& tol = {});

/// Exact structural equality (matrices compared entrywise).
bool same(const TheorySpec& a, const TheorySpec& b);

std::string to_json(const TheorySpec& spec);
/// Throws ParseError for malformed JSON or shapes, with line or field path.
/// Does not run validate().
TheorySpec from_json(const std::string& text);

/// load parses and validates; save validates and writes.
TheorySpec load(const std::filesystem::path& path, const TolerancePolicy& tol = {});
void save(const TheorySpec& spec, const std::filesystem::path& path, const TolerancePolicy& tol = {});

/// Building blocks shared with tests and demos.
RealMatrix pauli_generator(int axis);            // realify(-i sigma_axis), axis 1..3
RealMatrix u1_generator(int complex_dim, double charge);  // realify(-i q 1)
std::vector<RealMatrix> so_generators(int n);    // E_ij - E_ji, i < j
std::vector<RealMatrix> su3_generators();        // realify(-i lambda_a), a = 1..8

}  // namespace catalog
}  // namespace fieldquanta

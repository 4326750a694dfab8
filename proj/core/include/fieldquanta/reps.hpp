#pragma once

// Real representations of Lie algebras: commutants, invariant metrics,
// real-irreducibility and the honestly-real / secretly-complex split.

#include <optional>
#include <string>
#include <vector>

#include "fieldquanta/kernel.hpp"

namespace fieldquanta {

/// A real representation given by Lie-algebra generators acting on R^dim.
/// An empty generator list is the trivial group.
struct RepData {
  int dim = 0;
  std::vector<RealMatrix> generators;
  std::string group_label;
  /// Charge multiplying the u(1) generator, when the group has one.
  std::optional<double> charge;
  /// Optional per-generator names such as "su(2):z"; empty or one per generator.
  std::vector<std::string> generator_names;
};

struct InvariantMetric {
  RealMatrix h;
};

struct ComplexStructure {
  RealMatrix J;
};

enum class RealKind { HonestlyReal, SecretlyComplex };

std::string_view to_string(RealKind kind);

struct RealType {
  RealKind tag = RealKind::HonestlyReal;
  std::optional<ComplexStructure> J;
  /// Commutant of dimension 4: J exists but is not unique.
  bool quaternionic = false;
  int commutant_dim = 1;
};

namespace reps {

/// Lists every violated RepData invariant (shape, finiteness, closure under
/// commutator). Empty means valid.
std::vector<std::string> check(const RepData& rep, const TolerancePolicy& tol = {});

/// Throws ValidationError carrying every message from check().
void validate(const RepData& rep, const TolerancePolicy& tol = {});

/// Basis of {C : [C, X] = 0 for every generator X}, orthonormal in the
/// Frobenius inner product.
std::vector<RealMatrix> commutant(const RepData& rep, const TolerancePolicy& tol = {});

/// Symmetric positive-definite h with X^T h + h X = 0 for all generators,
/// the solution closest to the identity, normalized to trace = dim.
/// Throws NoPositiveSolution when the action admits no invariant inner product.
InvariantMetric find_invariant_metric(const RepData& rep, const TolerancePolicy& tol = {},
                                      std::uint64_t seed = 0);

/// True iff the action has no proper nonzero invariant subspace.
bool is_real_irreducible(const RepData& rep, const TolerancePolicy& tol = {},
                         std::uint64_t seed = 0);

/// A J with J^2 = -I commuting with the action, or nothing when the
/// commutant is one-dimensional. Sign convention: the first nonzero entry of
/// row 0 is negative.
std::optional<ComplexStructure> find_complex_structure(const RepData& rep,
                                                       const TolerancePolicy& tol = {},
                                                       std::uint64_t seed = 0);

RealType real_type(const RepData& rep, const TolerancePolicy& tol = {}, std::uint64_t seed = 0);

/// Residual checks for a candidate complex structure against a representation.
double complex_structure_residual(const RealMatrix& j);
double commutation_residual(const RealMatrix& j, const RepData& rep);

/// Realification of a complex matrix: z = x + iy is laid out as
/// (x_0, y_0, x_1, y_1, ...), so multiplication by i becomes blocks [[0,-1],[1,0]].
RealMatrix realify(const ComplexMatrix& m);

/// The same change of basis applied to every generator: X -> S X S^-1.
RepData conjugate(const RepData& rep, const RealMatrix& s);

/// Restriction of the generators to an invariant subspace with basis columns B
/// (returns B^+ X B).
RepData restrict_to(const RepData& rep, const RealMatrix& basis);

/// Matrices of ad(X_i) on span(generators) in the generator basis.
/// Requires linearly independent generators.
std::vector<RealMatrix> adjoint_action(const std::vector<RealMatrix>& generators,
                                       const TolerancePolicy& tol = {});

/// Coefficients of m in span(generators) (least squares) and the residual norm.
struct SpanFit {
  RealVector coefficients;
  double residual = 0.0;
};
SpanFit fit_in_span(const std::vector<RealMatrix>& generators, const RealMatrix& m);

/// Basis of intertwiners T with T A_i = B_i T, returned as matrices.
std::vector<RealMatrix> intertwiners(const std::vector<RealMatrix>& a,
                                     const std::vector<RealMatrix>& b,
                                     const TolerancePolicy& tol = {});

/// An invertible intertwiner between two representations, if one exists
/// among seeded random combinations of the intertwiner basis.
std::optional<RealMatrix> find_equivalence(const std::vector<RealMatrix>& a,
                                           const std::vector<RealMatrix>& b,
                                           const TolerancePolicy& tol = {},
                                           std::uint64_t seed = 0);

}  // namespace reps
}  // namespace fieldquanta

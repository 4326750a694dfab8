#pragma once

// Spontaneous symmetry breaking for V(phi) = alpha <phi,phi> + beta <phi,phi>^2.

#include <optional>
#include <vector>

#include "fieldquanta/reps.hpp"

namespace fieldquanta {

struct QuarticPotential {
  double alpha = 0.0;
  double beta = 1.0;
  int dim = 0;
  InvariantMetric metric;

  /// Throws InvalidInput unless beta > 0 and the metric is dim x dim.
  void validate() const;
  double value(const RealVector& phi) const;
  RealVector gradient(const RealVector& phi) const;
  /// Analytic second-derivative matrix.
  RealMatrix hessian(const RealVector& phi) const;
};

/// Identity-metric potential on R^dim.
QuarticPotential make_quartic(double alpha, double beta, int dim);

struct VacuumSolution {
  RealVector phi0;
  double orbit_radius = 0.0;
  /// The minimum is a continuous (or, for dim 1, discrete) family.
  bool degenerate = false;
};

struct MassSpectrum {
  /// Ascending; eigenvalues of the Hessian relative to the kinetic metric h.
  std::vector<double> masses_squared;
  int massless_count = 0;
  /// max |analytic - finite difference| / max(1, ||analytic||).
  double finite_difference_agreement = 0.0;
};

struct StabilizerAlgebra {
  std::vector<RealMatrix> basis;
  /// Column c holds the coefficients of basis[c] over the input generators.
  RealMatrix coefficients;
};

struct InvariantBlock {
  /// Columns span the block.
  RealMatrix basis;
  int dim = 0;
  RealType type;
  /// All stabilizer elements act as zero on the block.
  bool trivial = false;
};

namespace breaking {

/// For alpha >= 0 the origin; for alpha < 0 the representative
/// (r, 0, ..., 0) of the orbit <phi,phi> = -alpha / (2 beta).
/// With strict = true, alpha = 0 throws DegenerateQuartic.
VacuumSolution minimize(const QuarticPotential& p, bool strict = false);

/// Central second differences of V, step 1e-4 * max(1, ||phi||).
RealMatrix finite_difference_hessian(const QuarticPotential& p, const RealVector& phi);

/// Throws NotAMinimum for any eigenvalue below -eps_rank.
MassSpectrum hessian_spectrum(const QuarticPotential& p, const VacuumSolution& v,
                              const TolerancePolicy& tol = {});

/// {X in span(generators) : X phi0 = 0}.
StabilizerAlgebra stabilizer(const RepData& rep, const RealVector& phi0,
                             const TolerancePolicy& tol = {});

/// dim span{X phi0}: the number of Goldstone directions.
int orbit_dimension(const RepData& rep, const RealVector& phi0, const TolerancePolicy& tol = {});

/// Residual check of closure of the stabilizer under commutators.
double subalgebra_residual(const StabilizerAlgebra& stab);

/// Split the target space into blocks irreducible under the stabilizer.
/// target.generators are the matrices by which the stabilizer basis acts on
/// the target space (one per stabilizer basis element). Blocks are
/// orthogonal with respect to the target's invariant metric.
std::vector<InvariantBlock> residual_decompose(const StabilizerAlgebra& stab, const RepData& target,
                                               const TolerancePolicy& tol = {},
                                               std::uint64_t seed = 0);

}  // namespace breaking
}  // namespace fieldquanta

#pragma once

// Dense linear algebra used by every analysis module. All numeric decisions
// (rank, equality, commutation) go through a single TolerancePolicy.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "fieldquanta/errors.hpp"

namespace fieldquanta {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

struct TolerancePolicy {
  /// Relative tolerance for equalities and commutation residuals.
  double eps_rel = 1e-9;
  /// Rank cut, relative to the operator norm of the matrix being ranked.
  double eps_rank = 1e-8;

  /// Throws InvalidInput unless both tolerances are strictly positive.
  void validate() const;
};

namespace kernel {

/// Orthonormal basis of ker(M), one vector per column. A column count of
/// zero means M has full column rank.
RealMatrix nullspace(const RealMatrix& m, const TolerancePolicy& tol = {});
ComplexMatrix nullspace(const ComplexMatrix& m, const TolerancePolicy& tol = {});

/// Same, but singular values are cut at eps_rank * scale instead of
/// eps_rank * ||M||. Used when M is a small perturbation of a known-size matrix.
RealMatrix nullspace_scaled(const RealMatrix& m, double scale, const TolerancePolicy& tol = {});
ComplexMatrix nullspace_scaled(const ComplexMatrix& m, double scale, const TolerancePolicy& tol = {});

std::size_t rank(const RealMatrix& m, const TolerancePolicy& tol = {});
std::size_t rank(const ComplexMatrix& m, const TolerancePolicy& tol = {});

/// Largest singular value.
double op_norm(const RealMatrix& m);
double op_norm(const ComplexMatrix& m);

struct SymmetricEigen {
  RealVector values;   // ascending
  RealMatrix vectors;  // orthonormal columns
};

struct GeneralEigen {
  ComplexVector values;
  ComplexMatrix vectors;
};

/// Symmetric path: real spectrum sorted ascending, orthonormal eigenvectors.
/// Rejects matrices with ||M - M^T|| > eps_rel * ||M||.
SymmetricEigen eig_symmetric(const RealMatrix& m, const TolerancePolicy& tol = {});

/// General path: complex spectrum, closed under conjugation for real input.
/// Eigenvalues are ordered by (real part, imaginary part).
GeneralEigen eig_general(const RealMatrix& m);

/// exp(tX) by scaling and squaring with a truncated Taylor series.
RealMatrix expm(const RealMatrix& x, double t = 1.0);
ComplexMatrix expm(const ComplexMatrix& x, double t = 1.0);

/// Column-major vectorization helpers used for Sylvester-type systems.
RealVector vec(const RealMatrix& m);
RealMatrix unvec(const RealVector& v, Eigen::Index rows, Eigen::Index cols);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols);

/// Matrix of the linear map C -> [X, C] = XC - CX acting on vec(C).
RealMatrix commutator_operator(const RealMatrix& x);
ComplexMatrix commutator_operator(const ComplexMatrix& x);

void require_finite(const RealMatrix& m, const char* what);
void require_finite(const ComplexMatrix& m, const char* what);
void require_square(Eigen::Index rows, Eigen::Index cols, const char* what);

/// Seeded generator with a platform-independent uniform conversion, so that
/// seeded draws are identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double normal();

  RealMatrix matrix(Eigen::Index rows, Eigen::Index cols);
  RealVector vector(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace kernel
}  // namespace fieldquanta

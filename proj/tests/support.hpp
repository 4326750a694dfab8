#pragma once

// Seeded generators and independent oracles shared by the test binaries.
// Oracles deliberately avoid the library's own routines: ranks come from
// FullPivLU instead of the SVD used in the kernel, series come from explicit
// summation, and so on.

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "fieldquanta/catalog.hpp"
#include "fieldquanta/kernel.hpp"

namespace fqtest {

using fieldquanta::ComplexMatrix;
using fieldquanta::RealMatrix;
using fieldquanta::RealVector;
using fieldquanta::RepData;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

/// Rank by full-pivot LU with a threshold relative to the largest pivot.
inline int lu_rank(const RealMatrix& m, double threshold = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<RealMatrix> lu(m);
  lu.setThreshold(threshold);
  return static_cast<int>(lu.rank());
}

inline int lu_rank(const ComplexMatrix& m, double threshold = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<ComplexMatrix> lu(m);
  lu.setThreshold(threshold);
  return static_cast<int>(lu.rank());
}

/// Kronecker product, written out entry by entry.
template <typename M>
M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// dim {C : CX = XC for all X}, from the stacked system (I (x) X - X^T (x) I) vec(C) = 0.
template <typename M>
int commutant_dim_oracle(const std::vector<M>& ops, int n) {
  if (ops.empty()) return n * n;
  const M id = M::Identity(n, n);
  M stacked(static_cast<Eigen::Index>(ops.size()) * n * n, n * n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    stacked.block(static_cast<Eigen::Index>(i) * n * n, 0, n * n, n * n) =
        kron<M>(id, ops[i]) - kron<M>(ops[i].transpose(), id);
  }
  return n * n - lu_rank(stacked);
}

/// Truncated exponential series, summed term by term.
inline RealMatrix exp_series(const RealMatrix& x, double t, int terms = 30) {
  RealMatrix sum = RealMatrix::Identity(x.rows(), x.cols());
  RealMatrix term = sum;
  for (int k = 1; k < terms; ++k) {
    term = term * (t * x) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

/// I + 0.3 * (uniform noise): well conditioned and generic.
inline RealMatrix random_invertible(fieldquanta::kernel::SeededRng& rng, int n) {
  RealMatrix s = RealMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) += 0.3 * rng.uniform(-1.0, 1.0);
  }
  return s;
}

inline RealMatrix random_orthogonal(fieldquanta::kernel::SeededRng& rng, int n) {
  Eigen::HouseholderQR<RealMatrix> qr(rng.matrix(n, n));
  return qr.householderQ() * RealMatrix::Identity(n, n);
}

inline RealMatrix random_symmetric(fieldquanta::kernel::SeededRng& rng, int n) {
  const RealMatrix a = rng.matrix(n, n);
  return (a + a.transpose()) / 2.0;
}

/// A named representation drawn from the built-in catalog.
struct NamedRep {
  std::string name;
  RepData rep;
};

/// Every internal representation of every builtin theory, deduplicated by
/// (theory, field), plus kg-internal(N) for several N.
inline std::vector<NamedRep> catalog_reps() {
  std::vector<NamedRep> out;
  auto names = fieldquanta::catalog::builtin_names();
  for (const char* extra : {"kg-internal(2)", "kg-internal(4)", "kg-internal(5)"}) names.emplace_back(extra);
  for (const auto& theory : names) {
    const auto spec = fieldquanta::catalog::builtin(theory);
    for (const auto& f : spec.fields) out.push_back({theory + "/" + f.name, f.internal});
  }
  return out;
}

inline RepData make_rep(int dim, std::vector<RealMatrix> gens, std::string label = {}) {
  RepData r;
  r.dim = dim;
  r.generators = std::move(gens);
  r.group_label = std::move(label);
  return r;
}

inline RealMatrix rotation_k() {
  RealMatrix k(2, 2);
  k << 0, -1, 1, 0;
  return k;
}

/// so(2) on R^2 and so(3) on R^3 in their standard form.
inline RepData so2() { return make_rep(2, {rotation_k()}, "so(2)"); }
inline RepData so3() { return make_rep(3, fieldquanta::catalog::so_generators(3), "so(3)"); }

}  // namespace fqtest

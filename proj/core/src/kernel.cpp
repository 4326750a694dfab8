#include "fieldquanta/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fieldquanta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NoPositiveSolution: return "NoPositiveSolution";
    case ErrorCode::IrreducibilityViolated: return "IrreducibilityViolated";
    case ErrorCode::NotSecretlyComplex: return "NotSecretlyComplex";
    case ErrorCode::NeitherCommutesNorAnticommutes: return "NeitherCommutesNorAnticommutes";
    case ErrorCode::DegenerateQuartic: return "DegenerateQuartic";
    case ErrorCode::NotAMinimum: return "NotAMinimum";
    case ErrorCode::ZeroModeSingular: return "ZeroModeSingular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Inconsistency: return "Inconsistency";
  }
  return "Unknown";
}

void TolerancePolicy::validate() const {
  if (!(eps_rel > 0.0) || !(eps_rank > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "tolerances must be strictly positive");
  }
}

namespace kernel {
namespace {

template <typename Matrix>
Matrix nullspace_impl(const Matrix& m, const TolerancePolicy& tol, double scale = -1.0) {
  require_finite(m, "nullspace input");
  const Eigen::Index cols = m.cols();
  if (cols == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(cols, cols);

  // Reduce tall systems to a square triangular factor first; the singular
  // values of R equal those of M.
  Matrix reduced = m;
  if (m.rows() > cols) {
    Eigen::HouseholderQR<Matrix> qr(m);
    reduced = qr.matrixQR().topRows(cols).template triangularView<Eigen::Upper>();
  }
  Eigen::JacobiSVD<Matrix> svd(reduced, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = tol.eps_rank * (scale >= 0.0 ? scale : largest);
  Eigen::Index numeric_rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut && sv(i) > 0.0) ++numeric_rank;
  }
  return svd.matrixV().rightCols(cols - numeric_rank);
}

template <typename Matrix>
std::size_t rank_impl(const Matrix& m, const TolerancePolicy& tol) {
  if (m.size() == 0) return 0;
  return static_cast<std::size_t>(m.cols() - nullspace_impl(m, tol).cols());
}

template <typename Matrix>
Matrix expm_impl(const Matrix& x, double t) {
  require_square(x.rows(), x.cols(), "expm");
  require_finite(x, "expm input");
  const Eigen::Index n = x.rows();
  Matrix a = x * t;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  a /= std::ldexp(1.0, squarings);

  // ||a||_1 <= 1/2: 20 terms leave a truncation error below 0.5^21 / 21!.
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

template <typename Matrix>
Matrix commutator_operator_impl(const Matrix& x) {
  require_square(x.rows(), x.cols(), "commutator operator");
  const Eigen::Index n = x.rows();
  // vec(XC) = (I kron X) vec(C), vec(CX) = (X^T kron I) vec(C).
  Matrix op = Matrix::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    op.block(j * n, j * n, n, n) += x;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // (X^T kron I) block (j, i) = X(i, j) * I
      const auto coeff = x(i, j);
      if (coeff == typename Matrix::Scalar(0)) continue;
      for (Eigen::Index r = 0; r < n; ++r) op(j * n + r, i * n + r) -= coeff;
    }
  }
  return op;
}

}  // namespace

RealMatrix nullspace(const RealMatrix& m, const TolerancePolicy& tol) { return nullspace_impl(m, tol); }
ComplexMatrix nullspace(const ComplexMatrix& m, const TolerancePolicy& tol) { return nullspace_impl(m, tol); }

RealMatrix nullspace_scaled(const RealMatrix& m, double scale, const TolerancePolicy& tol) {
  return nullspace_impl(m, tol, scale);
}
ComplexMatrix nullspace_scaled(const ComplexMatrix& m, double scale, const TolerancePolicy& tol) {
  return nullspace_impl(m, tol, scale);
}

std::size_t rank(const RealMatrix& m, const TolerancePolicy& tol) { return rank_impl(m, tol); }
std::size_t rank(const ComplexMatrix& m, const TolerancePolicy& tol) { return rank_impl(m, tol); }

double op_norm(const RealMatrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<RealMatrix>(m).singularValues()(0);
}

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

SymmetricEigen eig_symmetric(const RealMatrix& m, const TolerancePolicy& tol) {
  require_square(m.rows(), m.cols(), "eig_symmetric");
  require_finite(m, "eig_symmetric input");
  const double asym = (m - m.transpose()).norm();
  if (asym > tol.eps_rel * std::max(m.norm(), 1e-300)) {
    throw Error(ErrorCode::InvalidInput, "eig_symmetric: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(0.5 * (m + m.transpose()));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

GeneralEigen eig_general(const RealMatrix& m) {
  require_square(m.rows(), m.cols(), "eig_general");
  require_finite(m, "eig_general input");
  Eigen::EigenSolver<RealMatrix> solver(m);
  ComplexVector values = solver.eigenvalues();
  ComplexMatrix vectors = solver.eigenvectors();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values(a).real() != values(b).real()) return values(a).real() < values(b).real();
    return values(a).imag() < values(b).imag();
  });
  GeneralEigen out{ComplexVector(values.size()), ComplexMatrix(vectors.rows(), vectors.cols())};
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.values(static_cast<Eigen::Index>(i)) = values(order[i]);
    out.vectors.col(static_cast<Eigen::Index>(i)) = vectors.col(order[i]);
  }
  return out;
}

RealMatrix expm(const RealMatrix& x, double t) { return expm_impl(x, t); }
ComplexMatrix expm(const ComplexMatrix& x, double t) { return expm_impl(x, t); }

RealVector vec(const RealMatrix& m) {
  return Eigen::Map<const RealVector>(m.data(), m.size());
}

RealMatrix unvec(const RealVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "unvec size");
  return Eigen::Map<const RealMatrix>(v.data(), rows, cols);
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "unvec size");
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

RealMatrix commutator_operator(const RealMatrix& x) { return commutator_operator_impl(x); }
ComplexMatrix commutator_operator(const ComplexMatrix& x) { return commutator_operator_impl(x); }

void require_finite(const RealMatrix& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorCode::InvalidInput, std::string(what) + " has non-finite entries");
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorCode::InvalidInput, std::string(what) + " has non-finite entries");
}

void require_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols || rows == 0) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + ": expected a non-empty square matrix");
  }
}

SeededRng::SeededRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededRng::next_u64() { return engine_(); }

double SeededRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SeededRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

RealMatrix SeededRng::matrix(Eigen::Index rows, Eigen::Index cols) {
  RealMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal();
  return m;
}

RealVector SeededRng::vector(Eigen::Index n) {
  RealVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal();
  return v;
}

}  // namespace kernel
}  // namespace fieldquanta

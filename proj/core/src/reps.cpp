#include "fieldquanta/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fieldquanta {

std::string_view to_string(RealKind kind) {
  return kind == RealKind::HonestlyReal ? "HonestlyReal" : "SecretlyComplex";
}

namespace reps {
namespace {

std::string generator_label(const RepData& rep, std::size_t i) {
  std::ostringstream out;
  out << i;
  if (i < rep.generator_names.size() && !rep.generator_names[i].empty()) {
    out << " (" << rep.generator_names[i] << ")";
  }
  return out.str();
}

RealMatrix stacked_commutator_system(const std::vector<RealMatrix>& generators, Eigen::Index n) {
  RealMatrix system(static_cast<Eigen::Index>(generators.size()) * n * n, n * n);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    system.middleRows(static_cast<Eigen::Index>(i) * n * n, n * n) =
        kernel::commutator_operator(generators[i]);
  }
  return system;
}

bool is_positive_definite(const RealMatrix& h, const TolerancePolicy& tol) {
  const auto spectrum = kernel::eig_symmetric(0.5 * (h + h.transpose()), tol);
  const double top = spectrum.values.cwiseAbs().maxCoeff();
  return spectrum.values.minCoeff() > tol.eps_rank * top;
}

// Symmetric matrices with a Frobenius-orthonormal parametrization:
// E_ii and (E_ij + E_ji)/sqrt(2).
std::vector<RealMatrix> symmetric_basis(Eigen::Index n) {
  std::vector<RealMatrix> basis;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      RealMatrix s = RealMatrix::Zero(n, n);
      if (i == j) {
        s(i, i) = 1.0;
      } else {
        s(i, j) = s(j, i) = 1.0 / std::sqrt(2.0);
      }
      basis.push_back(std::move(s));
    }
  }
  return basis;
}

// A proper eigenspace of a commutant element is an invariant subspace.
// `reference` is the size against which a is judged to be zero; the
// self-adjoint part of an antisymmetric element is pure rounding noise.
bool has_proper_real_eigenspace(const RealMatrix& a, const TolerancePolicy& tol, double reference = -1.0) {
  const Eigen::Index n = a.rows();
  const double scale = reference >= 0.0 ? std::max(reference, kernel::op_norm(a)) : kernel::op_norm(a);
  if (scale == 0.0) return false;
  const RealMatrix traceless = a - (a.trace() / static_cast<double>(n)) * RealMatrix::Identity(n, n);
  if (kernel::op_norm(traceless) <= tol.eps_rank * scale) return false;

  const auto spectrum = kernel::eig_general(a);
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    const Complex lambda = spectrum.values(i);
    if (std::abs(lambda.imag()) > std::sqrt(tol.eps_rel) * scale) continue;
    const RealMatrix shifted = a - lambda.real() * RealMatrix::Identity(n, n);
    const auto kernel_dim = kernel::nullspace_scaled(shifted, scale, tol).cols();
    if (kernel_dim > 0 && kernel_dim < n) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> check(const RepData& rep, const TolerancePolicy& tol) {
  std::vector<std::string> problems;
  if (rep.dim <= 0) {
    problems.push_back("dim must be a positive integer");
    return problems;
  }
  if (!rep.generator_names.empty() && rep.generator_names.size() != rep.generators.size()) {
    problems.push_back("generator_names must be empty or name every generator");
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    const auto& x = rep.generators[i];
    if (x.rows() != rep.dim || x.cols() != rep.dim) {
      std::ostringstream msg;
      msg << "generator " << generator_label(rep, i) << " is " << x.rows() << "x" << x.cols()
          << ", expected " << rep.dim << "x" << rep.dim;
      problems.push_back(msg.str());
      shapes_ok = false;
    } else if (!x.allFinite()) {
      problems.push_back("generator " + generator_label(rep, i) + " has non-finite entries");
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return problems;

  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.generators.size(); ++j) {
      const auto& a = rep.generators[i];
      const auto& b = rep.generators[j];
      const RealMatrix bracket = a * b - b * a;
      const auto fit = fit_in_span(rep.generators, bracket);
      const double scale = std::max(a.norm() * b.norm(), 1.0);
      if (fit.residual > tol.eps_rel * scale) {
        std::ostringstream msg;
        msg << "commutator of generators " << generator_label(rep, i) << " and "
            << generator_label(rep, j) << " is not in their span (residual " << fit.residual << ")";
        problems.push_back(msg.str());
      }
    }
  }
  return problems;
}

void validate(const RepData& rep, const TolerancePolicy& tol) {
  const auto problems = check(rep, tol);
  if (problems.empty()) return;
  std::ostringstream msg;
  msg << "representation '" << rep.group_label << "' is invalid:";
  for (const auto& p : problems) msg << "\n  - " << p;
  throw Error(ErrorCode::ValidationError, msg.str());
}

std::vector<RealMatrix> commutant(const RepData& rep, const TolerancePolicy& tol) {
  const Eigen::Index n = rep.dim;
  const RealMatrix basis = kernel::nullspace(stacked_commutator_system(rep.generators, n), tol);
  std::vector<RealMatrix> out;
  out.reserve(static_cast<std::size_t>(basis.cols()));
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    out.push_back(kernel::unvec(RealVector(basis.col(c)), n, n));
  }
  return out;
}

InvariantMetric find_invariant_metric(const RepData& rep, const TolerancePolicy& tol,
                                      std::uint64_t seed) {
  const Eigen::Index n = rep.dim;
  const auto sym = symmetric_basis(n);
  const auto params = static_cast<Eigen::Index>(sym.size());

  RealMatrix system(static_cast<Eigen::Index>(rep.generators.size()) * n * n, params);
  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    const auto& x = rep.generators[g];
    for (Eigen::Index p = 0; p < params; ++p) {
      const RealMatrix image = x.transpose() * sym[static_cast<std::size_t>(p)] +
                               sym[static_cast<std::size_t>(p)] * x;
      system.block(static_cast<Eigen::Index>(g) * n * n, p, n * n, 1) = kernel::vec(image);
    }
  }
  const RealMatrix coeffs = kernel::nullspace(system, tol);
  if (coeffs.cols() == 0) {
    throw Error(ErrorCode::NoPositiveSolution, "no nonzero invariant symmetric form exists");
  }

  std::vector<RealMatrix> solutions;
  for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
    RealMatrix h = RealMatrix::Zero(n, n);
    for (Eigen::Index p = 0; p < params; ++p) h += coeffs(p, c) * sym[static_cast<std::size_t>(p)];
    solutions.push_back(std::move(h));
  }

  auto normalized = [n](RealMatrix h) {
    h = 0.5 * (h + h.transpose());
    return RealMatrix(h * (static_cast<double>(n) / h.trace()));
  };

  // Orthogonal projection of the identity onto the solution space.
  RealMatrix h = RealMatrix::Zero(n, n);
  for (const auto& s : solutions) h += s.trace() * s;
  if (h.trace() > 0.0) {
    RealMatrix candidate = normalized(h);
    if (is_positive_definite(candidate, tol)) return {candidate};
  }

  // Projection of I is indefinite: search seeded combinations for a positive one,
  // keeping the one nearest to I.
  kernel::SeededRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::optional<RealMatrix> best;
  double best_distance = 0.0;
  const RealMatrix identity = RealMatrix::Identity(n, n);
  for (int trial = 0; trial < 256; ++trial) {
    RealMatrix combo = RealMatrix::Zero(n, n);
    for (const auto& s : solutions) combo += rng.normal() * s;
    if (std::abs(combo.trace()) <= tol.eps_rank * combo.norm()) continue;
    RealMatrix candidate = normalized(combo);
    if (!is_positive_definite(candidate, tol)) continue;
    const double distance = (candidate - identity).norm();
    if (!best || distance < best_distance) {
      best = candidate;
      best_distance = distance;
    }
  }
  if (!best) {
    throw Error(ErrorCode::NoPositiveSolution,
                "invariant symmetric forms exist but none is positive definite (non-compact action)");
  }
  return {*best};
}

bool is_real_irreducible(const RepData& rep, const TolerancePolicy& tol, std::uint64_t seed) {
  if (rep.dim == 1) return true;
  const auto basis = commutant(rep, tol);
  if (basis.size() == 1) return true;

  std::optional<RealMatrix> h;
  try {
    h = find_invariant_metric(rep, tol, seed).h;
  } catch (const Error&) {
    h.reset();
  }
  std::optional<RealMatrix> h_inv;
  if (h) h_inv = h->inverse();

  auto reducible_witness = [&](const RealMatrix& a) {
    if (has_proper_real_eigenspace(a, tol)) return true;
    if (h) {
      // The h-self-adjoint part also commutes and has a real spectrum.
      const RealMatrix self_adjoint = 0.5 * (a + (*h_inv) * a.transpose() * (*h));
      if (has_proper_real_eigenspace(self_adjoint, tol, kernel::op_norm(a))) return true;
    }
    return false;
  };

  for (const auto& c : basis) {
    if (reducible_witness(c)) return false;
  }
  kernel::SeededRng rng(seed);
  for (int trial = 0; trial < 8; ++trial) {
    RealMatrix combo = RealMatrix::Zero(rep.dim, rep.dim);
    for (const auto& c : basis) combo += rng.normal() * c;
    if (reducible_witness(combo)) return false;
  }
  return true;
}

double complex_structure_residual(const RealMatrix& j) {
  return (j * j + RealMatrix::Identity(j.rows(), j.cols())).norm();
}

double commutation_residual(const RealMatrix& j, const RepData& rep) {
  double worst = 0.0;
  for (const auto& x : rep.generators) {
    const double scale = std::max(x.norm(), 1e-300);
    worst = std::max(worst, (j * x - x * j).norm() / scale);
  }
  return worst;
}

std::optional<ComplexStructure> find_complex_structure(const RepData& rep,
                                                       const TolerancePolicy& tol,
                                                       std::uint64_t seed) {
  if (!is_real_irreducible(rep, tol, seed)) {
    throw Error(ErrorCode::IrreducibilityViolated,
                "representation '" + rep.group_label + "' is not real-irreducible");
  }
  const auto basis = commutant(rep, tol);
  if (basis.size() <= 1) return std::nullopt;

  const Eigen::Index n = rep.dim;
  const RealMatrix identity = RealMatrix::Identity(n, n);

  auto try_candidate = [&](const RealMatrix& k) -> std::optional<RealMatrix> {
    const RealMatrix traceless = k - (k.trace() / static_cast<double>(n)) * identity;
    if (traceless.norm() <= tol.eps_rank * std::max(k.norm(), 1e-300)) return std::nullopt;
    const RealMatrix square = traceless * traceless;
    const double lambda = square.trace() / static_cast<double>(n);
    if (!(lambda < 0.0)) return std::nullopt;
    if ((square - lambda * identity).norm() > tol.eps_rel * static_cast<double>(n) * std::abs(lambda)) {
      return std::nullopt;
    }
    return RealMatrix(traceless / std::sqrt(-lambda));
  };

  std::optional<RealMatrix> j;
  for (const auto& k : basis) {
    j = try_candidate(k);
    if (j) break;
  }
  if (!j) {
    kernel::SeededRng rng(seed ^ 0x5bd1e995ULL);
    for (int trial = 0; trial < 16 && !j; ++trial) {
      RealMatrix combo = RealMatrix::Zero(n, n);
      for (const auto& k : basis) combo += rng.normal() * k;
      j = try_candidate(combo);
    }
  }
  if (!j) {
    throw Error(ErrorCode::Inconsistency,
                "commutant has dimension > 1 but no element squares to a negative scalar");
  }

  const double cut = tol.eps_rank * j->norm();
  for (Eigen::Index c = 0; c < n; ++c) {
    const double entry = (*j)(0, c);
    if (std::abs(entry) > cut) {
      if (entry > 0.0) *j = -*j;
      break;
    }
  }

  if (complex_structure_residual(*j) > tol.eps_rel * static_cast<double>(n) ||
      commutation_residual(*j, rep) > tol.eps_rel) {
    throw Error(ErrorCode::Inconsistency, "extracted complex structure fails its invariants");
  }
  return ComplexStructure{*j};
}

RealType real_type(const RepData& rep, const TolerancePolicy& tol, std::uint64_t seed) {
  if (!is_real_irreducible(rep, tol, seed)) {
    throw Error(ErrorCode::IrreducibilityViolated,
                "representation '" + rep.group_label + "' is not real-irreducible");
  }
  const auto dim = static_cast<int>(commutant(rep, tol).size());
  if (dim != 1 && dim != 2 && dim != 4) {
    throw Error(ErrorCode::Inconsistency,
                "commutant of an irreducible representation has dimension " + std::to_string(dim));
  }
  RealType out;
  out.commutant_dim = dim;
  out.quaternionic = dim == 4;
  out.J = find_complex_structure(rep, tol, seed);
  out.tag = out.J ? RealKind::SecretlyComplex : RealKind::HonestlyReal;
  return out;
}

RealMatrix realify(const ComplexMatrix& m) {
  RealMatrix out(2 * m.rows(), 2 * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      out(2 * i, 2 * j) = z.real();
      out(2 * i, 2 * j + 1) = -z.imag();
      out(2 * i + 1, 2 * j) = z.imag();
      out(2 * i + 1, 2 * j + 1) = z.real();
    }
  }
  return out;
}

RepData conjugate(const RepData& rep, const RealMatrix& s) {
  const RealMatrix s_inv = s.inverse();
  RepData out = rep;
  for (auto& x : out.generators) x = s * x * s_inv;
  return out;
}

RepData restrict_to(const RepData& rep, const RealMatrix& basis) {
  const RealMatrix pinv = basis.completeOrthogonalDecomposition().pseudoInverse();
  RepData out = rep;
  out.dim = static_cast<int>(basis.cols());
  for (auto& x : out.generators) x = pinv * x * basis;
  return out;
}

SpanFit fit_in_span(const std::vector<RealMatrix>& generators, const RealMatrix& m) {
  SpanFit out;
  if (generators.empty()) {
    out.coefficients = RealVector(0);
    out.residual = m.norm();
    return out;
  }
  RealMatrix stacked(m.size(), static_cast<Eigen::Index>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    stacked.col(static_cast<Eigen::Index>(i)) = kernel::vec(generators[i]);
  }
  const RealVector target = kernel::vec(m);
  out.coefficients = stacked.completeOrthogonalDecomposition().solve(target);
  out.residual = (stacked * out.coefficients - target).norm();
  return out;
}

std::vector<RealMatrix> adjoint_action(const std::vector<RealMatrix>& generators,
                                       const TolerancePolicy& tol) {
  const auto k = static_cast<Eigen::Index>(generators.size());
  if (k == 0) return {};
  RealMatrix stacked(generators.front().size(), k);
  for (Eigen::Index i = 0; i < k; ++i) stacked.col(i) = kernel::vec(generators[static_cast<std::size_t>(i)]);
  if (static_cast<Eigen::Index>(kernel::rank(stacked, tol)) != k) {
    throw Error(ErrorCode::InvalidInput, "adjoint_action needs linearly independent generators");
  }
  std::vector<RealMatrix> out;
  for (Eigen::Index i = 0; i < k; ++i) {
    RealMatrix ad(k, k);
    const auto& a = generators[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto& b = generators[static_cast<std::size_t>(j)];
      const auto fit = fit_in_span(generators, a * b - b * a);
      if (fit.residual > tol.eps_rel * std::max(a.norm() * b.norm(), 1.0)) {
        throw Error(ErrorCode::InvalidInput, "generators are not closed under commutator");
      }
      ad.col(j) = fit.coefficients;
    }
    out.push_back(std::move(ad));
  }
  return out;
}

std::vector<RealMatrix> intertwiners(const std::vector<RealMatrix>& a,
                                     const std::vector<RealMatrix>& b,
                                     const TolerancePolicy& tol) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "intertwiners need equally many generators");
  }
  const Eigen::Index na = a.front().rows();
  const Eigen::Index nb = b.front().rows();
  // T is nb x na; vec(T A) = (A^T kron I_nb) vec T, vec(B T) = (I_na kron B) vec T.
  RealMatrix system(static_cast<Eigen::Index>(a.size()) * nb * na, nb * na);
  for (std::size_t g = 0; g < a.size(); ++g) {
    RealMatrix block = RealMatrix::Zero(nb * na, nb * na);
    const auto& ag = a[g];
    const auto& bg = b[g];
    for (Eigen::Index i = 0; i < na; ++i) {
      for (Eigen::Index j = 0; j < na; ++j) {
        block.block(j * nb, i * nb, nb, nb) += ag(i, j) * RealMatrix::Identity(nb, nb);
      }
      block.block(i * nb, i * nb, nb, nb) -= bg;
    }
    system.middleRows(static_cast<Eigen::Index>(g) * nb * na, nb * na) = block;
  }
  const RealMatrix basis = kernel::nullspace(system, tol);
  std::vector<RealMatrix> out;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) out.push_back(kernel::unvec(RealVector(basis.col(c)), nb, na));
  return out;
}

std::optional<RealMatrix> find_equivalence(const std::vector<RealMatrix>& a,
                                           const std::vector<RealMatrix>& b,
                                           const TolerancePolicy& tol, std::uint64_t seed) {
  const auto basis = intertwiners(a, b, tol);
  if (basis.empty() || basis.front().rows() != basis.front().cols()) return std::nullopt;
  kernel::SeededRng rng(seed);
  for (int trial = 0; trial < 8; ++trial) {
    RealMatrix t = RealMatrix::Zero(basis.front().rows(), basis.front().cols());
    for (const auto& m : basis) t += rng.normal() * m;
    Eigen::JacobiSVD<RealMatrix> svd(t);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > tol.eps_rank * sv(0)) return t;
  }
  return std::nullopt;
}

}  // namespace reps
}  // namespace fieldquanta

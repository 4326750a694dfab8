#include "fieldquanta/breaking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fieldquanta {

void QuarticPotential::validate() const {
  if (!(beta > 0.0)) throw Error(ErrorCode::InvalidInput, "quartic potential needs beta > 0");
  if (dim <= 0) throw Error(ErrorCode::InvalidInput, "quartic potential needs dim > 0");
  if (metric.h.rows() != dim || metric.h.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "metric size differs from potential dim");
  }
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorCode::InvalidInput, "quartic coefficients must be finite");
  }
}

double QuarticPotential::value(const RealVector& phi) const {
  const double s = phi.dot(metric.h * phi);
  return alpha * s + beta * s * s;
}

RealVector QuarticPotential::gradient(const RealVector& phi) const {
  const RealVector h_phi = metric.h * phi;
  const double s = phi.dot(h_phi);
  return (2.0 * alpha + 4.0 * beta * s) * h_phi;
}

RealMatrix QuarticPotential::hessian(const RealVector& phi) const {
  const RealVector h_phi = metric.h * phi;
  const double s = phi.dot(h_phi);
  return (2.0 * alpha + 4.0 * beta * s) * metric.h + 8.0 * beta * h_phi * h_phi.transpose();
}

QuarticPotential make_quartic(double alpha, double beta, int dim) {
  QuarticPotential p;
  p.alpha = alpha;
  p.beta = beta;
  p.dim = dim;
  p.metric.h = RealMatrix::Identity(dim, dim);
  p.validate();
  return p;
}

namespace breaking {
namespace {

RealMatrix orbit_matrix(const RepData& rep, const RealVector& phi0) {
  RealMatrix a(rep.dim, static_cast<Eigen::Index>(rep.generators.size()));
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    a.col(static_cast<Eigen::Index>(i)) = rep.generators[i] * phi0;
  }
  return a;
}

double orbit_scale(const RepData& rep, const RealVector& phi0) {
  double largest = 0.0;
  for (const auto& x : rep.generators) largest = std::max(largest, kernel::op_norm(x));
  return largest * phi0.norm();
}

// Orthonormal basis of the complement of the columns of k inside R^n.
RealMatrix orthogonal_complement(const RealMatrix& k, Eigen::Index n, const TolerancePolicy& tol) {
  if (k.cols() == 0) return RealMatrix::Identity(n, n);
  return kernel::nullspace(RealMatrix(k.transpose()), tol);
}

void canonical_sign(RealMatrix& basis, const TolerancePolicy& tol) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    const double cut = tol.eps_rank * basis.col(c).norm();
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      if (std::abs(basis(r, c)) > cut) {
        if (basis(r, c) < 0.0) basis.col(c) *= -1.0;
        break;
      }
    }
  }
}

// Split an orthonormal-coordinates space acted on by antisymmetric
// generators into irreducible pieces. Returns orthonormal bases (columns).
std::vector<RealMatrix> split_irreducible(const std::vector<RealMatrix>& generators, Eigen::Index n,
                                          const TolerancePolicy& tol, kernel::SeededRng& rng,
                                          int depth) {
  RepData local;
  local.dim = static_cast<int>(n);
  local.generators = generators;
  if (n == 1 || depth > 16) return {RealMatrix::Identity(n, n)};

  const auto basis = reps::commutant(local, tol);
  RealMatrix combo = RealMatrix::Zero(n, n);
  for (const auto& c : basis) combo += rng.normal() * 0.5 * (c + c.transpose());
  const auto spectrum = kernel::eig_symmetric(combo, tol);
  const double scale = std::max(spectrum.values.cwiseAbs().maxCoeff(), 1e-300);

  std::vector<RealMatrix> groups;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    const bool boundary =
        i == n || spectrum.values(i) - spectrum.values(i - 1) > std::sqrt(tol.eps_rel) * scale;
    if (!boundary) continue;
    groups.push_back(spectrum.vectors.middleCols(start, i - start));
    start = i;
  }
  if (groups.size() == 1) {
    // One eigenvalue only: the symmetric commutant is scalar, so the space is
    // irreducible.
    return {RealMatrix::Identity(n, n)};
  }

  std::vector<RealMatrix> out;
  for (const auto& q : groups) {
    std::vector<RealMatrix> restricted;
    for (const auto& x : generators) restricted.push_back(q.transpose() * x * q);
    for (const auto& piece : split_irreducible(restricted, q.cols(), tol, rng, depth + 1)) {
      out.push_back(q * piece);
    }
  }
  return out;
}

}  // namespace

VacuumSolution minimize(const QuarticPotential& p, bool strict) {
  p.validate();
  VacuumSolution v;
  v.phi0 = RealVector::Zero(p.dim);
  if (p.alpha == 0.0 && strict) {
    throw Error(ErrorCode::DegenerateQuartic,
                "alpha = 0: the origin is a minimum with flat quadratic directions");
  }
  if (p.alpha >= 0.0) {
    v.orbit_radius = 0.0;
    v.degenerate = false;
    return v;
  }
  v.orbit_radius = std::sqrt(-p.alpha / (2.0 * p.beta));
  v.phi0(0) = v.orbit_radius / std::sqrt(p.metric.h(0, 0));
  v.degenerate = true;
  return v;
}

RealMatrix finite_difference_hessian(const QuarticPotential& p, const RealVector& phi) {
  const Eigen::Index n = phi.size();
  const double step = 1e-4 * std::max(1.0, phi.norm());
  RealMatrix out(n, n);
  const double center = p.value(phi);
  for (Eigen::Index i = 0; i < n; ++i) {
    RealVector plus = phi;
    RealVector minus = phi;
    plus(i) += step;
    minus(i) -= step;
    out(i, i) = (p.value(plus) - 2.0 * center + p.value(minus)) / (step * step);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      RealVector pp = phi, pm = phi, mp = phi, mm = phi;
      pp(i) += step; pp(j) += step;
      pm(i) += step; pm(j) -= step;
      mp(i) -= step; mp(j) += step;
      mm(i) -= step; mm(j) -= step;
      out(i, j) = out(j, i) =
          (p.value(pp) - p.value(pm) - p.value(mp) + p.value(mm)) / (4.0 * step * step);
    }
  }
  return out;
}

MassSpectrum hessian_spectrum(const QuarticPotential& p, const VacuumSolution& v,
                              const TolerancePolicy& tol) {
  p.validate();
  if (v.phi0.size() != p.dim) throw Error(ErrorCode::DimensionMismatch, "vacuum has the wrong size");
  const RealMatrix analytic = p.hessian(v.phi0);
  const RealMatrix numeric = finite_difference_hessian(p, v.phi0);

  MassSpectrum out;
  out.finite_difference_agreement =
      (analytic - numeric).cwiseAbs().maxCoeff() / std::max(1.0, analytic.cwiseAbs().maxCoeff());
  if (out.finite_difference_agreement > 1e-6) {
    throw Error(ErrorCode::Inconsistency, "analytic and finite-difference Hessians disagree");
  }

  // Kinetic term is (1/2) h(dphi, dphi): masses are eigenvalues of H relative to h.
  const Eigen::LLT<RealMatrix> chol(p.metric.h);
  const RealMatrix l_inv = chol.matrixL().solve(RealMatrix::Identity(p.dim, p.dim));
  const RealMatrix normalized = l_inv * analytic * l_inv.transpose();
  const auto spectrum = kernel::eig_symmetric(0.5 * (normalized + normalized.transpose()), tol);

  const double scale = std::max(1.0, spectrum.values.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    double m2 = spectrum.values(i);
    if (m2 < -tol.eps_rank * scale) {
      throw Error(ErrorCode::NotAMinimum, "Hessian has a negative eigenvalue at the expansion point");
    }
    if (std::abs(m2) <= tol.eps_rank * scale) {
      ++out.massless_count;
      m2 = 0.0;
    }
    out.masses_squared.push_back(m2);
  }
  return out;
}

StabilizerAlgebra stabilizer(const RepData& rep, const RealVector& phi0, const TolerancePolicy& tol) {
  if (phi0.size() != rep.dim) throw Error(ErrorCode::DimensionMismatch, "phi0 has the wrong size");
  StabilizerAlgebra out;
  const auto k = static_cast<Eigen::Index>(rep.generators.size());
  if (k == 0) {
    out.coefficients = RealMatrix(0, 0);
    return out;
  }
  out.coefficients = kernel::nullspace_scaled(orbit_matrix(rep, phi0), orbit_scale(rep, phi0), tol);
  for (Eigen::Index c = 0; c < out.coefficients.cols(); ++c) {
    RealMatrix x = RealMatrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index i = 0; i < k; ++i) x += out.coefficients(i, c) * rep.generators[static_cast<std::size_t>(i)];
    out.basis.push_back(std::move(x));
  }
  return out;
}

int orbit_dimension(const RepData& rep, const RealVector& phi0, const TolerancePolicy& tol) {
  if (rep.generators.empty()) return 0;
  const auto k = static_cast<int>(rep.generators.size());
  return k - static_cast<int>(
                 kernel::nullspace_scaled(orbit_matrix(rep, phi0), orbit_scale(rep, phi0), tol).cols());
}

double subalgebra_residual(const StabilizerAlgebra& stab) {
  double worst = 0.0;
  for (std::size_t i = 0; i < stab.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < stab.basis.size(); ++j) {
      const auto& a = stab.basis[i];
      const auto& b = stab.basis[j];
      const auto fit = reps::fit_in_span(stab.basis, a * b - b * a);
      worst = std::max(worst, fit.residual / std::max(1.0, a.norm() * b.norm()));
    }
  }
  return worst;
}

std::vector<InvariantBlock> residual_decompose(const StabilizerAlgebra& stab, const RepData& target,
                                               const TolerancePolicy& tol, std::uint64_t seed) {
  if (target.generators.size() != stab.basis.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "target must supply one action matrix per stabilizer basis element");
  }
  const Eigen::Index n = target.dim;
  const RealMatrix h = reps::find_invariant_metric(target, tol, seed).h;
  // y = L^T x makes h the identity and the generators antisymmetric.
  const Eigen::LLT<RealMatrix> chol(h);
  const RealMatrix l = chol.matrixL();
  const RealMatrix l_t_inv = l.transpose().inverse();

  std::vector<RealMatrix> ortho;
  for (const auto& x : target.generators) ortho.push_back(l.transpose() * x * l_t_inv);

  // Common kernel: the subspace on which the residual symmetry acts trivially.
  RealMatrix stacked(static_cast<Eigen::Index>(ortho.size()) * n, n);
  double scale = 0.0;
  for (std::size_t i = 0; i < ortho.size(); ++i) {
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = ortho[i];
    scale = std::max(scale, kernel::op_norm(ortho[i]));
  }
  const RealMatrix trivial =
      ortho.empty() ? RealMatrix::Identity(n, n) : kernel::nullspace_scaled(stacked, scale, tol);
  const RealMatrix rest = orthogonal_complement(trivial, n, tol);

  std::vector<InvariantBlock> blocks;

  // Nontrivial part: irreducible pieces from a random symmetric commutant element.
  if (rest.cols() > 0) {
    std::vector<RealMatrix> restricted;
    for (const auto& x : ortho) restricted.push_back(rest.transpose() * x * rest);
    kernel::SeededRng rng(seed);
    for (const auto& piece : split_irreducible(restricted, rest.cols(), tol, rng, 0)) {
      InvariantBlock block;
      block.basis = l_t_inv * rest * piece;
      block.dim = static_cast<int>(piece.cols());
      blocks.push_back(std::move(block));
    }
  }

  // Trivial part: one-dimensional blocks aligned with coordinate axes where possible
  // (h-orthogonal projections of e_i, pivoting on the largest remainder).
  if (trivial.cols() > 0) {
    const RealMatrix k_x = l_t_inv * trivial;  // h-orthonormal basis of the trivial subspace
    std::vector<RealVector> chosen;
    for (Eigen::Index pick = 0; pick < trivial.cols(); ++pick) {
      RealVector best;
      double best_norm = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        RealVector v = k_x * (k_x.transpose() * h.col(i));  // h-projection of e_i
        for (const auto& c : chosen) v -= c * c.dot(h * v);
        const double norm = std::sqrt(std::max(0.0, v.dot(h * v)));
        if (norm > best_norm * (1.0 + 1e-12)) {
          best = v;
          best_norm = norm;
        }
      }
      best /= best_norm;
      chosen.push_back(best);
    }
    for (const auto& v : chosen) {
      InvariantBlock block;
      block.basis = v;
      block.dim = 1;
      blocks.push_back(std::move(block));
    }
  }

  for (auto& block : blocks) {
    canonical_sign(block.basis, tol);
    RepData restricted = reps::restrict_to(target, block.basis);
    restricted.group_label = target.group_label + " (block)";
    double action = 0.0;
    for (const auto& x : restricted.generators) action = std::max(action, x.norm());
    block.trivial = action <= tol.eps_rank * std::max(1.0, scale);
    if (block.trivial) {
      for (auto& x : restricted.generators) x.setZero();
    }
    block.type = reps::real_type(restricted, tol, seed);
  }

  std::stable_sort(blocks.begin(), blocks.end(), [](const InvariantBlock& a, const InvariantBlock& b) {
    return a.dim > b.dim;
  });
  return blocks;
}

}  // namespace breaking
}  // namespace fieldquanta

#include "fieldquanta/cxify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fieldquanta::cxify {
namespace {

constexpr Complex kI{0.0, 1.0};

double relative(double residual, double scale) { return residual / std::max(scale, 1.0); }

}  // namespace

std::string_view to_string(TheoremBranch branch) {
  switch (branch) {
    case TheoremBranch::ComplexIrreducible: return "complex-irreducible";
    case TheoremBranch::ConjugatePair: return "conjugate-pair";
    case TheoremBranch::Violated: return "violated";
  }
  return "violated";
}

ComplexifiedRep complexify(const RepData& rep) {
  ComplexifiedRep out;
  out.dim_c = rep.dim;
  out.operators.reserve(rep.generators.size());
  for (const auto& x : rep.generators) out.operators.push_back(x.cast<Complex>());
  out.conjugation = ComplexMatrix::Identity(rep.dim, rep.dim);
  return out;
}

SectorDecomposition decompose(const RepData& rep, const ComplexStructure& j,
                              const TolerancePolicy& tol) {
  const Eigen::Index n = rep.dim;
  if (j.J.rows() != n || j.J.cols() != n) {
    throw Error(ErrorCode::NotSecretlyComplex, "complex structure has the wrong size");
  }
  if (reps::complex_structure_residual(j.J) > tol.eps_rel * static_cast<double>(n)) {
    throw Error(ErrorCode::NotSecretlyComplex, "J^2 != -I");
  }
  if (reps::commutation_residual(j.J, rep) > tol.eps_rel) {
    throw Error(ErrorCode::NotSecretlyComplex, "J does not commute with the representation");
  }

  const ComplexMatrix jc = j.J.cast<Complex>();
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);

  SectorDecomposition d;
  d.P_plus = 0.5 * (identity - kI * jc);
  d.P_minus = 0.5 * (identity + kI * jc);
  d.basis_plus = kernel::nullspace(ComplexMatrix(jc - kI * identity), tol);
  d.basis_minus = d.basis_plus.conjugate();
  d.sector_dim = static_cast<int>(d.basis_plus.cols());
  if (2 * d.sector_dim != n) {
    throw Error(ErrorCode::NotSecretlyComplex, "+i eigenspace of J is not half-dimensional");
  }
  for (const auto& x : rep.generators) {
    const ComplexMatrix xc = x.cast<Complex>();
    d.rep_plus.push_back(d.basis_plus.adjoint() * xc * d.basis_plus);
    d.rep_minus.push_back(d.basis_minus.adjoint() * xc * d.basis_minus);
  }
  return d;
}

std::size_t complex_commutant_dim(const std::vector<ComplexMatrix>& operators, int dim,
                                  const TolerancePolicy& tol) {
  const Eigen::Index n = dim;
  ComplexMatrix system(static_cast<Eigen::Index>(operators.size()) * n * n, n * n);
  for (std::size_t i = 0; i < operators.size(); ++i) {
    if (operators[i].rows() != n || operators[i].cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "operator size differs from dim");
    }
    system.middleRows(static_cast<Eigen::Index>(i) * n * n, n * n) =
        kernel::commutator_operator(operators[i]);
  }
  return static_cast<std::size_t>(kernel::nullspace(system, tol).cols());
}

bool check_irreducible_complex(const std::vector<ComplexMatrix>& operators,
                               const TolerancePolicy& tol) {
  if (operators.empty()) {
    throw Error(ErrorCode::InvalidInput, "operator list is empty; the dimension is unknown");
  }
  const auto n = static_cast<int>(operators.front().rows());
  return complex_commutant_dim(operators, n, tol) == 1;
}

bool check_irreducible_complex(const ComplexifiedRep& rep, const TolerancePolicy& tol) {
  return complex_commutant_dim(rep.operators, rep.dim_c, tol) == 1;
}

double conjugate_pair_residual(const SectorDecomposition& d) {
  if (d.rep_plus.size() != d.rep_minus.size() || d.basis_plus.cols() != d.basis_minus.cols() ||
      d.basis_plus.rows() != d.basis_minus.rows()) {
    return std::numeric_limits<double>::infinity();
  }
  // Express conj(V+) in the basis of V-: conj(B+) = B- T.
  const ComplexMatrix conj_plus = d.basis_plus.conjugate();
  const ComplexMatrix t = d.basis_minus.adjoint() * conj_plus;
  double worst = (conj_plus - d.basis_minus * t).norm();
  for (std::size_t k = 0; k < d.rep_plus.size(); ++k) {
    const auto& a_plus = d.rep_plus[k];
    const auto& a_minus = d.rep_minus[k];
    if (a_plus.rows() != t.cols() || a_minus.rows() != t.rows()) {
      return std::numeric_limits<double>::infinity();
    }
    const double scale = std::max(a_plus.norm(), a_minus.norm());
    worst = std::max(worst, relative((t * a_plus.conjugate() - a_minus * t).norm(), scale));
    const ComplexMatrix g_plus = kernel::expm(a_plus, 1.0);
    const ComplexMatrix g_minus = kernel::expm(a_minus, 1.0);
    worst = std::max(worst, (t * g_plus.conjugate() - g_minus * t).norm());
  }
  return worst;
}

bool verify_conjugate_pair(const SectorDecomposition& d, const TolerancePolicy& tol) {
  const double bound = tol.eps_rel * std::max(1.0, static_cast<double>(d.basis_plus.rows()));
  return conjugate_pair_residual(d) <= bound;
}

RepData real_form(const ComplexifiedRep& rep, const TolerancePolicy& tol) {
  const Eigen::Index n = rep.dim_c;
  const RealMatrix cr = rep.conjugation.real();
  const RealMatrix ci = rep.conjugation.imag();
  const RealMatrix identity = RealMatrix::Identity(n, n);
  // v = x + i y is fixed iff x = Cr x + Ci y and y = Ci x - Cr y.
  RealMatrix system(2 * n, 2 * n);
  system << cr - identity, ci, ci, -cr - identity;
  const RealMatrix fixed = kernel::nullspace(system, tol);
  if (fixed.cols() != n) {
    throw Error(ErrorCode::InvalidInput, "conjugation is not an antilinear involution");
  }
  const RealMatrix pinv = fixed.completeOrthogonalDecomposition().pseudoInverse();

  RepData out;
  out.dim = static_cast<int>(n);
  out.group_label = "real form";
  for (const auto& op : rep.operators) {
    RealMatrix real_op(2 * n, 2 * n);
    real_op << op.real(), -op.imag(), op.imag(), op.real();
    out.generators.push_back(pinv * real_op * fixed);
  }
  return out;
}

TheoremCheck check_complexification_theorem(const RepData& rep, const TolerancePolicy& tol,
                                            std::uint64_t seed) {
  TheoremCheck out;
  out.type = reps::real_type(rep, tol, seed);
  const auto complexified = complexify(rep);
  out.complexified_irreducible = check_irreducible_complex(complexified, tol);

  if (out.type.tag == RealKind::HonestlyReal) {
    out.branch = out.complexified_irreducible ? TheoremBranch::ComplexIrreducible
                                              : TheoremBranch::Violated;
    out.detail = out.complexified_irreducible ? "no complex structure; complexification irreducible"
                                              : "no complex structure but complexification reducible";
    return out;
  }

  const auto d = decompose(rep, *out.type.J, tol);
  const Eigen::Index n = rep.dim;
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
  out.max_residual = std::max({(d.P_plus + d.P_minus - identity).norm(),
                               (d.P_plus * d.P_plus - d.P_plus).norm(),
                               (d.P_minus * d.P_minus - d.P_minus).norm(),
                               (d.P_plus * d.P_minus).norm(), conjugate_pair_residual(d)});

  if (rep.generators.empty()) {
    out.sectors_irreducible = d.sector_dim == 1;
  } else {
    out.sectors_irreducible = check_irreducible_complex(d.rep_plus, tol) &&
                              check_irreducible_complex(d.rep_minus, tol);
  }
  out.sectors_conjugate = verify_conjugate_pair(d, tol);

  const bool ok = !out.complexified_irreducible && out.sectors_irreducible &&
                  out.sectors_conjugate && out.max_residual <= 1e-8;
  out.branch = ok ? TheoremBranch::ConjugatePair : TheoremBranch::Violated;
  std::ostringstream detail;
  detail << "complex structure found; sectors of complex dimension " << d.sector_dim
         << (out.sectors_irreducible ? ", irreducible" : ", REDUCIBLE")
         << (out.sectors_conjugate ? ", conjugate" : ", NOT conjugate");
  out.detail = detail.str();
  return out;
}

}  // namespace fieldquanta::cxify

#pragma once

// Complexification of real representations and the split of a secretly
// complex representation into conjugate particle / antiparticle sectors.
//
// V^C is carried in the canonical basis as complex column vectors; the pair
// picture (v, w) with J(v, w) = (w, -v) is isomorphic via v + i w and is not
// represented separately. The natural conjugation is entrywise conjugation.

#include <string>
#include <vector>

#include "fieldquanta/reps.hpp"

namespace fieldquanta {

struct ComplexifiedRep {
  int dim_c = 0;
  std::vector<ComplexMatrix> operators;
  /// Antilinear involution v -> conjugation * conj(v). Identity for the
  /// canonical basis; other values arise after a complex change of basis.
  ComplexMatrix conjugation;

  ComplexVector conjugate(const ComplexVector& v) const { return conjugation * v.conjugate(); }
};

/// Particle sector = +i eigenspace of the complexified J (range of P_plus).
struct SectorDecomposition {
  ComplexMatrix P_plus;
  ComplexMatrix P_minus;
  /// Orthonormal bases of the two sectors (columns).
  ComplexMatrix basis_plus;
  ComplexMatrix basis_minus;
  /// Generators restricted to each sector, in the bases above.
  std::vector<ComplexMatrix> rep_plus;
  std::vector<ComplexMatrix> rep_minus;
  int sector_dim = 0;
};

namespace cxify {

ComplexifiedRep complexify(const RepData& rep);

/// P+- = (I -+ i J_c) / 2. Throws NotSecretlyComplex if J is not a complex
/// structure commuting with the representation.
SectorDecomposition decompose(const RepData& rep, const ComplexStructure& j,
                              const TolerancePolicy& tol = {});

/// Dimension of {C : [C, X] = 0 for all operators} over the complex numbers,
/// for operators acting on C^dim. An empty operator list gives dim^2.
std::size_t complex_commutant_dim(const std::vector<ComplexMatrix>& operators, int dim,
                                  const TolerancePolicy& tol = {});

/// Schur criterion: complex commutant is one-dimensional. The operator list
/// must be non-empty; use the ComplexifiedRep overload for trivial actions.
bool check_irreducible_complex(const std::vector<ComplexMatrix>& operators,
                               const TolerancePolicy& tol = {});
bool check_irreducible_complex(const ComplexifiedRep& rep, const TolerancePolicy& tol = {});

/// True iff entrywise conjugation maps the plus sector onto the minus sector
/// and intertwines the two restricted actions, both for the generators and
/// for the group elements exp(X).
bool verify_conjugate_pair(const SectorDecomposition& d, const TolerancePolicy& tol = {});

/// Worst residual found by verify_conjugate_pair (0 for an exact pair).
double conjugate_pair_residual(const SectorDecomposition& d);

/// The conjugation-fixed real subspace of a complexified representation and
/// the operators restricted to it, as a real representation.
RepData real_form(const ComplexifiedRep& rep, const TolerancePolicy& tol = {});

enum class TheoremBranch { ComplexIrreducible, ConjugatePair, Violated };

std::string_view to_string(TheoremBranch branch);

/// Outcome of checking the complexification dichotomy on one representation.
struct TheoremCheck {
  TheoremBranch branch = TheoremBranch::Violated;
  RealType type;
  bool complexified_irreducible = false;
  bool sectors_irreducible = false;
  bool sectors_conjugate = false;
  /// Largest residual among projector identities and intertwining relations.
  double max_residual = 0.0;
  std::string detail;
};

/// Exactly one of: the complexification is irreducible (no J), or a J exists
/// and decompose() yields two irreducible conjugate sectors.
TheoremCheck check_complexification_theorem(const RepData& rep, const TolerancePolicy& tol = {},
                                            std::uint64_t seed = 0);

}  // namespace cxify
}  // namespace fieldquanta

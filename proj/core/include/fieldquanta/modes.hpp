#pragma once

// Linear fields on a periodic 1+1D lattice: normal modes, the split of the
// complexified solution space by frequency sign, and the one-particle inner
// product.
//
// Mode convention. Site j sits at x_j = j L / M. Row i of a coefficient
// matrix is the mode with signed index n = i for i <= M/2 and n = i - M
// otherwise, k = 2 pi n / L. A complexified solution is
//
//   phi(x, t) = sum_k  C_k e^{i(kx - w t)} + D_k e^{i(kx + w t)}
//
// and a real solution has D_k = conj(C_{-k}).
//
// Relativistic fields obey phi'' = phi_xx - m^2 phi per internal component.
// Schroedinger fields obey phi' = J phi_xx / (2m) for a complex structure J
// on the internal space (the realified form of i psi' = -psi_xx / 2m).

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "fieldquanta/reps.hpp"

namespace fieldquanta {

enum class DispersionKind { Relativistic, Schroedinger };

std::string_view to_string(DispersionKind kind);
DispersionKind dispersion_kind_from_string(std::string_view text);

struct Dispersion {
  DispersionKind kind = DispersionKind::Relativistic;
  double mass = 1.0;
  /// Schroedinger only: the complex structure in the equation of motion.
  RealMatrix J;

  static Dispersion relativistic(double m);
  static Dispersion schroedinger(double m, const RealMatrix& j);

  /// sqrt(k^2 + m^2) or k^2 / (2m).
  double omega(double k) const;
  /// Relativistic modes with omega = 0 are left out of every mode sum.
  bool excluded(double k) const;
  void validate(int internal_dim) const;
};

struct Lattice {
  int sites = 64;
  double length = 6.283185307179586;
  int internal_dim = 1;

  void validate() const;
  int signed_index(int row) const;
  double k_value(int row) const;
  /// Row holding the mode -k.
  int mirror_row(int row) const;
  double spacing() const { return length / sites; }
};

struct LatticeSolution {
  Lattice lattice;
  Dispersion dispersion;
  /// sites x internal_dim each.
  ComplexMatrix C;
  ComplexMatrix D;

  /// max |D_k - conj(C_{-k})|: zero for a real classical solution.
  double reality_residual() const;
};

struct OneParticleState {
  Lattice lattice;
  Dispersion dispersion;
  /// Positive-frequency amplitudes, sites x internal_dim.
  ComplexMatrix coeffs;
  double norm = 0.0;
};

struct FrequencySplit {
  OneParticleState positive;
  /// The negative-frequency amplitudes D_k, normed with the same form.
  OneParticleState negative;
};

namespace modes {

/// Data are sites x internal_dim real samples at t = 0. For Schroedinger
/// dynamics phidot may be empty; if given it must satisfy the equation of
/// motion (InvalidInput otherwise).
/// Throws ZeroModeSingular if an excluded mode carries nonzero data.
LatticeSolution from_cauchy_data(const RealMatrix& phi, const RealMatrix& phidot, const Lattice& lattice,
                                 const Dispersion& d, const TolerancePolicy& tol = {});

/// Field values (complex in general) and time derivatives at time t.
ComplexMatrix synthesize(const LatticeSolution& s, double t);
ComplexMatrix synthesize_velocity(const LatticeSolution& s, double t);

/// Identity metric when h is omitted.
FrequencySplit frequency_split(const LatticeSolution& s, const std::optional<InvariantMetric>& h = {});

/// The solution carried by the positive part alone (D = 0).
LatticeSolution as_solution(const OneParticleState& f);

/// (L/M) sum_k w_k conj(f_k)^T h g_k, w_k = 1/omega_k (relativistic) or 1
/// (Schroedinger), excluded modes skipped.
Complex inner_product(const OneParticleState& f, const OneParticleState& g, const InvariantMetric& h);

OneParticleState make_state(const Lattice& lattice, const Dispersion& d, const ComplexMatrix& coeffs,
                            const InvariantMetric& h);

/// Exact evolution by tau: C_k -> C_k e^{-i w tau}.
OneParticleState evolve(const OneParticleState& f, double tau);
LatticeSolution evolve(const LatticeSolution& s, double tau);
/// phi(x) -> phi(x - sites * spacing).
OneParticleState translate(const OneParticleState& f, int sites);
/// Internal symmetry: amplitudes multiplied by the real matrix g.
OneParticleState act_internal(const OneParticleState& f, const RealMatrix& g);

/// Fraction of the positive-frequency space lying in the antiparticle
/// sector; nullopt when the representation is not secretly complex.
/// Relativistic dynamics use d as given; for Schroedinger dynamics the
/// field's own complex structure is used in the equation of motion.
std::optional<double> antiparticle_content(const RepData& rep, const Dispersion& d, int sites,
                                           double length = 6.283185307179586,
                                           const TolerancePolicy& tol = {}, std::uint64_t seed = 0);

/// Columns: k_index,k_value,omega,component,re_C,im_C,re_D,im_D.
std::string to_csv(const LatticeSolution& s);

}  // namespace modes
}  // namespace fieldquanta

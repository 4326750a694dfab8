#include "fieldquanta/modes.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "fieldquanta/cxify.hpp"

namespace fieldquanta {

std::string_view to_string(DispersionKind kind) {
  return kind == DispersionKind::Relativistic ? "relativistic" : "schroedinger";
}

DispersionKind dispersion_kind_from_string(std::string_view text) {
  if (text == "relativistic") return DispersionKind::Relativistic;
  if (text == "schroedinger") return DispersionKind::Schroedinger;
  throw Error(ErrorCode::InvalidInput, "unknown dispersion '" + std::string(text) + "'");
}

Dispersion Dispersion::relativistic(double m) {
  Dispersion d;
  d.kind = DispersionKind::Relativistic;
  d.mass = m;
  return d;
}

Dispersion Dispersion::schroedinger(double m, const RealMatrix& j) {
  Dispersion d;
  d.kind = DispersionKind::Schroedinger;
  d.mass = m;
  d.J = j;
  return d;
}

double Dispersion::omega(double k) const {
  if (kind == DispersionKind::Relativistic) return std::sqrt(k * k + mass * mass);
  return k * k / (2.0 * mass);
}

bool Dispersion::excluded(double k) const {
  return kind == DispersionKind::Relativistic && omega(k) == 0.0;
}

void Dispersion::validate(int internal_dim) const {
  if (!std::isfinite(mass)) throw Error(ErrorCode::InvalidInput, "mass must be finite");
  if (kind == DispersionKind::Relativistic) {
    if (mass < 0.0) throw Error(ErrorCode::InvalidInput, "relativistic mass must be >= 0");
    return;
  }
  if (!(mass > 0.0)) throw Error(ErrorCode::InvalidInput, "Schroedinger mass must be > 0");
  if (J.rows() != internal_dim || J.cols() != internal_dim) {
    throw Error(ErrorCode::DimensionMismatch, "Schroedinger dynamics need a J on the internal space");
  }
  if (reps::complex_structure_residual(J) > 1e-8) {
    throw Error(ErrorCode::InvalidInput, "Schroedinger J does not square to -1");
  }
}

void Lattice::validate() const {
  if (sites < 2 || (sites & (sites - 1)) != 0) {
    throw Error(ErrorCode::InvalidInput, "lattice sites must be a power of two >= 2");
  }
  if (!(length > 0.0) || !std::isfinite(length)) throw Error(ErrorCode::InvalidInput, "lattice length must be > 0");
  if (internal_dim < 1) throw Error(ErrorCode::InvalidInput, "internal dimension must be >= 1");
}

int Lattice::signed_index(int row) const { return row <= sites / 2 ? row : row - sites; }

double Lattice::k_value(int row) const {
  return 2.0 * std::numbers::pi * signed_index(row) / length;
}

int Lattice::mirror_row(int row) const { return (sites - row) % sites; }

double LatticeSolution::reality_residual() const {
  double worst = 0.0;
  for (int i = 0; i < lattice.sites; ++i) {
    const int j = lattice.mirror_row(i);
    worst = std::max(worst, (D.row(i) - C.row(j).conjugate()).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace modes {
namespace {

bool same_lattice(const Lattice& a, const Lattice& b) {
  return a.sites == b.sites && a.length == b.length && a.internal_dim == b.internal_dim;
}

// (1/M) sum_j x_j e^{-i k x_j} per column.
ComplexMatrix forward(const RealMatrix& samples) {
  const auto m = static_cast<int>(samples.rows());
  Eigen::FFT<double> fft;
  ComplexMatrix out(m, samples.cols());
  std::vector<Complex> in(static_cast<std::size_t>(m));
  std::vector<Complex> spec;
  for (Eigen::Index c = 0; c < samples.cols(); ++c) {
    for (int j = 0; j < m; ++j) in[static_cast<std::size_t>(j)] = samples(j, c);
    fft.fwd(spec, in);
    for (int i = 0; i < m; ++i) out(i, c) = spec[static_cast<std::size_t>(i)] / static_cast<double>(m);
  }
  return out;
}

// sum_k a_k e^{i k x_j} per column.
ComplexMatrix backward(const ComplexMatrix& amplitudes) {
  const auto m = static_cast<int>(amplitudes.rows());
  Eigen::FFT<double> fft;
  ComplexMatrix out(m, amplitudes.cols());
  std::vector<Complex> in(static_cast<std::size_t>(m));
  std::vector<Complex> samples;
  for (Eigen::Index c = 0; c < amplitudes.cols(); ++c) {
    for (int i = 0; i < m; ++i) in[static_cast<std::size_t>(i)] = amplitudes(i, c);
    fft.inv(samples, in);
    for (int j = 0; j < m; ++j) out(j, c) = samples[static_cast<std::size_t>(j)] * static_cast<double>(m);
  }
  return out;
}

double weight(const Dispersion& d, double k) {
  if (d.kind == DispersionKind::Schroedinger) return 1.0;
  return 1.0 / d.omega(k);
}

ComplexMatrix plus_projector(const RealMatrix& j) {
  const auto n = j.rows();
  return 0.5 * (ComplexMatrix::Identity(n, n) - Complex(0.0, 1.0) * j.cast<Complex>());
}

ComplexMatrix phased(const Lattice& lat, const Dispersion& d, const ComplexMatrix& a, double t, double sign) {
  ComplexMatrix out = a;
  for (int i = 0; i < lat.sites; ++i) {
    const double k = lat.k_value(i);
    if (d.excluded(k)) {
      out.row(i).setZero();
      continue;
    }
    out.row(i) *= std::polar(1.0, sign * d.omega(k) * t);
  }
  return out;
}

}  // namespace

LatticeSolution from_cauchy_data(const RealMatrix& phi, const RealMatrix& phidot, const Lattice& lattice,
                                 const Dispersion& d, const TolerancePolicy& tol) {
  lattice.validate();
  d.validate(lattice.internal_dim);
  if (phi.rows() != lattice.sites || phi.cols() != lattice.internal_dim) {
    throw Error(ErrorCode::DimensionMismatch, "phi must be sites x internal_dim");
  }
  const bool has_velocity = phidot.size() != 0;
  if (has_velocity && (phidot.rows() != phi.rows() || phidot.cols() != phi.cols())) {
    throw Error(ErrorCode::DimensionMismatch, "phidot must match phi");
  }
  if (d.kind == DispersionKind::Relativistic && !has_velocity) {
    throw Error(ErrorCode::InvalidInput, "relativistic data need phidot");
  }
  kernel::require_finite(phi, "phi");
  if (has_velocity) kernel::require_finite(phidot, "phidot");

  const ComplexMatrix phi_hat = forward(phi);
  const ComplexMatrix dot_hat = has_velocity ? forward(phidot) : ComplexMatrix::Zero(phi.rows(), phi.cols());
  const double scale = std::max({1.0, phi_hat.cwiseAbs().maxCoeff(), dot_hat.cwiseAbs().maxCoeff()});

  LatticeSolution s;
  s.lattice = lattice;
  s.dispersion = d;
  s.C = ComplexMatrix::Zero(phi.rows(), phi.cols());
  s.D = ComplexMatrix::Zero(phi.rows(), phi.cols());
  const Complex i_unit(0.0, 1.0);

  if (d.kind == DispersionKind::Relativistic) {
    for (int r = 0; r < lattice.sites; ++r) {
      const double k = lattice.k_value(r);
      if (d.excluded(k)) {
        const double content = std::max(phi_hat.row(r).cwiseAbs().maxCoeff(), dot_hat.row(r).cwiseAbs().maxCoeff());
        if (content > tol.eps_rel * scale) {
          throw Error(ErrorCode::ZeroModeSingular, "massless k = 0 mode carries data");
        }
        continue;
      }
      const double w = d.omega(k);
      s.C.row(r) = 0.5 * (phi_hat.row(r) + i_unit * dot_hat.row(r) / w);
      s.D.row(r) = 0.5 * (phi_hat.row(r) - i_unit * dot_hat.row(r) / w);
    }
    return s;
  }

  const ComplexMatrix p_plus = plus_projector(d.J);
  const ComplexMatrix jc = d.J.cast<Complex>();
  double mismatch = 0.0;
  for (int r = 0; r < lattice.sites; ++r) {
    const double k = lattice.k_value(r);
    const ComplexVector v = phi_hat.row(r).transpose();
    const ComplexVector c = p_plus * v;
    s.C.row(r) = c.transpose();
    s.D.row(r) = (v - c).transpose();
    if (has_velocity) {
      const ComplexVector expected = -(k * k / (2.0 * d.mass)) * (jc * v);
      mismatch = std::max(mismatch, (expected - dot_hat.row(r).transpose()).cwiseAbs().maxCoeff());
    }
  }
  if (mismatch > std::sqrt(tol.eps_rel) * scale) {
    throw Error(ErrorCode::InvalidInput, "phidot does not satisfy the Schroedinger equation");
  }
  return s;
}

ComplexMatrix synthesize(const LatticeSolution& s, double t) {
  return backward(phased(s.lattice, s.dispersion, s.C, t, -1.0) +
                  phased(s.lattice, s.dispersion, s.D, t, +1.0));
}

ComplexMatrix synthesize_velocity(const LatticeSolution& s, double t) {
  ComplexMatrix a = phased(s.lattice, s.dispersion, s.C, t, -1.0);
  ComplexMatrix b = phased(s.lattice, s.dispersion, s.D, t, +1.0);
  for (int r = 0; r < s.lattice.sites; ++r) {
    const double w = s.dispersion.omega(s.lattice.k_value(r));
    a.row(r) *= Complex(0.0, -w);
    b.row(r) *= Complex(0.0, w);
  }
  return backward(a + b);
}

OneParticleState make_state(const Lattice& lattice, const Dispersion& d, const ComplexMatrix& coeffs,
                            const InvariantMetric& h) {
  OneParticleState f;
  f.lattice = lattice;
  f.dispersion = d;
  f.coeffs = coeffs;
  f.norm = std::sqrt(std::max(0.0, inner_product(f, f, h).real()));
  return f;
}

FrequencySplit frequency_split(const LatticeSolution& s, const std::optional<InvariantMetric>& h) {
  InvariantMetric metric;
  metric.h = h ? h->h : RealMatrix::Identity(s.lattice.internal_dim, s.lattice.internal_dim);
  return {make_state(s.lattice, s.dispersion, s.C, metric), make_state(s.lattice, s.dispersion, s.D, metric)};
}

LatticeSolution as_solution(const OneParticleState& f) {
  LatticeSolution s;
  s.lattice = f.lattice;
  s.dispersion = f.dispersion;
  s.C = f.coeffs;
  s.D = ComplexMatrix::Zero(f.coeffs.rows(), f.coeffs.cols());
  return s;
}

Complex inner_product(const OneParticleState& f, const OneParticleState& g, const InvariantMetric& h) {
  if (!same_lattice(f.lattice, g.lattice)) throw Error(ErrorCode::DimensionMismatch, "states live on different lattices");
  const Eigen::Index n = f.lattice.internal_dim;
  if (f.coeffs.rows() != f.lattice.sites || f.coeffs.cols() != n || g.coeffs.rows() != f.coeffs.rows() ||
      g.coeffs.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "state coefficients have the wrong shape");
  }
  if (h.h.rows() != n || h.h.cols() != n) throw Error(ErrorCode::DimensionMismatch, "metric has the wrong size");
  const ComplexMatrix hc = h.h.cast<Complex>();
  Complex sum(0.0, 0.0);
  for (int r = 0; r < f.lattice.sites; ++r) {
    const double k = f.lattice.k_value(r);
    if (f.dispersion.excluded(k)) continue;
    const Complex term = (f.coeffs.row(r).conjugate() * hc * g.coeffs.row(r).transpose())(0, 0);
    sum += weight(f.dispersion, k) * term;
  }
  return f.lattice.spacing() * sum;
}

OneParticleState evolve(const OneParticleState& f, double tau) {
  OneParticleState out = f;
  out.coeffs = phased(f.lattice, f.dispersion, f.coeffs, tau, -1.0);
  return out;
}

LatticeSolution evolve(const LatticeSolution& s, double tau) {
  LatticeSolution out = s;
  out.C = phased(s.lattice, s.dispersion, s.C, tau, -1.0);
  out.D = phased(s.lattice, s.dispersion, s.D, tau, +1.0);
  return out;
}

OneParticleState translate(const OneParticleState& f, int sites) {
  OneParticleState out = f;
  const double a = sites * f.lattice.spacing();
  for (int r = 0; r < f.lattice.sites; ++r) out.coeffs.row(r) *= std::polar(1.0, -f.lattice.k_value(r) * a);
  return out;
}

OneParticleState act_internal(const OneParticleState& f, const RealMatrix& g) {
  if (g.rows() != f.lattice.internal_dim || g.cols() != f.lattice.internal_dim) {
    throw Error(ErrorCode::DimensionMismatch, "internal action has the wrong size");
  }
  OneParticleState out = f;
  out.coeffs = f.coeffs * g.transpose().cast<Complex>();
  return out;
}

std::optional<double> antiparticle_content(const RepData& rep, const Dispersion& d, int sites, double length,
                                           const TolerancePolicy& tol, std::uint64_t seed) {
  const RealType rt = reps::real_type(rep, tol, seed);
  if (rt.tag != RealKind::SecretlyComplex || !rt.J) return std::nullopt;
  const SectorDecomposition dec = cxify::decompose(rep, *rt.J, tol);

  Dispersion dyn = d;
  if (dyn.kind == DispersionKind::Schroedinger) dyn.J = rt.J->J;
  Lattice lat;
  lat.sites = sites;
  lat.length = length;
  lat.internal_dim = rep.dim;
  lat.validate();
  dyn.validate(rep.dim);

  const int n = rep.dim;
  std::size_t positive_total = 0;
  std::size_t anti_total = 0;
  for (int r1 = 0; r1 <= sites / 2; ++r1) {
    const double k = lat.k_value(r1);
    if (dyn.excluded(k)) continue;
    const int r2 = lat.mirror_row(r1);
    const std::vector<int> rows = r1 == r2 ? std::vector<int>{r1} : std::vector<int>{r1, r2};
    const int trig_count = r1 == r2 ? 1 : 2;
    const int slots = dyn.kind == DispersionKind::Relativistic ? 2 : 1;

    const auto width = static_cast<Eigen::Index>(rows.size()) * n;
    ComplexMatrix positive(width, trig_count * n * slots);
    ComplexMatrix anti(width, positive.cols());
    Eigen::Index col = 0;
    for (int trig = 0; trig < trig_count; ++trig) {
      for (int a = 0; a < n; ++a) {
        for (int slot = 0; slot < slots; ++slot) {
          RealMatrix wave = RealMatrix::Zero(sites, n);
          for (int j = 0; j < sites; ++j) {
            const double x = k * j * lat.spacing();
            wave(j, a) = trig == 0 ? std::cos(x) : std::sin(x);
          }
          const RealMatrix zero = RealMatrix::Zero(sites, n);
          const RealMatrix empty;
          const LatticeSolution s =
              dyn.kind == DispersionKind::Relativistic
                  ? from_cauchy_data(slot == 0 ? wave : zero, slot == 0 ? zero : wave, lat, dyn, tol)
                  : from_cauchy_data(wave, empty, lat, dyn, tol);
          for (std::size_t b = 0; b < rows.size(); ++b) {
            const ComplexVector c = s.C.row(rows[b]).transpose();
            positive.block(static_cast<Eigen::Index>(b) * n, col, n, 1) = c;
            anti.block(static_cast<Eigen::Index>(b) * n, col, n, 1) = dec.P_minus * c;
          }
          ++col;
        }
      }
    }
    const double scale = kernel::op_norm(positive);
    positive_total += static_cast<std::size_t>(positive.cols() - kernel::nullspace_scaled(positive, scale, tol).cols());
    anti_total += static_cast<std::size_t>(anti.cols() - kernel::nullspace_scaled(anti, scale, tol).cols());
  }
  if (positive_total == 0) return 0.0;
  return static_cast<double>(anti_total) / static_cast<double>(positive_total);
}

std::string to_csv(const LatticeSolution& s) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "k_index,k_value,omega,component,re_C,im_C,re_D,im_D\n";
  for (int r = 0; r < s.lattice.sites; ++r) {
    const double k = s.lattice.k_value(r);
    for (int a = 0; a < s.lattice.internal_dim; ++a) {
      out << s.lattice.signed_index(r) << ',' << k << ',' << s.dispersion.omega(k) << ',' << a << ','
          << s.C(r, a).real() << ',' << s.C(r, a).imag() << ',' << s.D(r, a).real() << ',' << s.D(r, a).imag()
          << '\n';
    }
  }
  return out.str();
}

}  // namespace modes
}  // namespace fieldquanta

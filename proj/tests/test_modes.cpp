#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fieldquanta/catalog.hpp"
#include "fieldquanta/cxify.hpp"
#include "fieldquanta/discrete.hpp"
#include "fieldquanta/modes.hpp"
#include "support.hpp"

using namespace fieldquanta;
using fqtest::max_abs;

namespace {

const Complex I_UNIT(0.0, 1.0);

Lattice lattice(int sites, int dim, double length = 2.0 * std::numbers::pi) {
  Lattice l;
  l.sites = sites;
  l.length = length;
  l.internal_dim = dim;
  return l;
}

InvariantMetric identity_metric(int n) { return {RealMatrix::Identity(n, n)}; }

// Smooth random Cauchy data: a handful of low modes per component.
std::pair<RealMatrix, RealMatrix> smooth_data(kernel::SeededRng& rng, const Lattice& lat, int modes = 6) {
  RealMatrix phi = RealMatrix::Zero(lat.sites, lat.internal_dim);
  RealMatrix phidot = RealMatrix::Zero(lat.sites, lat.internal_dim);
  for (int c = 0; c < lat.internal_dim; ++c) {
    for (int n = 1; n <= modes; ++n) {
      const double a = rng.normal(), b = rng.normal(), e = rng.normal(), f = rng.normal();
      for (int j = 0; j < lat.sites; ++j) {
        const double x = j * lat.spacing();
        const double k = 2.0 * std::numbers::pi * n / lat.length;
        phi(j, c) += a * std::cos(k * x) + b * std::sin(k * x);
        phidot(j, c) += e * std::cos(k * x) + f * std::sin(k * x);
      }
    }
    phi.col(c).array() += rng.normal();
    phidot.col(c).array() += rng.normal();
  }
  return {phi, phidot};
}

// Full-spectrum random positive-frequency amplitudes.
ComplexMatrix random_coeffs(kernel::SeededRng& rng, int sites, int dim) {
  return rng.matrix(sites, dim).cast<Complex>() + I_UNIT * rng.matrix(sites, dim).cast<Complex>();
}

// Direct evaluation of the positive-frequency field at (x_j, t), the oracle
// for the library's synthesis.
ComplexMatrix direct_field(const OneParticleState& f, double t) {
  const Lattice& lat = f.lattice;
  ComplexMatrix out = ComplexMatrix::Zero(lat.sites, lat.internal_dim);
  for (int j = 0; j < lat.sites; ++j) {
    const double x = j * lat.spacing();
    for (int r = 0; r < lat.sites; ++r) {
      const double k = lat.k_value(r);
      if (f.dispersion.excluded(k)) continue;
      out.row(j) += f.coeffs.row(r) * std::exp(I_UNIT * (k * x - f.dispersion.omega(k) * t));
    }
  }
  return out;
}

}  // namespace

TEST(Lattice, SignedIndexAndMirror) {
  const Lattice l = lattice(8, 1);
  EXPECT_EQ(l.signed_index(0), 0);
  EXPECT_EQ(l.signed_index(4), 4);
  EXPECT_EQ(l.signed_index(5), -3);
  EXPECT_EQ(l.mirror_row(1), 7);
  EXPECT_EQ(l.mirror_row(0), 0);
  EXPECT_NEAR(l.k_value(7), -1.0, 1e-15);
}

TEST(Lattice, ValidateRejectsBadShapes) {
  EXPECT_THROW(lattice(0, 1).validate(), Error);
  EXPECT_THROW(lattice(8, 1, -1.0).validate(), Error);
  EXPECT_THROW(lattice(8, 0).validate(), Error);
}

TEST(Dispersion, Frequencies) {
  EXPECT_NEAR(Dispersion::relativistic(1.0).omega(1.0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(Dispersion::schroedinger(2.0, fqtest::rotation_k()).omega(2.0), 1.0, 1e-15);
  EXPECT_TRUE(Dispersion::relativistic(0.0).excluded(0.0));
  EXPECT_FALSE(Dispersion::relativistic(1.0).excluded(0.0));
  EXPECT_THROW(Dispersion::schroedinger(1.0, RealMatrix::Identity(2, 2)).validate(2), Error);
}

TEST(CauchyData, SingleCosineModeIsPurePositiveFrequency) {
  const Lattice lat = lattice(64, 1);
  const Dispersion d = Dispersion::relativistic(1.0);
  const int n1 = 3;
  const double k1 = lat.k_value(n1);
  RealMatrix phi(64, 1), phidot(64, 1);
  for (int j = 0; j < 64; ++j) {
    const double x = j * lat.spacing();
    phi(j, 0) = std::cos(k1 * x);
    phidot(j, 0) = d.omega(k1) * std::sin(k1 * x);
  }
  const LatticeSolution s = modes::from_cauchy_data(phi, phidot, lat, d);
  for (int r = 0; r < 64; ++r) {
    const double expected = r == n1 ? 0.5 : 0.0;
    EXPECT_NEAR(std::abs(s.C(r, 0)), expected, 1e-12) << r;
  }
  EXPECT_LE(s.reality_residual(), 1e-12);
}

TEST(CauchyData, ZeroDataGivesZeroCoefficients) {
  const Lattice lat = lattice(16, 2);
  const auto s = modes::from_cauchy_data(RealMatrix::Zero(16, 2), RealMatrix::Zero(16, 2), lat,
                                         Dispersion::relativistic(1.0));
  EXPECT_EQ(max_abs(s.C), 0.0);
  EXPECT_EQ(max_abs(s.D), 0.0);
}

TEST(CauchyData, RoundTripSmoothData) {
  kernel::SeededRng rng(64);
  const Lattice lat = lattice(64, 2);
  const Dispersion d = Dispersion::relativistic(1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [phi, phidot] = smooth_data(rng, lat);
    const LatticeSolution s = modes::from_cauchy_data(phi, phidot, lat, d);
    const ComplexMatrix back = modes::synthesize(s, 0.0);
    const ComplexMatrix back_dot = modes::synthesize_velocity(s, 0.0);
    EXPECT_LE(max_abs(back.real() - phi), 1e-10);
    EXPECT_LE(max_abs(back.imag()), 1e-10);
    EXPECT_LE(max_abs(back_dot.real() - phidot), 1e-10);
    EXPECT_LE(s.reality_residual(), 1e-12);
  }
}

TEST(CauchyData, RoundTripRoughData) {
  kernel::SeededRng rng(65);
  const Lattice lat = lattice(64, 1);
  const RealMatrix phi = rng.matrix(64, 1);
  const RealMatrix phidot = rng.matrix(64, 1);
  const LatticeSolution s = modes::from_cauchy_data(phi, phidot, lat, Dispersion::relativistic(0.5));
  EXPECT_LE(max_abs(modes::synthesize(s, 0.0).real() - phi), 1e-10);
  EXPECT_LE(max_abs(modes::synthesize_velocity(s, 0.0).real() - phidot), 1e-10);
}

TEST(CauchyData, MasslessZeroModeIsSingular) {
  const Lattice lat = lattice(16, 1);
  RealMatrix phi = RealMatrix::Constant(16, 1, 1.0);
  try {
    modes::from_cauchy_data(phi, RealMatrix::Zero(16, 1), lat, Dispersion::relativistic(0.0));
    FAIL() << "expected ZeroModeSingular";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroModeSingular);
  }
}

TEST(CauchyData, SchroedingerVelocityMustObeyEquation) {
  const Lattice lat = lattice(16, 2);
  const Dispersion d = Dispersion::schroedinger(1.0, fqtest::rotation_k());
  kernel::SeededRng rng(3);
  const RealMatrix phi = rng.matrix(16, 2);
  EXPECT_NO_THROW(modes::from_cauchy_data(phi, RealMatrix(), lat, d));
  const LatticeSolution s = modes::from_cauchy_data(phi, RealMatrix(), lat, d);
  const RealMatrix good = modes::synthesize_velocity(s, 0.0).real();
  EXPECT_NO_THROW(modes::from_cauchy_data(phi, good, lat, d));
  EXPECT_THROW(modes::from_cauchy_data(phi, RealMatrix(good + RealMatrix::Ones(16, 2)), lat, d), Error);
}

TEST(CauchyData, SchroedingerSolutionMatchesEquationOfMotion) {
  // phi' = J phi_xx / 2m, checked by a spectral derivative at a later time.
  const Lattice lat = lattice(32, 2);
  const Dispersion d = Dispersion::schroedinger(1.5, fqtest::rotation_k());
  kernel::SeededRng rng(4);
  const auto [phi, unused] = smooth_data(rng, lat, 4);
  (void)unused;
  const LatticeSolution s = modes::from_cauchy_data(phi, RealMatrix(), lat, d);
  const double t = 0.4;
  const ComplexMatrix f = modes::synthesize(s, t);
  EXPECT_LE(max_abs(f.imag()), 1e-10);
  // Second difference in x is not exact; use the modes directly instead.
  LatticeSolution dxx = s;
  for (int r = 0; r < lat.sites; ++r) {
    const double k = lat.k_value(r);
    dxx.C.row(r) *= -k * k;
    dxx.D.row(r) *= -k * k;
  }
  const RealMatrix phi_xx = modes::synthesize(dxx, t).real();
  const RealMatrix rhs = phi_xx * d.J.transpose() / (2.0 * d.mass);
  EXPECT_LE(max_abs(modes::synthesize_velocity(s, t).real() - rhs), 1e-9);
}

TEST(Evolve, SolutionEvolutionMatchesSynthesisAtLaterTime) {
  kernel::SeededRng rng(5);
  const Lattice lat = lattice(32, 1);
  const auto [phi, phidot] = smooth_data(rng, lat);
  const LatticeSolution s = modes::from_cauchy_data(phi, phidot, lat, Dispersion::relativistic(1.0));
  const ComplexMatrix later = modes::synthesize(s, 0.7);
  EXPECT_LE(max_abs(modes::synthesize(modes::evolve(s, 0.7), 0.0) - later), 1e-12);
}

TEST(Split, RealSingleModeHasEqualNorms) {
  const Lattice lat = lattice(64, 1);
  const Dispersion d = Dispersion::relativistic(1.0);
  RealMatrix phi(64, 1);
  for (int j = 0; j < 64; ++j) phi(j, 0) = std::cos(2.0 * j * lat.spacing());
  const auto split = modes::frequency_split(modes::from_cauchy_data(phi, RealMatrix::Zero(64, 1), lat, d));
  EXPECT_GT(split.positive.norm, 0.0);
  EXPECT_NEAR(split.positive.norm, split.negative.norm, 1e-12);
}

TEST(Split, PositiveInputHasNoNegativePart) {
  kernel::SeededRng rng(9);
  const Lattice lat = lattice(32, 2);
  const auto st = modes::make_state(lat, Dispersion::relativistic(1.0), random_coeffs(rng, 32, 2), identity_metric(2));
  const auto split = modes::frequency_split(modes::as_solution(st));
  EXPECT_EQ(max_abs(split.negative.coeffs), 0.0);
  EXPECT_LE(max_abs(split.positive.coeffs - st.coeffs), 0.0);
}

TEST(Split, SchroedingerWithoutNegativePartKeepsEverything) {
  kernel::SeededRng rng(10);
  const Lattice lat = lattice(32, 2);
  const Dispersion d = Dispersion::schroedinger(1.0, fqtest::rotation_k());
  LatticeSolution s;
  s.lattice = lat;
  s.dispersion = d;
  s.C = random_coeffs(rng, 32, 2);
  s.D = ComplexMatrix::Zero(32, 2);
  const auto split = modes::frequency_split(s);
  EXPECT_LE(max_abs(modes::synthesize(modes::as_solution(split.positive), 0.3) - modes::synthesize(s, 0.3)), 1e-12);
  EXPECT_EQ(split.negative.norm, 0.0);
}

TEST(Split, ProjectionPairOnSeededSolutions) {
  kernel::SeededRng rng(50);
  const Lattice lat = lattice(32, 2);
  const Dispersion d = Dispersion::relativistic(0.8);
  for (int trial = 0; trial < 50; ++trial) {
    LatticeSolution s;
    s.lattice = lat;
    s.dispersion = d;
    s.C = random_coeffs(rng, 32, 2);
    s.D = random_coeffs(rng, 32, 2);
    const auto split = modes::frequency_split(s);
    LatticeSolution sum;
    sum.lattice = lat;
    sum.dispersion = d;
    sum.C = split.positive.coeffs;
    sum.D = split.negative.coeffs;
    const double t = rng.uniform(0.0, 2.0);
    EXPECT_LE(max_abs(modes::synthesize(sum, t) - modes::synthesize(s, t)), 1e-10) << trial;
    // Idempotence: splitting the positive part again returns it unchanged.
    const auto again = modes::frequency_split(modes::as_solution(split.positive));
    EXPECT_EQ(again.positive.coeffs, split.positive.coeffs);
    EXPECT_EQ(max_abs(again.negative.coeffs), 0.0);
  }
}

TEST(InnerProduct, UnitSingleMode) {
  const Lattice lat = lattice(64, 1);
  const Dispersion d = Dispersion::relativistic(1.0);
  ComplexMatrix c = ComplexMatrix::Zero(64, 1);
  c(3, 0) = 1.0;
  const auto f = modes::make_state(lat, d, c, identity_metric(1));
  const Complex ip = modes::inner_product(f, f, identity_metric(1));
  EXPECT_NEAR(ip.real(), lat.spacing() / d.omega(lat.k_value(3)), 1e-15);
  EXPECT_EQ(ip.imag(), 0.0);
  EXPECT_NEAR(f.norm * f.norm, ip.real(), 1e-15);
}

TEST(InnerProduct, Hermitian) {
  kernel::SeededRng rng(12);
  const Lattice lat = lattice(16, 2);
  const Dispersion d = Dispersion::relativistic(1.0);
  const auto f = modes::make_state(lat, d, random_coeffs(rng, 16, 2), identity_metric(2));
  const auto g = modes::make_state(lat, d, random_coeffs(rng, 16, 2), identity_metric(2));
  const Complex fg = modes::inner_product(f, g, identity_metric(2));
  const Complex gf = modes::inner_product(g, f, identity_metric(2));
  EXPECT_NEAR(std::abs(fg - std::conj(gf)), 0.0, 1e-14);
}

TEST(InnerProduct, TimeEvolutionOfOneArgumentOracle) {
  // (f_tau, g_tau) = (f, g): evaluated by direct phase rotation at two times.
  kernel::SeededRng rng(13);
  const Lattice lat = lattice(32, 1);
  const Dispersion d = Dispersion::relativistic(1.0);
  const auto h = identity_metric(1);
  const auto f = modes::make_state(lat, d, random_coeffs(rng, 32, 1), h);
  const auto g = modes::make_state(lat, d, random_coeffs(rng, 32, 1), h);
  const double tau = 0.7;
  EXPECT_LE(max_abs(direct_field(modes::evolve(f, tau), 0.0) - direct_field(f, tau)), 1e-11);
  const Complex before = modes::inner_product(f, g, h);
  const Complex after = modes::inner_product(modes::evolve(f, tau), modes::evolve(g, tau), h);
  EXPECT_LE(std::abs(after - before), 1e-10 * std::max(1.0, std::abs(before)));
}

TEST(InnerProduct, ConservedUnderEvolutionAndTranslation) {
  kernel::SeededRng rng(500);
  for (const auto& d : {Dispersion::relativistic(1.0), Dispersion::schroedinger(1.0, fqtest::rotation_k())}) {
    const Lattice lat = lattice(64, 2);
    const auto h = identity_metric(2);
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = modes::make_state(lat, d, random_coeffs(rng, 64, 2), h);
      const auto g = modes::make_state(lat, d, random_coeffs(rng, 64, 2), h);
      const Complex base = modes::inner_product(f, g, h);
      const double scale = std::max(1.0, std::abs(base));
      for (double tau : {0.1, 0.7, 3.0}) {
        const Complex moved = modes::inner_product(modes::evolve(f, tau), modes::evolve(g, tau), h);
        EXPECT_LE(std::abs(moved - base), 1e-10 * scale) << "tau " << tau;
      }
      const Complex shifted = modes::inner_product(modes::translate(f, 1), modes::translate(g, 1), h);
      EXPECT_LE(std::abs(shifted - base), 1e-10 * scale);
    }
  }
}

TEST(Translate, ShiftsTheFieldBySites) {
  kernel::SeededRng rng(14);
  const Lattice lat = lattice(16, 1);
  const auto f = modes::make_state(lat, Dispersion::relativistic(1.0), random_coeffs(rng, 16, 1), identity_metric(1));
  const ComplexMatrix before = direct_field(f, 0.0);
  const ComplexMatrix after = direct_field(modes::translate(f, 3), 0.0);
  for (int j = 0; j < 16; ++j) EXPECT_LE(std::abs(after(j, 0) - before((j - 3 + 16) % 16, 0)), 1e-12);
}

TEST(InnerProduct, InternalSymmetryInvariance) {
  // A non-orthogonal copy of so(3) with its own invariant metric.
  kernel::SeededRng rng(15);
  const RepData rep = reps::conjugate(fqtest::so3(), fqtest::random_invertible(rng, 3));
  const InvariantMetric h = reps::find_invariant_metric(rep);
  const Lattice lat = lattice(32, 3);
  const Dispersion d = Dispersion::relativistic(1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = modes::make_state(lat, d, random_coeffs(rng, 32, 3), h);
    const auto g = modes::make_state(lat, d, random_coeffs(rng, 32, 3), h);
    const Complex base = modes::inner_product(f, g, h);
    for (const auto& x : rep.generators) {
      const RealMatrix u = kernel::expm(x, rng.uniform(-2.0, 2.0));
      const Complex moved = modes::inner_product(modes::act_internal(f, u), modes::act_internal(g, u), h);
      EXPECT_LE(std::abs(moved - base), 1e-9 * std::max(1.0, std::abs(base)));
    }
  }
}

TEST(Content, Examples) {
  const RepData kg = catalog::builtin("complex-kg").fields[0].internal;
  const auto rel = modes::antiparticle_content(kg, Dispersion::relativistic(1.0), 64);
  ASSERT_TRUE(rel.has_value());
  EXPECT_NEAR(*rel, 0.5, 1e-10);
  const auto sch = modes::antiparticle_content(kg, Dispersion::schroedinger(1.0, RealMatrix()), 64);
  ASSERT_TRUE(sch.has_value());
  EXPECT_NEAR(*sch, 0.0, 1e-10);
  EXPECT_FALSE(modes::antiparticle_content(catalog::builtin("real-kg").fields[0].internal,
                                           Dispersion::relativistic(1.0), 64)
                   .has_value());
}

// Schroedinger-type candidates for a secretly complex rep: parity linear,
// time reversal antilinear. The antilinear map is conjugation in a basis
// where J is in canonical block form.
std::vector<DiscreteCandidate> schroedinger_candidates(const RealMatrix& j) {
  const int n = static_cast<int>(j.rows());
  Eigen::RealSchur<RealMatrix> schur(j);
  const RealMatrix q = schur.matrixU();
  RealMatrix flip = RealMatrix::Identity(n, n);
  for (int i = 1; i < n; i += 2) flip(i, i) = -1.0;
  DiscreteCandidate p;
  p.kind = CandidateKind::Parity;
  p.matrix = RealMatrix::Identity(n, n);
  DiscreteCandidate t;
  t.kind = CandidateKind::TimeReversal;
  t.matrix = q * flip * q.transpose();
  return {p, t};
}

// Relativistic candidates: both linear, so T commutes with J.
std::vector<DiscreteCandidate> relativistic_candidates(int n) {
  DiscreteCandidate p;
  p.kind = CandidateKind::Parity;
  p.matrix = RealMatrix::Identity(n, n);
  DiscreteCandidate t;
  t.kind = CandidateKind::TimeReversal;
  t.matrix = RealMatrix::Identity(n, n);
  return {p, t};
}

// Nonzero antiparticle content exactly when the discrete labels predict
// antiparticles, for every catalog field under both dynamics.
TEST(CrossModule, ContentAgreesWithLabels) {
  for (const auto& theory : catalog::builtin_names()) {
    for (const auto& f : catalog::builtin(theory).fields) {
      const RealType rt = reps::real_type(f.internal);
      for (DispersionKind kind : {DispersionKind::Relativistic, DispersionKind::Schroedinger}) {
        std::vector<DiscreteCandidate> candidates = f.discrete_candidates;
        Dispersion d = Dispersion::relativistic(1.0);
        // the field's own candidates belong to its own dynamics
        if (kind != f.dynamics && rt.J) candidates = relativistic_candidates(f.internal.dim);
        if (kind == DispersionKind::Schroedinger) {
          d = Dispersion::schroedinger(1.0, RealMatrix());
          if (rt.J && f.dynamics != DispersionKind::Schroedinger) {
            candidates = schroedinger_candidates(rt.J->J);
            ASSERT_EQ(discrete::commutation_sign(candidates[1], *rt.J), -1) << f.name;
          }
        }
        const bool predicted = discrete::predict_antiparticles(rt, discrete::classify(candidates, rt));
        const auto content = modes::antiparticle_content(f.internal, d, 16);
        const bool measured = content.value_or(0.0) > 1e-10;
        EXPECT_EQ(measured, predicted) << theory << "/" << f.name << " " << to_string(kind);
        EXPECT_EQ(content.has_value(), rt.tag == RealKind::SecretlyComplex) << theory << "/" << f.name;
      }
    }
  }
}

TEST(Csv, HeaderAndRowCount) {
  const Lattice lat = lattice(8, 2);
  const auto s = modes::from_cauchy_data(RealMatrix::Ones(8, 2), RealMatrix::Zero(8, 2), lat,
                                         Dispersion::relativistic(1.0));
  const std::string csv = modes::to_csv(s);
  EXPECT_EQ(csv.rfind("k_index,k_value,omega,component,re_C,im_C,re_D,im_D\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 8 * 2);
}

TEST(Names, DispersionKindRoundTrip) {
  for (auto k : {DispersionKind::Relativistic, DispersionKind::Schroedinger}) {
    EXPECT_EQ(dispersion_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(dispersion_kind_from_string("newtonian"), Error);
}

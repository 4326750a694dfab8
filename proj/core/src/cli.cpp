#include "fieldquanta/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "fieldquanta/cxify.hpp"

#ifndef FIELDQUANTA_VERSION
#define FIELDQUANTA_VERSION "0.0.0"
#endif

namespace fieldquanta {

void RunConfig::validate() const {
  if (builtin.has_value() == spec_path.has_value()) {
    throw Error(ErrorCode::InvalidInput, "give exactly one of --builtin or --spec");
  }
  if (format != "text" && format != "json") throw Error(ErrorCode::InvalidInput, "format must be text or json");
  if (!(tol.eps_rel > 0.0) || !(tol.eps_rank > 0.0)) throw Error(ErrorCode::InvalidInput, "tolerances must be > 0");
  if (modes) {
    Lattice lat;
    lat.sites = modes->sites;
    lat.length = modes->length;
    lat.validate();
  }
}

namespace cli {
namespace {

Rows rows_of(const RealMatrix& m) {
  Rows out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(m(r, c));
  }
  return out;
}

std::vector<double> values_of(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

// Exact zeros print as 0 rather than -0 and keep reports byte-stable.
double clean(double x) { return x == 0.0 ? 0.0 : x; }

std::string field_context(const FieldSpec& f, const std::string& what) { return "field '" + f.name + "': " + what; }

Dispersion dispersion_for(const FieldSpec& f) {
  if (f.dynamics == DispersionKind::Schroedinger) return Dispersion::schroedinger(f.mass, RealMatrix());
  return Dispersion::relativistic(f.mass);
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + cfg.out->string());
  file << text;
}

// ---- demo output helpers ---------------------------------------------------

std::string fmt(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << (std::abs(x) < 5e-5 ? 0.0 : x);
  return s.str();
}

std::string fmt(Complex z) {
  const double re = std::abs(z.real()) < 5e-5 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-5 ? 0.0 : z.imag();
  std::ostringstream s;
  s << std::fixed << std::setprecision(4);
  if (im == 0.0) {
    s << re;
  } else if (re == 0.0) {
    s << im << "i";
  } else {
    s << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  }
  return s.str();
}

template <typename M>
void print_matrix(std::ostream& out, const std::string& title, const M& m, const std::string& indent = "    ") {
  out << "  " << title << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << std::setw(8) << fmt(m(r, c));
    out << " ]\n";
  }
}

template <typename V>
std::string vec_text(const V& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v(i));
  return s + ")";
}

int demo_so2_vs_so3(std::ostream& out) {
  const TolerancePolicy tol;
  out << "SO(2) acting on R^2\n";
  const TheorySpec kg = catalog::builtin("complex-kg");
  const RepData& so2 = kg.fields[0].internal;
  print_matrix(out, "generator K", so2.generators[0]);
  const RealType rt = reps::real_type(so2, tol);
  out << "  commutant dim " << rt.commutant_dim << " -> " << to_string(rt.tag) << "\n";
  print_matrix(out, "complex structure J", rt.J->J);
  const SectorDecomposition d = cxify::decompose(so2, *rt.J, tol);
  // Scale so the first entry is 1, the textbook form of the eigenvectors.
  const ComplexVector vp = d.basis_plus.col(0) / d.basis_plus(0, 0);
  const ComplexVector vm = d.basis_minus.col(0) / d.basis_minus(0, 0);
  out << "  J v = +i v for v = " << vec_text(vp) << "   (particle sector)\n";
  out << "  J v = -i v for v = " << vec_text(vm) << "   (antiparticle sector)\n";
  for (double theta : {0.3, 1.7}) {
    const ComplexMatrix r = kernel::expm(so2.generators[0], theta).cast<Complex>();
    const Complex on_plus = (d.basis_plus.adjoint() * r * d.basis_plus)(0, 0);
    const Complex on_minus = (d.basis_minus.adjoint() * r * d.basis_minus)(0, 0);
    out << "  R(" << theta << ") acts as " << fmt(on_plus) << " = exp(+i " << theta << ") and " << fmt(on_minus)
        << " = exp(-i " << theta << ")\n";
  }
  out << "  conjugation swaps the sectors: " << (cxify::verify_conjugate_pair(d, tol) ? "yes" : "no") << "\n";

  out << "\nSO(3) acting on R^3\n";
  RepData so3;
  so3.dim = 3;
  so3.generators = catalog::so_generators(3);
  so3.group_label = "so(3)";
  for (std::size_t i = 0; i < so3.generators.size(); ++i) print_matrix(out, "generator " + std::to_string(i + 1), so3.generators[i]);
  const RealType rt3 = reps::real_type(so3, tol);
  const ComplexifiedRep c3 = cxify::complexify(so3);
  out << "  real commutant dim " << rt3.commutant_dim << " -> " << to_string(rt3.tag) << "\n";
  out << "  complexified commutant dim " << cxify::complex_commutant_dim(c3.operators, 3, tol)
      << " -> complex-irreducible: " << (cxify::check_irreducible_complex(c3, tol) ? "yes" : "no") << "\n";
  out << "  no J exists, so there is no particle/antiparticle split\n";
  return 0;
}

int demo_higgs(std::ostream& out) {
  const TolerancePolicy tol;
  const TheorySpec t = catalog::builtin("higgs-sector");
  const FieldSpec& h = *t.find("higgs");
  const double q = h.charges.at("u(1)");
  out << "Higgs field: C^2 realified to R^4, generators realify(-i X)\n";
  for (std::size_t i = 0; i < h.internal.generators.size(); ++i) {
    print_matrix(out, h.internal.generator_names[i], h.internal.generators[i]);
  }
  const RealVector phi0 = t.vacuum->phi0;
  out << "  potential alpha = " << h.potential->alpha << ", beta = " << h.potential->beta << "\n";
  out << "  vacuum phi0 = " << vec_text(phi0) << "\n";
  for (std::size_t i = 0; i < h.internal.generators.size(); ++i) {
    out << "  " << h.internal.generator_names[i] << " phi0 = " << vec_text(RealVector(h.internal.generators[i] * phi0)) << "\n";
  }
  const StabilizerAlgebra stab = breaking::stabilizer(h.internal, phi0, tol);
  out << "  stabilizer dim " << stab.basis.size() << "\n";
  for (Eigen::Index c = 0; c < stab.coefficients.cols(); ++c) {
    // Generators are stored as su(2):x, su(2):y, su(2):z, u(1); print u(1) first.
    const RealVector raw = stab.coefficients.col(c);
    RealVector coeff(4);
    coeff << raw(3), raw(0), raw(1), raw(2);
    if (coeff(0) != 0.0) coeff /= coeff(0);
    out << "  coefficients over {u(1), su(2):x, su(2):y, su(2):z}: " << vec_text(coeff) << "\n";
  }
  out << "  expected 1 - q sigma_z with q = " << q << ": " << vec_text(RealVector((RealVector(4) << 1, 0, 0, -q).finished()))
      << "\n";
  print_matrix(out, "stabilizer generator s", stab.basis[0] / stab.coefficients(3, 0));

  const auto ad = reps::adjoint_action(h.internal.generators, tol);
  RepData target;
  target.dim = static_cast<int>(ad.size());
  target.group_label = "ad su(2)+u(1)";
  for (std::size_t c = 0; c < stab.basis.size(); ++c) {
    RealMatrix a = RealMatrix::Zero(target.dim, target.dim);
    const RealMatrix x = stab.basis[c] / stab.coefficients(3, static_cast<Eigen::Index>(c));
    const auto fit = reps::fit_in_span(h.internal.generators, x);
    for (Eigen::Index i = 0; i < fit.coefficients.size(); ++i) a += fit.coefficients(i) * ad[static_cast<std::size_t>(i)];
    target.generators.push_back(a);
  }
  print_matrix(out, "s acting on su(2)+u(1) by the adjoint action", target.generators[0]);
  for (const auto& b : breaking::residual_decompose(stab, target, tol, 0)) {
    out << "  block dim " << b.dim << ", " << to_string(b.type.tag) << (b.trivial ? ", trivial" : "") << ", spanned by";
    for (Eigen::Index c = 0; c < b.basis.cols(); ++c) out << " " << vec_text(RealVector(b.basis.col(c)));
    out << "\n";
  }
  out << "  the 2-dim block is the charged vector pair; the trivial blocks are the two neutral vectors\n";
  return 0;
}

int demo_goldstone(std::ostream& out) {
  const TolerancePolicy tol;
  const QuarticPotential p = make_quartic(-1.0, 0.5, 3);
  out << "V = alpha |phi|^2 + beta |phi|^4 on R^3, alpha = -1, beta = 0.5\n";
  const VacuumSolution v = breaking::minimize(p);
  out << "  vacuum phi0 = " << vec_text(v.phi0) << " on the sphere of radius " << fmt(v.orbit_radius) << "\n";
  print_matrix(out, "analytic Hessian", p.hessian(v.phi0));
  print_matrix(out, "finite-difference Hessian", breaking::finite_difference_hessian(p, v.phi0));
  const MassSpectrum m = breaking::hessian_spectrum(p, v, tol);
  out << "  masses^2:";
  for (double x : m.masses_squared) out << " " << fmt(x);
  out << "\n  massless modes: " << m.massless_count << " (N - 1 = 2)\n";
  RepData so3;
  so3.dim = 3;
  so3.generators = catalog::so_generators(3);
  out << "  so(3) orbit dimension at phi0: " << breaking::orbit_dimension(so3, v.phi0, tol)
      << ", stabilizer dimension: " << breaking::stabilizer(so3, v.phi0, tol).basis.size() << "\n";
  return 0;
}

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Inconsistency: return 3;
    default: return 2;
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("FIELDQUANTA_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return end != nullptr && *end == '\0' ? static_cast<std::uint64_t>(v) : 0;
}

ModesOptions parse_modes(const std::string& text) {
  ModesOptions m;
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string sites = text.substr(0, comma);
    m.sites = std::stoi(sites, &used);
    if (used != sites.size()) throw std::invalid_argument(sites);
    if (comma != std::string::npos) {
      const std::string length = text.substr(comma + 1);
      m.length = std::stod(length, &used);
      if (used != length.size()) throw std::invalid_argument(length);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidInput, "--modes expects M or M,L, got '" + text + "'");
  }
  Lattice lat;
  lat.sites = m.sites;
  lat.length = m.length;
  lat.validate();
  return m;
}

std::string version() { return FIELDQUANTA_VERSION; }

TheorySpec load_input(const RunConfig& cfg) {
  if (cfg.builtin) {
    TheorySpec spec = catalog::builtin(*cfg.builtin);
    catalog::validate(spec, cfg.tol);
    return spec;
  }
  return catalog::load(*cfg.spec_path, cfg.tol);
}

FieldReport classify_field(const FieldSpec& f, const RunConfig& cfg) {
  const TolerancePolicy& tol = cfg.tol;
  FieldReport r;
  r.name = f.name;
  r.kind = to_string(f.kind);
  r.statistics = to_string(f.statistics);
  r.family = f.family;
  r.multiplicity = f.multiplicity;
  r.group_label = f.internal.group_label;
  r.internal_dim = f.internal.dim;
  r.generator_count = static_cast<int>(f.internal.generators.size());

  try {
    reps::validate(f.internal, tol);
    r.real_irreducible = reps::is_real_irreducible(f.internal, tol, cfg.seed);
    if (!r.real_irreducible) {
      throw Error(ErrorCode::IrreducibilityViolated,
                  "the internal action has a proper invariant subspace; describe each irreducible piece as its own field");
    }
    const cxify::TheoremCheck tc = cxify::check_complexification_theorem(f.internal, tol, cfg.seed);
    r.real_type = to_string(tc.type.tag);
    r.commutant_dim = tc.type.commutant_dim;
    r.quaternionic = tc.type.quaternionic;
    if (tc.type.J) r.complex_structure = rows_of(tc.type.J->J);
    r.theorem_branch = to_string(tc.branch);
    r.theorem_residual = tc.max_residual;
    r.complexified_irreducible = tc.complexified_irreducible;
    if (tc.type.tag == RealKind::SecretlyComplex) {
      r.sector_dim = cxify::decompose(f.internal, *tc.type.J, tol).sector_dim;
    }

    const DiscreteLabelSet labels = discrete::classify(f.discrete_candidates, tc.type, tol);
    for (Label l : labels.labels) r.labels.emplace_back(to_string(l));
    r.antiparticles = discrete::predict_antiparticles(tc.type, labels);
    r.antiparticle_reason = discrete::antiparticle_reason(tc.type, labels);

    if (f.potential) {
      const VacuumSolution v = breaking::minimize(*f.potential);
      const MassSpectrum m = breaking::hessian_spectrum(*f.potential, v, tol);
      r.masses_squared = m.masses_squared;
      r.massless_count = m.massless_count;
    } else {
      r.masses_squared.assign(static_cast<std::size_t>(f.internal.dim), clean(f.mass * f.mass));
      r.massless_count = f.mass == 0.0 ? f.internal.dim : 0;
    }

    if (f.kind == FieldKind::GaugeVector) {
      const int n = f.internal.dim;
      r.gauge_dof = DofCount{4 * n, 3 * n, 2 * n, n};
    }

    r.evidence = {"complexification dichotomy", "discrete label table"};
    if (cfg.modes) {
      ModesCheck mc;
      mc.sites = cfg.modes->sites;
      mc.length = cfg.modes->length;
      mc.dynamics = to_string(f.dynamics);
      mc.antiparticle_content =
          modes::antiparticle_content(f.internal, dispersion_for(f), mc.sites, mc.length, tol, cfg.seed);
      const bool content = mc.antiparticle_content.value_or(0.0) > 1e-10;
      mc.agrees_with_labels = content == r.antiparticles;
      r.modes = mc;
      r.evidence.push_back("lattice antiparticle content");
    }
  } catch (const Error& e) {
    throw Error(e.code(), field_context(f, e.message()));
  }
  return r;
}

SpectrumReport classify(const TheorySpec& spec, const RunConfig& cfg) {
  const TolerancePolicy& tol = cfg.tol;
  SpectrumReport rep;
  rep.theory = spec.name;
  rep.provenance = {version(), cfg.seed, tol.eps_rel, tol.eps_rank};

  for (const auto& f : spec.fields) {
    FieldReport fr = classify_field(f, cfg);
    rep.checks.push_back({"field '" + f.name + "': exactly one complexification branch",
                          fr.theorem_branch != to_string(cxify::TheoremBranch::Violated), fr.theorem_branch});
    if (fr.real_type == to_string(RealKind::SecretlyComplex)) {
      rep.checks.push_back({"field '" + f.name + "': sectors split the complexification evenly",
                            2 * fr.sector_dim == fr.internal_dim,
                            std::to_string(fr.sector_dim) + " + " + std::to_string(fr.sector_dim)});
    }
    if (fr.modes) {
      std::ostringstream detail;
      detail << "content ";
      if (fr.modes->antiparticle_content) {
        detail << *fr.modes->antiparticle_content;
      } else {
        detail << "n/a";
      }
      detail << ", labels say " << (fr.antiparticles ? "antiparticles" : "none");
      rep.checks.push_back({"field '" + f.name + "': lattice content matches the label prediction",
                            fr.modes->agrees_with_labels, detail.str()});
    }
    if (fr.gauge_dof) {
      rep.gauge_physical_dof.push_back(fr.gauge_dof->physical);
      rep.gauge_absorbed_dof += fr.gauge_dof->absorbed;
    }
    rep.fields.push_back(std::move(fr));
  }

  if (spec.vacuum) {
    const FieldSpec& f = *spec.find(spec.vacuum->field);
    try {
      const QuarticPotential& p = *f.potential;
      VacuumSolution v;
      v.phi0 = spec.vacuum->phi0;
      const double grad = p.gradient(v.phi0).norm();
      if (grad > std::sqrt(tol.eps_rel) * std::max(1.0, p.hessian(v.phi0).norm())) {
        throw Error(ErrorCode::NotAMinimum, "phi0 is not a critical point of the potential");
      }
      const MassSpectrum m = breaking::hessian_spectrum(p, v, tol);
      const StabilizerAlgebra stab = breaking::stabilizer(f.internal, v.phi0, tol);

      BreakingReport b;
      b.field = f.name;
      for (Eigen::Index i = 0; i < v.phi0.size(); ++i) b.phi0.push_back(clean(v.phi0(i)));
      b.masses_squared = m.masses_squared;
      b.goldstone_count = m.massless_count;
      b.finite_difference_agreement = m.finite_difference_agreement;
      b.orbit_dim = breaking::orbit_dimension(f.internal, v.phi0, tol);
      b.algebra_basis = f.internal.generator_names;
      if (b.algebra_basis.empty()) {
        for (std::size_t i = 0; i < f.internal.generators.size(); ++i) b.algebra_basis.push_back("X" + std::to_string(i));
      }
      for (Eigen::Index c = 0; c < stab.coefficients.cols(); ++c) {
        // Fix the sign: largest-magnitude coefficient positive.
        RealVector coeff = stab.coefficients.col(c);
        Eigen::Index arg = 0;
        coeff.cwiseAbs().maxCoeff(&arg);
        if (coeff(arg) < 0.0) coeff = -coeff;
        for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) = clean(coeff(i));
        b.stabilizer_coefficients.push_back(values_of(coeff));
      }
      b.subalgebra_residual = breaking::subalgebra_residual(stab);

      if (!f.internal.generators.empty()) {
        const auto ad = reps::adjoint_action(f.internal.generators, tol);
        RepData target;
        target.dim = static_cast<int>(ad.size());
        target.group_label = "adjoint";
        for (Eigen::Index c = 0; c < stab.coefficients.cols(); ++c) {
          RealMatrix a = RealMatrix::Zero(target.dim, target.dim);
          for (std::size_t i = 0; i < ad.size(); ++i) a += stab.coefficients(static_cast<Eigen::Index>(i), c) * ad[i];
          target.generators.push_back(a);
        }
        for (const auto& blk : breaking::residual_decompose(stab, target, tol, cfg.seed)) {
          BlockReport br;
          br.dim = blk.dim;
          br.real_type = to_string(blk.type.tag);
          br.trivial = blk.trivial;
          RealMatrix cols = blk.basis;
          for (Eigen::Index i = 0; i < cols.size(); ++i) cols.data()[i] = clean(cols.data()[i]);
          br.basis = rows_of(cols.transpose());
          b.residual_blocks.push_back(std::move(br));
        }
      }

      std::vector<int> gauged;
      for (const auto& factor : spec.factors) {
        const auto it = f.factor_actions.find(factor.name);
        if (it == f.factor_actions.end()) {
          b.unbroken_factors.push_back(factor.name);
        } else if (factor.gauged) {
          gauged.insert(gauged.end(), it->second.begin(), it->second.end());
        }
      }
      RepData gauged_rep;
      gauged_rep.dim = f.internal.dim;
      for (int i : gauged) gauged_rep.generators.push_back(f.internal.generators[static_cast<std::size_t>(i)]);
      b.massive_vectors = breaking::orbit_dimension(gauged_rep, v.phi0, tol);
      b.physical_scalars = f.internal.dim - b.massive_vectors;

      rep.checks.push_back({"breaking: massless modes equal the orbit dimension", b.goldstone_count == b.orbit_dim,
                            std::to_string(b.goldstone_count) + " vs " + std::to_string(b.orbit_dim)});
      rep.checks.push_back({"breaking: stabilizer closes under commutators", b.subalgebra_residual <= 1e-8, ""});
      rep.checks.push_back({"breaking: stabilizer and orbit dimensions add up",
                            static_cast<int>(stab.basis.size()) + b.orbit_dim ==
                                static_cast<int>(f.internal.generators.size()),
                            ""});
      rep.breaking = std::move(b);
    } catch (const Error& e) {
      throw Error(e.code(), "vacuum: " + e.message());
    }
  }
  return rep;
}

int classify_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    const TheorySpec spec = load_input(cfg);
    const SpectrumReport rep = classify(spec, cfg);
    write_output(cfg, cfg.format == "json" ? report::to_json(rep) : report::to_text(rep), out);
    if (!rep.all_checks_passed()) {
      err << "error: a cross-module consistency check failed (see the checks section)\n";
      return 3;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int validate_command(const std::filesystem::path& spec, std::ostream& out, std::ostream& err) {
  try {
    const TheorySpec t = catalog::load(spec);
    out << spec.string() << ": valid (" << t.fields.size() << " field" << (t.fields.size() == 1 ? "" : "s") << ")\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

std::vector<std::string> demo_names() { return {"so2-vs-so3", "higgs", "goldstone"}; }

int demo_command(const std::string& name, std::ostream& out, std::ostream& err) {
  try {
    if (name == "so2-vs-so3") return demo_so2_vs_so3(out);
    if (name == "higgs") return demo_higgs(out);
    if (name == "goldstone") return demo_goldstone(out);
    err << "error: unknown demo '" << name << "' (choose so2-vs-so3, higgs or goldstone)\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int export_command(const std::string& builtin, const std::optional<std::filesystem::path>& out_path,
                   std::ostream& out, std::ostream& err) {
  try {
    const TheorySpec spec = catalog::builtin(builtin);
    if (out_path) {
      catalog::save(spec, *out_path);
    } else {
      out << catalog::to_json(spec);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int builtins_command(std::ostream& out) {
  for (const auto& name : catalog::builtin_names()) out << name << "\n";
  return 0;
}

int modes_command(const RunConfig& cfg, const std::string& field, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    const TheorySpec spec = load_input(cfg);
    const FieldSpec* f = field.empty() ? &spec.fields.front() : spec.find(field);
    if (f == nullptr) throw Error(ErrorCode::UnknownName, "no field named '" + field + "'");
    const ModesOptions opts = cfg.modes.value_or(ModesOptions{});
    Lattice lat;
    lat.sites = opts.sites;
    lat.length = opts.length;
    lat.internal_dim = f->internal.dim;

    Dispersion d = dispersion_for(*f);
    if (d.kind == DispersionKind::Schroedinger) {
      const RealType rt = reps::real_type(f->internal, cfg.tol, cfg.seed);
      if (!rt.J) throw Error(ErrorCode::NotSecretlyComplex, "Schroedinger dynamics need a complex structure");
      d.J = rt.J->J;
    }

    // A few low modes with seeded amplitudes; no k = 0 content when massless.
    kernel::SeededRng rng(cfg.seed);
    RealMatrix phi = RealMatrix::Zero(lat.sites, lat.internal_dim);
    RealMatrix phidot = RealMatrix::Zero(lat.sites, lat.internal_dim);
    const int first = d.excluded(0.0) ? 1 : 0;
    for (int n = first; n <= std::min(4, lat.sites / 2 - 1); ++n) {
      const double k = 2.0 * std::numbers::pi * n / lat.length;
      for (int a = 0; a < lat.internal_dim; ++a) {
        const double c1 = rng.normal(), s1 = rng.normal(), c2 = rng.normal(), s2 = rng.normal();
        for (int j = 0; j < lat.sites; ++j) {
          const double x = k * j * lat.spacing();
          phi(j, a) += c1 * std::cos(x) + s1 * std::sin(x);
          phidot(j, a) += c2 * std::cos(x) + s2 * std::sin(x);
        }
      }
    }
    const RealMatrix none;
    const LatticeSolution s = d.kind == DispersionKind::Relativistic
                                  ? modes::from_cauchy_data(phi, phidot, lat, d, cfg.tol)
                                  : modes::from_cauchy_data(phi, none, lat, d, cfg.tol);
    write_output(cfg, modes::to_csv(s), out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli
}  // namespace fieldquanta

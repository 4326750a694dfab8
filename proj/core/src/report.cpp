#include "fieldquanta/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "fieldquanta/errors.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN
template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};
NLOHMANN_JSON_NAMESPACE_END

namespace fieldquanta {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DofCount, classical, after_constraint, physical, absorbed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ModesCheck, sites, length, dynamics, antiparticle_content, agrees_with_labels)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FieldReport, name, kind, statistics, family, multiplicity, group_label,
                                   internal_dim, generator_count, real_irreducible, real_type, commutant_dim,
                                   quaternionic, complex_structure, theorem_branch, theorem_residual,
                                   complexified_irreducible, sector_dim, labels, antiparticles,
                                   antiparticle_reason, masses_squared, massless_count, gauge_dof, modes, evidence)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BlockReport, dim, real_type, trivial, basis)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BreakingReport, field, phi0, masses_squared, goldstone_count, orbit_dim,
                                   finite_difference_agreement, algebra_basis, stabilizer_coefficients,
                                   subalgebra_residual, residual_blocks, unbroken_factors, massive_vectors,
                                   physical_scalars)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckReport, name, passed, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Provenance, tool_version, seed, eps_rel, eps_rank)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SpectrumReport, schema, theory, fields, gauge_physical_dof, gauge_absorbed_dof,
                                   breaking, checks, provenance)

bool SpectrumReport::all_checks_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace report {
namespace {

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string numbers(const std::vector<double>& v, int precision = 6) {
  std::ostringstream out;
  out << std::setprecision(precision);
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ')';
  return out.str();
}

std::string ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

// Compress long runs of equal masses: "0 x3, 2".
std::string masses(const std::vector<double>& m) {
  if (m.empty()) return "-";
  std::ostringstream out;
  out << std::setprecision(6);
  std::size_t i = 0;
  bool first = true;
  while (i < m.size()) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    out << (first ? "" : ", ") << m[i];
    if (j - i > 1) out << " x" << (j - i);
    first = false;
    i = j;
  }
  return out.str();
}

}  // namespace

std::string to_json(const SpectrumReport& r) {
  const nlohmann::json j = r;
  return j.dump(2) + "\n";
}

SpectrumReport from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const std::string schema = j.at("schema").get<std::string>();
    if (schema != "fieldquanta-report/1") throw Error(ErrorCode::ParseError, "unsupported report schema '" + schema + "'");
    return j.get<SpectrumReport>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
}

std::string to_text(const SpectrumReport& r) {
  std::ostringstream out;
  out << "theory: " << r.theory << "\n";
  out << "seed " << r.provenance.seed << ", eps_rel " << r.provenance.eps_rel << ", eps_rank "
      << r.provenance.eps_rank << ", fieldquanta " << r.provenance.tool_version << "\n";

  for (const auto& f : r.fields) {
    out << "\nfield " << f.name << " (" << f.kind << ", " << f.statistics;
    if (f.multiplicity > 1) out << ", x" << f.multiplicity;
    out << ")\n";
    out << "  internal        R^" << f.internal_dim << " under " << (f.group_label.empty() ? "-" : f.group_label)
        << " (" << f.generator_count << " generators), "
        << (f.real_irreducible ? "real-irreducible" : "reducible") << "\n";
    out << "  type            " << f.real_type << " (commutant dim " << f.commutant_dim
        << (f.quaternionic ? ", quaternionic" : "") << ")\n";
    out << "  complexified    " << f.theorem_branch << ", residual " << std::setprecision(3) << f.theorem_residual
        << std::setprecision(6) << "\n";
    if (f.sector_dim > 0) {
      out << "  sectors         particle C^" << f.sector_dim << " + antiparticle C^" << f.sector_dim << "\n";
    }
    out << "  labels          " << (f.labels.empty() ? "-" : join(f.labels)) << "\n";
    out << "  antiparticles   " << (f.antiparticles ? "yes" : "no") << ": " << f.antiparticle_reason << "\n";
    out << "  masses^2        " << masses(f.masses_squared) << " (" << f.massless_count << " massless)\n";
    if (f.gauge_dof) {
      const auto& d = *f.gauge_dof;
      out << "  gauge dof       " << d.classical << " classical, " << d.after_constraint << " after constraint, "
          << d.physical << " physical, " << d.absorbed << " absorbed\n";
    }
    if (f.modes) {
      const auto& m = *f.modes;
      out << "  lattice check   M=" << m.sites << " L=" << m.length << " " << m.dynamics << ": antiparticle content ";
      if (m.antiparticle_content) {
        out << *m.antiparticle_content;
      } else {
        out << "n/a";
      }
      out << (m.agrees_with_labels ? " (agrees with labels)" : " (DISAGREES with labels)") << "\n";
    }
    if (!f.evidence.empty()) out << "  checked by      " << join(f.evidence, "; ") << "\n";
  }

  if (!r.gauge_physical_dof.empty()) {
    out << "\ngauge bosons: physical dof " << ints(r.gauge_physical_dof) << "; absorbed " << r.gauge_absorbed_dof
        << "\n";
  }

  if (r.breaking) {
    const auto& b = *r.breaking;
    out << "\nsymmetry breaking on " << b.field << "\n";
    out << "  vacuum          phi0 = " << numbers(b.phi0) << "\n";
    out << "  masses^2        " << masses(b.masses_squared) << " (" << b.goldstone_count << " Goldstone, FD agreement "
        << std::setprecision(2) << b.finite_difference_agreement << std::setprecision(6) << ")\n";
    out << "  orbit dim       " << b.orbit_dim << "\n";
    out << "  stabilizer      dim " << b.stabilizer_coefficients.size() << " over {" << join(b.algebra_basis) << "}\n";
    for (const auto& row : b.stabilizer_coefficients) out << "                  " << numbers(row) << "\n";
    out << "  residual blocks";
    if (b.residual_blocks.empty()) out << " -";
    out << "\n";
    for (const auto& blk : b.residual_blocks) {
      out << "                  dim " << blk.dim << ", " << blk.real_type << (blk.trivial ? ", trivial" : "") << "\n";
    }
    out << "  unbroken        " << (b.unbroken_factors.empty() ? "-" : join(b.unbroken_factors)) << "\n";
    out << "  after breaking  " << b.massive_vectors << " massive vector(s), " << b.physical_scalars
        << " physical scalar(s)\n";
  }

  out << "\nchecks\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace report
}  // namespace fieldquanta

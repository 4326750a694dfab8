#include "fieldquanta/catalog.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace fieldquanta {

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::Scalar: return "scalar";
    case FieldKind::WeylLeft: return "weyl-left";
    case FieldKind::WeylRight: return "weyl-right";
    case FieldKind::Majorana: return "majorana";
    case FieldKind::Vector: return "vector";
    case FieldKind::GaugeVector: return "gauge-vector";
  }
  return "?";
}

std::string_view to_string(Statistics s) { return s == Statistics::Bose ? "bose" : "fermi"; }

FieldKind field_kind_from_string(std::string_view text) {
  for (auto k : {FieldKind::Scalar, FieldKind::WeylLeft, FieldKind::WeylRight, FieldKind::Majorana,
                 FieldKind::Vector, FieldKind::GaugeVector}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown field kind '" + std::string(text) + "'");
}

Statistics statistics_from_string(std::string_view text) {
  if (text == "bose") return Statistics::Bose;
  if (text == "fermi") return Statistics::Fermi;
  throw Error(ErrorCode::ParseError, "unknown statistics '" + std::string(text) + "'");
}

const FieldSpec* TheorySpec::find(std::string_view field_name) const {
  for (const auto& f : fields) {
    if (f.name == field_name) return &f;
  }
  return nullptr;
}

namespace catalog {
namespace {

const Complex I_UNIT(0.0, 1.0);

ComplexMatrix pauli(int axis) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  switch (axis) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I_UNIT, I_UNIT, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw Error(ErrorCode::InvalidInput, "Pauli axis must be 1, 2 or 3");
  }
  return s;
}

ComplexMatrix gell_mann(int a) {
  ComplexMatrix l = ComplexMatrix::Zero(3, 3);
  switch (a) {
    case 1: l(0, 1) = l(1, 0) = 1.0; break;
    case 2: l(0, 1) = -I_UNIT; l(1, 0) = I_UNIT; break;
    case 3: l(0, 0) = 1.0; l(1, 1) = -1.0; break;
    case 4: l(0, 2) = l(2, 0) = 1.0; break;
    case 5: l(0, 2) = -I_UNIT; l(2, 0) = I_UNIT; break;
    case 6: l(1, 2) = l(2, 1) = 1.0; break;
    case 7: l(1, 2) = -I_UNIT; l(2, 1) = I_UNIT; break;
    case 8:
      l(0, 0) = l(1, 1) = 1.0 / std::sqrt(3.0);
      l(2, 2) = -2.0 / std::sqrt(3.0);
      break;
    default: throw Error(ErrorCode::InvalidInput, "Gell-Mann index must be 1..8");
  }
  return l;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

RealMatrix rotation_generator() {
  RealMatrix k(2, 2);
  k << 0, -1, 1, 0;
  return k;
}

// Complex conjugation in the realified layout (x0, y0, x1, y1, ...).
RealMatrix conjugation(int complex_dim) {
  RealMatrix c = RealMatrix::Zero(2 * complex_dim, 2 * complex_dim);
  for (int i = 0; i < complex_dim; ++i) {
    c(2 * i, 2 * i) = 1.0;
    c(2 * i + 1, 2 * i + 1) = -1.0;
  }
  return c;
}

DiscreteCandidate candidate(CandidateKind kind, RealMatrix m, std::string note = {}) {
  DiscreteCandidate c;
  c.kind = kind;
  c.matrix = std::move(m);
  c.note = std::move(note);
  return c;
}

RealMatrix identity(int n) { return RealMatrix::Identity(n, n); }

// Parity and time reversal both act as the identity on the internal space.
std::vector<DiscreteCandidate> plain_candidates(int n) {
  return {candidate(CandidateKind::Parity, identity(n)), candidate(CandidateKind::TimeReversal, identity(n))};
}

// A complex scalar-like field: phi -> phi under P, phi -> phi* or phi under T,
// phi -> phi* as an internal map.
std::vector<DiscreteCandidate> charged_candidates(int complex_dim) {
  const int n = 2 * complex_dim;
  return {candidate(CandidateKind::Parity, identity(n)),
          candidate(CandidateKind::TimeReversal, conjugation(complex_dim), "phi -> phi*"),
          candidate(CandidateKind::TimeReversal, identity(n)),
          candidate(CandidateKind::Internal, conjugation(complex_dim), "phi -> phi*")};
}

// Weyl fields: the mirror map lands in the other chirality unless combined
// with conjugation.
std::vector<DiscreteCandidate> weyl_candidates(int complex_dim) {
  return {candidate(CandidateKind::Parity, conjugation(complex_dim), "mirror composed with conjugation"),
          candidate(CandidateKind::TimeReversal, conjugation(complex_dim))};
}

RepData so2_rep() {
  RepData r;
  r.dim = 2;
  r.generators = {rotation_generator()};
  r.group_label = "so(2)";
  r.charge = 1.0;
  r.generator_names = {"so(2)"};
  return r;
}

RepData trivial_rep(int dim) {
  RepData r;
  r.dim = dim;
  r.group_label = "trivial";
  return r;
}

RepData so_rep(int n) {
  RepData r;
  r.dim = n;
  r.generators = so_generators(n);
  r.group_label = "so(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) r.generator_names.push_back(r.group_label + ":" + std::to_string(i) + std::to_string(j));
  }
  return r;
}

FieldSpec make_field(std::string name, FieldKind kind, RepData rep, std::vector<DiscreteCandidate> cands,
                     double mass = 1.0) {
  FieldSpec f;
  f.name = std::move(name);
  f.kind = kind;
  f.statistics = (kind == FieldKind::WeylLeft || kind == FieldKind::WeylRight || kind == FieldKind::Majorana)
                     ? Statistics::Fermi
                     : Statistics::Bose;
  f.family = f.name;
  f.mass = mass;
  f.internal = std::move(rep);
  f.discrete_candidates = std::move(cands);
  return f;
}

TheorySpec single(std::string name, FieldSpec field, std::vector<SymmetryFactor> factors = {}) {
  TheorySpec t;
  t.name = std::move(name);
  t.factors = std::move(factors);
  t.fields.push_back(std::move(field));
  return t;
}

// A single so(2)-charged field with the so(2) factor declared.
TheorySpec so2_theory(std::string name, FieldKind kind, std::vector<DiscreteCandidate> cands, double mass = 1.0) {
  FieldSpec f = make_field("phi", kind, so2_rep(), std::move(cands), mass);
  f.factor_actions["so(2)"] = {0};
  f.charges["so(2)"] = 1.0;
  return single(std::move(name), std::move(f), {{"so(2)", 1, false}});
}

TheorySpec so_n_theory(std::string name, FieldKind kind, int n, double mass, std::string gauges = {}) {
  FieldSpec f = make_field(kind == FieldKind::GaugeVector ? "A" : "phi", kind, so_rep(n), plain_candidates(n), mass);
  std::vector<SymmetryFactor> factors;
  if (n >= 2) {
    const std::string factor = "so(" + std::to_string(n) + ")";
    factors.push_back({factor, n * (n - 1) / 2, false});
    std::vector<int> idx(static_cast<std::size_t>(n * (n - 1) / 2));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    f.factor_actions[factor] = idx;
  }
  f.gauges = std::move(gauges);
  return single(std::move(name), std::move(f), std::move(factors));
}

// ---- Standard Model pieces -------------------------------------------------

struct Piece {
  std::string factor;
  RealMatrix generator;
  std::string name;
};

RepData assemble(int dim, const std::vector<Piece>& pieces, FieldSpec& f, std::string label) {
  RepData r;
  r.dim = dim;
  r.group_label = std::move(label);
  for (const auto& p : pieces) {
    f.factor_actions[p.factor].push_back(static_cast<int>(r.generators.size()));
    r.generators.push_back(p.generator);
    r.generator_names.push_back(p.name);
  }
  return r;
}

std::vector<Piece> su2_pieces(int other_dim) {
  std::vector<Piece> out;
  const char* axes[] = {"x", "y", "z"};
  for (int a = 1; a <= 3; ++a) {
    const ComplexMatrix m = kron(pauli(a), ComplexMatrix::Identity(other_dim, other_dim));
    out.push_back({"su(2)", reps::realify(-I_UNIT * m), std::string("su(2):") + axes[a - 1]});
  }
  return out;
}

std::vector<Piece> su3_pieces(int other_dim) {
  std::vector<Piece> out;
  for (int a = 1; a <= 8; ++a) {
    const ComplexMatrix m = kron(ComplexMatrix::Identity(other_dim, other_dim), gell_mann(a));
    out.push_back({"su(3)", reps::realify(-I_UNIT * m), "su(3):" + std::to_string(a)});
  }
  return out;
}

Piece u1_piece(int complex_dim, double q) { return {"u(1)", u1_generator(complex_dim, q), "u(1)"}; }

FieldSpec matter(std::string name, FieldKind kind, int complex_dim, std::vector<Piece> pieces, double q,
                 std::string label) {
  FieldSpec f = make_field(name, kind, RepData{}, {}, 0.0);
  pieces.push_back(u1_piece(complex_dim, q));
  f.internal = assemble(2 * complex_dim, pieces, f, std::move(label));
  f.internal.charge = q;
  f.charges["u(1)"] = q;
  f.multiplicity = 3;
  if (kind == FieldKind::Scalar) {
    f.discrete_candidates = charged_candidates(complex_dim);
  } else {
    f.discrete_candidates = weyl_candidates(complex_dim);
  }
  return f;
}

FieldSpec gauge_field(std::string name, const std::string& factor, const std::vector<Piece>& fundamental) {
  FieldSpec f;
  std::vector<RealMatrix> gens;
  for (const auto& p : fundamental) gens.push_back(p.generator);
  const int n = static_cast<int>(gens.size());
  f = make_field(std::move(name), FieldKind::GaugeVector, RepData{}, plain_candidates(n), 0.0);
  std::vector<Piece> adjoint;
  const auto ad = reps::adjoint_action(gens);
  for (std::size_t i = 0; i < ad.size(); ++i) adjoint.push_back({factor, ad[i], fundamental[i].name});
  f.internal = assemble(n, adjoint, f, "ad " + factor);
  f.gauges = factor;
  f.family = "gauge";
  return f;
}

FieldSpec u1_gauge_field() {
  FieldSpec f = make_field("gauge-u1", FieldKind::GaugeVector, trivial_rep(1), plain_candidates(1), 0.0);
  f.internal.group_label = "ad u(1)";
  f.gauges = "u(1)";
  f.family = "gauge";
  return f;
}

// Hypercharges follow the common Q = T3 + Y convention.
constexpr double kLeptonLeftY = -0.5;
constexpr double kQuarkLeftY = 1.0 / 6.0;
constexpr double kLeptonRightY = -1.0;
constexpr double kQuarkRightY = 2.0 / 3.0;
constexpr double kHiggsY = 0.5;
constexpr double kHiggsAlpha = -1.0;
constexpr double kHiggsBeta = 0.5;

FieldSpec higgs_field() {
  FieldSpec f = matter("higgs", FieldKind::Scalar, 2, su2_pieces(1), kHiggsY, "su(2)+u(1)");
  f.multiplicity = 1;
  f.potential = make_quartic(kHiggsAlpha, kHiggsBeta, 4);
  return f;
}

VacuumSpec higgs_vacuum(const FieldSpec& higgs) {
  return {higgs.name, breaking::minimize(*higgs.potential).phi0};
}

TheorySpec standard_model() {
  TheorySpec t;
  t.name = "standard-model";
  t.factors = {{"su(3)", 8, true}, {"su(2)", 3, true}, {"u(1)", 1, true}};

  t.fields.push_back(matter("lepton-left", FieldKind::WeylLeft, 2, su2_pieces(1), kLeptonLeftY, "su(2)+u(1)"));
  {
    auto pieces = su2_pieces(3);
    for (auto& p : su3_pieces(2)) pieces.push_back(std::move(p));
    t.fields.push_back(matter("quark-left", FieldKind::WeylLeft, 6, pieces, kQuarkLeftY, "su(2)+su(3)+u(1)"));
  }
  t.fields.push_back(matter("lepton-right", FieldKind::WeylRight, 1, {}, kLeptonRightY, "u(1)"));
  t.fields.push_back(matter("quark-right", FieldKind::WeylRight, 3, su3_pieces(1), kQuarkRightY, "su(3)+u(1)"));
  t.fields.push_back(gauge_field("gauge-su2", "su(2)", su2_pieces(1)));
  t.fields.push_back(gauge_field("gauge-su3", "su(3)", su3_pieces(1)));
  t.fields.push_back(u1_gauge_field());
  t.fields.push_back(higgs_field());
  t.vacuum = higgs_vacuum(t.fields.back());
  return t;
}

TheorySpec higgs_sector() {
  TheorySpec t;
  t.name = "higgs-sector";
  t.factors = {{"su(2)", 3, true}, {"u(1)", 1, true}};
  t.fields.push_back(gauge_field("gauge-su2", "su(2)", su2_pieces(1)));
  t.fields.push_back(u1_gauge_field());
  t.fields.push_back(higgs_field());
  t.vacuum = higgs_vacuum(t.fields.back());
  return t;
}

bool parse_kg_internal(std::string_view name, int& n) {
  constexpr std::string_view prefix = "kg-internal(";
  if (name.substr(0, prefix.size()) != prefix || name.back() != ')') return false;
  const std::string digits(name.substr(prefix.size(), name.size() - prefix.size() - 1));
  if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos) return false;
  n = std::stoi(digits);
  return n >= 1;
}

bool same_matrix(const RealMatrix& a, const RealMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

bool same_rep(const RepData& a, const RepData& b) {
  if (a.dim != b.dim || a.group_label != b.group_label || a.charge != b.charge ||
      a.generator_names != b.generator_names || a.generators.size() != b.generators.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    if (!same_matrix(a.generators[i], b.generators[i])) return false;
  }
  return true;
}

bool same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a.name != b.name || a.kind != b.kind || a.statistics != b.statistics || a.family != b.family ||
      a.multiplicity != b.multiplicity || a.dynamics != b.dynamics || a.mass != b.mass ||
      a.factor_actions != b.factor_actions || a.charges != b.charges || a.gauges != b.gauges ||
      !same_rep(a.internal, b.internal) || a.discrete_candidates.size() != b.discrete_candidates.size() ||
      a.potential.has_value() != b.potential.has_value()) {
    return false;
  }
  for (std::size_t i = 0; i < a.discrete_candidates.size(); ++i) {
    const auto& x = a.discrete_candidates[i];
    const auto& y = b.discrete_candidates[i];
    if (x.kind != y.kind || x.involution_phase != y.involution_phase || x.note != y.note ||
        !same_matrix(x.matrix, y.matrix)) {
      return false;
    }
  }
  if (a.potential) {
    const auto& p = *a.potential;
    const auto& q = *b.potential;
    if (p.alpha != q.alpha || p.beta != q.beta || p.dim != q.dim || !same_matrix(p.metric.h, q.metric.h)) return false;
  }
  return true;
}

}  // namespace

RealMatrix pauli_generator(int axis) { return reps::realify(-I_UNIT * pauli(axis)); }

RealMatrix u1_generator(int complex_dim, double charge) {
  return reps::realify(-I_UNIT * charge * ComplexMatrix::Identity(complex_dim, complex_dim));
}

std::vector<RealMatrix> so_generators(int n) {
  std::vector<RealMatrix> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RealMatrix e = RealMatrix::Zero(n, n);
      e(i, j) = 1.0;
      e(j, i) = -1.0;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<RealMatrix> su3_generators() {
  std::vector<RealMatrix> out;
  for (int a = 1; a <= 8; ++a) out.push_back(reps::realify(-I_UNIT * gell_mann(a)));
  return out;
}

std::vector<std::string> builtin_names() {
  return {"real-kg",    "complex-kg",     "kg-internal(3)", "weyl-l",       "weyl-r",
          "dirac",      "majorana",       "real-vector",    "complex-vector", "gauge(su2)",
          "gauge(su3)", "schroedinger",   "standard-model", "higgs-sector"};
}

TheorySpec builtin(std::string_view name) {
  if (name == "real-kg") return single("real-kg", make_field("phi", FieldKind::Scalar, trivial_rep(1), plain_candidates(1)));
  if (name == "complex-kg") return so2_theory("complex-kg", FieldKind::Scalar, charged_candidates(1));
  int n = 0;
  if (parse_kg_internal(name, n)) return so_n_theory(std::string(name), FieldKind::Scalar, n, 1.0);
  if (name == "weyl-l") return so2_theory("weyl-l", FieldKind::WeylLeft, weyl_candidates(1), 0.0);
  if (name == "weyl-r") return so2_theory("weyl-r", FieldKind::WeylRight, weyl_candidates(1), 0.0);
  if (name == "dirac") return so2_theory("dirac", FieldKind::Majorana, charged_candidates(1));
  if (name == "majorana") {
    return single("majorana", make_field("psi", FieldKind::Majorana, trivial_rep(1), plain_candidates(1)));
  }
  if (name == "real-vector") {
    return single("real-vector", make_field("A", FieldKind::Vector, trivial_rep(1), plain_candidates(1)));
  }
  if (name == "complex-vector") return so2_theory("complex-vector", FieldKind::Vector, charged_candidates(1));
  if (name == "gauge(su2)") return so_n_theory("gauge(su2)", FieldKind::GaugeVector, 3, 0.0, "su(2)");
  if (name == "gauge(su3)") return so_n_theory("gauge(su3)", FieldKind::GaugeVector, 8, 0.0, "su(3)");
  if (name == "schroedinger") {
    TheorySpec t = so2_theory("schroedinger", FieldKind::Scalar,
                              {candidate(CandidateKind::Parity, identity(2)),
                               candidate(CandidateKind::TimeReversal, conjugation(1), "psi -> psi*")});
    t.fields[0].name = "psi";
    t.fields[0].family = "psi";
    t.fields[0].dynamics = DispersionKind::Schroedinger;
    return t;
  }
  if (name == "standard-model") return standard_model();
  if (name == "higgs-sector") return higgs_sector();
  throw Error(ErrorCode::UnknownName, "unknown builtin '" + std::string(name) + "'");
}

std::vector<std::string> check(const TheorySpec& spec, const TolerancePolicy& tol) {
  std::vector<std::string> out;
  if (spec.name.empty()) out.push_back("theory: name is empty");

  std::map<std::string, const SymmetryFactor*> factors;
  for (const auto& f : spec.factors) {
    if (f.dim < 1) out.push_back("factor '" + f.name + "': dim must be >= 1");
    if (!factors.emplace(f.name, &f).second) out.push_back("factor '" + f.name + "': declared twice");
  }

  std::set<std::string> names;
  for (const auto& field : spec.fields) {
    const std::string where = "field '" + field.name + "': ";
    if (field.name.empty()) out.push_back("field: name is empty");
    if (!names.insert(field.name).second) out.push_back(where + "declared twice");
    for (const auto& m : reps::check(field.internal, tol)) out.push_back(where + m);

    const bool spinor = field.kind == FieldKind::WeylLeft || field.kind == FieldKind::WeylRight ||
                        field.kind == FieldKind::Majorana;
    if (spinor != (field.statistics == Statistics::Fermi)) {
      out.push_back(where + "statistics " + std::string(to_string(field.statistics)) + " do not fit kind " +
                    std::string(to_string(field.kind)));
    }
    if (field.multiplicity < 1) out.push_back(where + "multiplicity must be >= 1");
    if (!std::isfinite(field.mass) || field.mass < 0.0) out.push_back(where + "mass must be finite and >= 0");
    if (field.dynamics == DispersionKind::Schroedinger && !(field.mass > 0.0)) {
      out.push_back(where + "Schroedinger dynamics need mass > 0");
    }

    const auto ngen = static_cast<int>(field.internal.generators.size());
    for (const auto& [factor, indices] : field.factor_actions) {
      const auto it = factors.find(factor);
      if (it == factors.end()) {
        out.push_back(where + "acts through undeclared factor '" + factor + "'");
        continue;
      }
      if (static_cast<int>(indices.size()) != it->second->dim) {
        out.push_back(where + "factor '" + factor + "' needs " + std::to_string(it->second->dim) +
                      " generators, got " + std::to_string(indices.size()));
      }
      std::set<int> seen;
      for (int i : indices) {
        if (i < 0 || i >= ngen) out.push_back(where + "factor '" + factor + "' index " + std::to_string(i) + " out of range");
        if (!seen.insert(i).second) out.push_back(where + "factor '" + factor + "' repeats index " + std::to_string(i));
      }
    }
    for (const auto& [factor, q] : field.charges) {
      const auto it = factors.find(factor);
      if (it == factors.end() || it->second->dim != 1) {
        out.push_back(where + "charge given for '" + factor + "', which is not a declared one-dimensional factor");
      }
      if (!std::isfinite(q)) out.push_back(where + "charge for '" + factor + "' is not finite");
    }
    for (std::size_t i = 0; i < field.discrete_candidates.size(); ++i) {
      for (const auto& m : discrete::check(field.discrete_candidates[i], field.internal.dim, tol)) {
        out.push_back(where + "discrete candidate " + std::to_string(i) + ": " + m);
      }
    }
    if (field.potential) {
      try {
        field.potential->validate();
        if (field.potential->dim != field.internal.dim) out.push_back(where + "potential dim differs from internal dim");
      } catch (const Error& e) {
        out.push_back(where + e.message());
      }
    }
    if (!field.gauges.empty()) {
      if (field.kind != FieldKind::GaugeVector) out.push_back(where + "only gauge fields may gauge a factor");
      const auto it = factors.find(field.gauges);
      if (it != factors.end()) {
        if (!it->second->gauged) out.push_back(where + "gauges factor '" + field.gauges + "', which is not gauged");
        if (it->second->dim != field.internal.dim) {
          out.push_back(where + "internal dim must equal the dim of gauged factor '" + field.gauges + "'");
        }
      }
    }
  }

  if (spec.vacuum) {
    const FieldSpec* f = spec.find(spec.vacuum->field);
    if (f == nullptr) {
      out.push_back("vacuum: field '" + spec.vacuum->field + "' does not exist");
    } else {
      if (spec.vacuum->phi0.size() != f->internal.dim) out.push_back("vacuum: phi0 size differs from the field's internal dim");
      if (!f->potential) out.push_back("vacuum: field '" + f->name + "' has no potential");
      if (!spec.vacuum->phi0.allFinite()) out.push_back("vacuum: phi0 has non-finite entries");
    }
  }
  return out;
}

void validate(const TheorySpec& spec, const TolerancePolicy& tol) {
  const auto problems = check(spec, tol);
  if (problems.empty()) return;
  std::ostringstream msg;
  msg << "spec '" << spec.name << "' is invalid:";
  for (const auto& p : problems) msg << "\n  - " << p;
  throw Error(ErrorCode::ValidationError, msg.str());
}

bool same(const TheorySpec& a, const TheorySpec& b) {
  if (a.name != b.name || a.factors.size() != b.factors.size() || a.fields.size() != b.fields.size() ||
      a.vacuum.has_value() != b.vacuum.has_value()) {
    return false;
  }
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const auto& x = a.factors[i];
    const auto& y = b.factors[i];
    if (x.name != y.name || x.dim != y.dim || x.gauged != y.gauged) return false;
  }
  for (std::size_t i = 0; i < a.fields.size(); ++i) {
    if (!same_field(a.fields[i], b.fields[i])) return false;
  }
  if (a.vacuum) {
    if (a.vacuum->field != b.vacuum->field || !same_matrix(a.vacuum->phi0, b.vacuum->phi0)) return false;
  }
  return true;
}

}  // namespace catalog
}  // namespace fieldquanta

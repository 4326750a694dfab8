#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fieldquanta/catalog.hpp"

namespace fieldquanta::catalog {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "fieldquanta-spec/1";

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at " + (path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "missing");
  return *it;
}

const json* optional_key(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

RealMatrix as_matrix(const json& v, const std::string& path, Eigen::Index rows, Eigen::Index cols) {
  if (!v.is_array()) fail(path, "expected a matrix (array of rows)");
  if (static_cast<Eigen::Index>(v.size()) != rows) {
    fail(path, "has " + std::to_string(v.size()) + " rows, expected " + std::to_string(rows) + " (dim mismatch)");
  }
  RealMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = v[static_cast<std::size_t>(r)];
    const std::string rp = index(path, static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail(rp, "expected a row of " + std::to_string(cols) + " numbers (dim mismatch)");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = as_number(row[static_cast<std::size_t>(c)], index(rp, static_cast<std::size_t>(c)));
  }
  return m;
}

json matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json field_json(const FieldSpec& f) {
  json internal;
  internal["dim"] = f.internal.dim;
  internal["group_label"] = f.internal.group_label;
  internal["charge"] = f.internal.charge ? json(*f.internal.charge) : json(nullptr);
  json gens = json::array();
  for (std::size_t i = 0; i < f.internal.generators.size(); ++i) {
    json g;
    g["matrix"] = matrix_json(f.internal.generators[i]);
    if (!f.internal.generator_names.empty()) g["name"] = f.internal.generator_names[i];
    gens.push_back(std::move(g));
  }
  internal["generators"] = std::move(gens);

  json cands = json::array();
  for (const auto& c : f.discrete_candidates) {
    cands.push_back({{"kind", std::string(to_string(c.kind))},
                     {"matrix", matrix_json(c.matrix)},
                     {"involution_phase", c.involution_phase},
                     {"note", c.note}});
  }

  json out;
  out["name"] = f.name;
  out["kind"] = std::string(to_string(f.kind));
  out["statistics"] = std::string(to_string(f.statistics));
  out["family"] = f.family;
  out["multiplicity"] = f.multiplicity;
  out["dynamics"] = std::string(to_string(f.dynamics));
  out["mass"] = f.mass;
  out["internal"] = std::move(internal);
  out["factor_actions"] = f.factor_actions;
  out["charges"] = f.charges;
  out["discrete_candidates"] = std::move(cands);
  if (f.potential) {
    out["potential"] = {{"alpha", f.potential->alpha},
                        {"beta", f.potential->beta},
                        {"metric", matrix_json(f.potential->metric.h)}};
  }
  out["gauges"] = f.gauges;
  return out;
}

RepData read_internal(const json& v, const std::string& path) {
  RepData r;
  r.dim = as_int(require(v, "dim", path), join(path, "dim"));
  if (r.dim < 1) fail(join(path, "dim"), "must be >= 1");
  if (const json* g = optional_key(v, "group_label")) r.group_label = as_string(*g, join(path, "group_label"));
  if (const json* q = optional_key(v, "charge")) r.charge = as_number(*q, join(path, "charge"));
  const std::string gp = join(path, "generators");
  const json* gens = optional_key(v, "generators");
  if (gens == nullptr) return r;
  if (!gens->is_array()) fail(gp, "expected an array");
  std::size_t named = 0;
  for (std::size_t i = 0; i < gens->size(); ++i) {
    const json& g = (*gens)[i];
    const std::string p = index(gp, i);
    // A bare matrix is accepted as shorthand for {"matrix": ...}.
    const json& m = g.is_array() ? g : require(g, "matrix", p);
    r.generators.push_back(as_matrix(m, g.is_array() ? p : join(p, "matrix"), r.dim, r.dim));
    if (g.is_object()) {
      if (const json* n = optional_key(g, "name")) {
        r.generator_names.push_back(as_string(*n, join(p, "name")));
        ++named;
      }
    }
  }
  if (named != 0 && named != r.generators.size()) fail(gp, "either every generator is named or none is");
  return r;
}

FieldSpec read_field(const json& v, const std::string& path) {
  FieldSpec f;
  f.name = as_string(require(v, "name", path), join(path, "name"));
  try {
    f.kind = field_kind_from_string(as_string(require(v, "kind", path), join(path, "kind")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError && e.message().rfind("at ", 0) == 0) throw;
    fail(join(path, "kind"), e.message());
  }
  const bool spinor = f.kind == FieldKind::WeylLeft || f.kind == FieldKind::WeylRight || f.kind == FieldKind::Majorana;
  f.statistics = spinor ? Statistics::Fermi : Statistics::Bose;
  if (const json* s = optional_key(v, "statistics")) {
    try {
      f.statistics = statistics_from_string(as_string(*s, join(path, "statistics")));
    } catch (const Error& e) {
      if (e.message().rfind("at ", 0) == 0) throw;
      fail(join(path, "statistics"), e.message());
    }
  }
  f.family = f.name;
  if (const json* x = optional_key(v, "family")) f.family = as_string(*x, join(path, "family"));
  if (const json* x = optional_key(v, "multiplicity")) f.multiplicity = as_int(*x, join(path, "multiplicity"));
  if (const json* x = optional_key(v, "dynamics")) {
    const std::string text = as_string(*x, join(path, "dynamics"));
    try {
      f.dynamics = dispersion_kind_from_string(text);
    } catch (const Error& e) {
      fail(join(path, "dynamics"), e.message());
    }
  }
  if (const json* x = optional_key(v, "mass")) f.mass = as_number(*x, join(path, "mass"));
  f.internal = read_internal(require(v, "internal", path), join(path, "internal"));

  if (const json* x = optional_key(v, "factor_actions")) {
    const std::string p = join(path, "factor_actions");
    if (!x->is_object()) fail(p, "expected an object");
    for (const auto& [factor, idx] : x->items()) {
      const std::string fp = join(p, factor);
      if (!idx.is_array()) fail(fp, "expected an array of generator indices");
      std::vector<int> list;
      for (std::size_t i = 0; i < idx.size(); ++i) list.push_back(as_int(idx[i], index(fp, i)));
      f.factor_actions[factor] = std::move(list);
    }
  }
  if (const json* x = optional_key(v, "charges")) {
    const std::string p = join(path, "charges");
    if (!x->is_object()) fail(p, "expected an object");
    for (const auto& [factor, q] : x->items()) f.charges[factor] = as_number(q, join(p, factor));
  }
  if (const json* x = optional_key(v, "discrete_candidates")) {
    const std::string p = join(path, "discrete_candidates");
    if (!x->is_array()) fail(p, "expected an array");
    for (std::size_t i = 0; i < x->size(); ++i) {
      const json& c = (*x)[i];
      const std::string cp = index(p, i);
      DiscreteCandidate cand;
      try {
        cand.kind = candidate_kind_from_string(as_string(require(c, "kind", cp), join(cp, "kind")));
      } catch (const Error& e) {
        if (e.message().rfind("at ", 0) == 0) throw;
        fail(join(cp, "kind"), e.message());
      }
      cand.matrix = as_matrix(require(c, "matrix", cp), join(cp, "matrix"), f.internal.dim, f.internal.dim);
      if (const json* ph = optional_key(c, "involution_phase")) cand.involution_phase = as_number(*ph, join(cp, "involution_phase"));
      if (const json* n = optional_key(c, "note")) cand.note = as_string(*n, join(cp, "note"));
      f.discrete_candidates.push_back(std::move(cand));
    }
  }
  if (const json* x = optional_key(v, "potential")) {
    const std::string p = join(path, "potential");
    QuarticPotential pot;
    pot.alpha = as_number(require(*x, "alpha", p), join(p, "alpha"));
    pot.beta = as_number(require(*x, "beta", p), join(p, "beta"));
    pot.dim = f.internal.dim;
    pot.metric.h = RealMatrix::Identity(pot.dim, pot.dim);
    if (const json* h = optional_key(*x, "metric")) pot.metric.h = as_matrix(*h, join(p, "metric"), pot.dim, pot.dim);
    f.potential = std::move(pot);
  }
  if (const json* x = optional_key(v, "gauges")) f.gauges = as_string(*x, join(path, "gauges"));
  return f;
}

}  // namespace

std::string to_json(const TheorySpec& spec) {
  json out;
  out["schema"] = kSchema;
  out["name"] = spec.name;
  json factors = json::array();
  for (const auto& f : spec.factors) factors.push_back({{"name", f.name}, {"dim", f.dim}, {"gauged", f.gauged}});
  out["factors"] = std::move(factors);
  json fields = json::array();
  for (const auto& f : spec.fields) fields.push_back(field_json(f));
  out["fields"] = std::move(fields);
  if (spec.vacuum) out["vacuum"] = {{"field", spec.vacuum->field}, {"phi0", vector_json(spec.vacuum->phi0)}};
  return out.dump(2) + "\n";
}

TheorySpec from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // The library message carries line and column.
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "expected a JSON object");
  const std::string schema = as_string(require(doc, "schema", ""), "schema");
  if (schema != kSchema) fail("schema", "unsupported schema '" + schema + "', expected " + kSchema);

  TheorySpec spec;
  spec.name = as_string(require(doc, "name", ""), "name");
  if (const json* fs = optional_key(doc, "factors")) {
    if (!fs->is_array()) fail("factors", "expected an array");
    for (std::size_t i = 0; i < fs->size(); ++i) {
      const std::string p = index("factors", i);
      const json& f = (*fs)[i];
      SymmetryFactor factor;
      factor.name = as_string(require(f, "name", p), join(p, "name"));
      factor.dim = as_int(require(f, "dim", p), join(p, "dim"));
      if (const json* g = optional_key(f, "gauged")) factor.gauged = as_bool(*g, join(p, "gauged"));
      spec.factors.push_back(std::move(factor));
    }
  }
  const json& fields = require(doc, "fields", "");
  if (!fields.is_array()) fail("fields", "expected an array");
  for (std::size_t i = 0; i < fields.size(); ++i) spec.fields.push_back(read_field(fields[i], index("fields", i)));

  if (const json* v = optional_key(doc, "vacuum")) {
    VacuumSpec vac;
    vac.field = as_string(require(*v, "field", "vacuum"), "vacuum.field");
    const json& phi = require(*v, "phi0", "vacuum");
    if (!phi.is_array()) fail("vacuum.phi0", "expected an array");
    vac.phi0.resize(static_cast<Eigen::Index>(phi.size()));
    for (std::size_t i = 0; i < phi.size(); ++i) vac.phi0(static_cast<Eigen::Index>(i)) = as_number(phi[i], index("vacuum.phi0", i));
    spec.vacuum = std::move(vac);
  }
  return spec;
}

TheorySpec load(const std::filesystem::path& path, const TolerancePolicy& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  TheorySpec spec;
  try {
    spec = from_json(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message());
  }
  validate(spec, tol);
  return spec;
}

void save(const TheorySpec& spec, const std::filesystem::path& path, const TolerancePolicy& tol) {
  validate(spec, tol);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  out << to_json(spec);
}

}  // namespace fieldquanta::catalog

#include "fieldquanta/discrete.hpp"

#include <cmath>
#include <sstream>

namespace fieldquanta {

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::Parity: return "parity";
    case CandidateKind::TimeReversal: return "time-reversal";
    case CandidateKind::ParityTime: return "parity-time";
    case CandidateKind::Internal: return "internal";
  }
  return "parity";
}

CandidateKind candidate_kind_from_string(std::string_view text) {
  if (text == "parity") return CandidateKind::Parity;
  if (text == "time-reversal") return CandidateKind::TimeReversal;
  if (text == "parity-time") return CandidateKind::ParityTime;
  if (text == "internal") return CandidateKind::Internal;
  throw Error(ErrorCode::ParseError, "unknown candidate kind '" + std::string(text) + "'");
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::C: return "C";
    case Label::P: return "P";
    case Label::T: return "T";
    case Label::PT: return "PT";
    case Label::CP: return "CP";
    case Label::CT: return "CT";
    case Label::CPT: return "CPT";
  }
  return "?";
}

namespace discrete {

std::vector<std::string> check(const DiscreteCandidate& candidate, int dim,
                               const TolerancePolicy& tol) {
  std::vector<std::string> problems;
  const std::string name = std::string(to_string(candidate.kind)) + " candidate";
  if (candidate.matrix.rows() != dim || candidate.matrix.cols() != dim) {
    problems.push_back(name + " has the wrong size");
    return problems;
  }
  if (!candidate.matrix.allFinite()) {
    problems.push_back(name + " has non-finite entries");
    return problems;
  }
  if (std::abs(std::abs(candidate.involution_phase) - 1.0) > tol.eps_rel) {
    problems.push_back(name + ": involution_phase must be +1 or -1");
  }
  const RealMatrix square = candidate.matrix * candidate.matrix;
  const RealMatrix expected = candidate.involution_phase * RealMatrix::Identity(dim, dim);
  if ((square - expected).norm() > tol.eps_rel * std::max(1.0, square.norm())) {
    std::ostringstream msg;
    msg << name << ": square is not " << candidate.involution_phase << " times the identity";
    problems.push_back(msg.str());
  }
  return problems;
}

int commutation_sign(const DiscreteCandidate& candidate, const ComplexStructure& j,
                     const TolerancePolicy& tol) {
  const auto& x = candidate.matrix;
  if (x.rows() != j.J.rows() || x.cols() != j.J.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "candidate and J act on different spaces");
  }
  const double bound = tol.eps_rel * kernel::op_norm(x) * kernel::op_norm(j.J);
  if ((x * j.J - j.J * x).norm() <= bound) return +1;
  if ((x * j.J + j.J * x).norm() <= bound) return -1;
  throw Error(ErrorCode::NeitherCommutesNorAnticommutes,
              std::string(to_string(candidate.kind)) + " candidate" +
                  (candidate.note.empty() ? "" : " '" + candidate.note + "'") +
                  " neither commutes nor anticommutes with J");
}

std::vector<DiscreteCandidate> composed_parity_time(const std::vector<DiscreteCandidate>& candidates) {
  std::vector<DiscreteCandidate> out;
  for (const auto& p : candidates) {
    if (p.kind != CandidateKind::Parity) continue;
    for (const auto& t : candidates) {
      if (t.kind != CandidateKind::TimeReversal) continue;
      DiscreteCandidate pt;
      pt.kind = CandidateKind::ParityTime;
      pt.matrix = p.matrix * t.matrix;
      // P and T commute up to a phase; (PT)^2 = P^2 T^2 in that case.
      pt.involution_phase = p.involution_phase * t.involution_phase;
      pt.note = "composed from parity '" + p.note + "' and time reversal '" + t.note + "'";
      out.push_back(std::move(pt));
    }
  }
  return out;
}

DiscreteLabelSet classify(const std::vector<DiscreteCandidate>& candidates, const RealType& rt,
                          const TolerancePolicy& tol) {
  auto all = candidates;
  for (auto& pt : composed_parity_time(candidates)) all.push_back(std::move(pt));

  DiscreteLabelSet out;
  if (rt.tag == RealKind::HonestlyReal) {
    // No antiparticles: C holds outright, and each of P, T, PT brings its
    // C-partner along.
    out.has_antiparticles = false;
    out.labels.insert(Label::C);
    for (const auto& c : all) {
      switch (c.kind) {
        case CandidateKind::Parity:
          out.labels.insert(Label::P);
          out.labels.insert(Label::CP);
          break;
        case CandidateKind::TimeReversal:
          out.labels.insert(Label::T);
          out.labels.insert(Label::CT);
          break;
        case CandidateKind::ParityTime:
          out.labels.insert(Label::PT);
          out.labels.insert(Label::CPT);
          break;
        case CandidateKind::Internal:
          break;
      }
    }
    out.anti_isomorphic_sectors = false;
    return out;
  }

  if (!rt.J) {
    throw Error(ErrorCode::InvalidInput, "secretly complex type without a complex structure");
  }
  for (const auto& c : all) {
    const bool linear = commutation_sign(c, *rt.J, tol) > 0;
    switch (c.kind) {
      case CandidateKind::Parity:
        out.labels.insert(linear ? Label::P : Label::CP);
        break;
      case CandidateKind::TimeReversal:
        // The induced quantum map carries a Q-conjugation, which swaps sectors.
        out.labels.insert(linear ? Label::CT : Label::T);
        break;
      case CandidateKind::ParityTime:
        out.labels.insert(linear ? Label::CPT : Label::PT);
        break;
      case CandidateKind::Internal:
        if (!linear) out.labels.insert(Label::C);
        break;
    }
  }
  out.anti_isomorphic_sectors = out.contains(Label::CPT);
  out.has_antiparticles = out.anti_isomorphic_sectors;
  return out;
}

bool predict_antiparticles(const RealType& rt, const DiscreteLabelSet& labels) {
  return rt.tag == RealKind::SecretlyComplex && labels.contains(Label::CPT);
}

std::string antiparticle_reason(const RealType& rt, const DiscreteLabelSet& labels) {
  if (rt.tag == RealKind::HonestlyReal) {
    return "honestly real internal action: no complex structure, single particle species";
  }
  if (labels.contains(Label::CPT)) {
    return "secretly complex with a complex-linear parity-time symmetry: conjugate, anti-isomorphic "
           "particle and antiparticle sectors";
  }
  return "no complex-linear parity-time symmetry: the antiparticle sector is not physical";
}

}  // namespace discrete
}  // namespace fieldquanta

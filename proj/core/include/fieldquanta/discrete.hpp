#pragma once

// Large symmetries: parity, time reversal, parity-time and internal
// conjugation candidates of a classical field, translated into the C/P/T
// labels of its quantization.
//
// Only the internal matrix of each candidate is used; the spacetime part
// (x -> -x, t -> -t) is recorded in `kind`.

#include <set>
#include <string>
#include <vector>

#include "fieldquanta/reps.hpp"

namespace fieldquanta {

enum class CandidateKind { Parity, TimeReversal, ParityTime, Internal };

std::string_view to_string(CandidateKind kind);
CandidateKind candidate_kind_from_string(std::string_view text);

struct DiscreteCandidate {
  CandidateKind kind = CandidateKind::Parity;
  RealMatrix matrix;
  /// matrix^2 = involution_phase * I.
  double involution_phase = 1.0;
  std::string note;
};

enum class Label { C, P, T, PT, CP, CT, CPT };

std::string_view to_string(Label label);

struct DiscreteLabelSet {
  std::set<Label> labels;
  bool has_antiparticles = false;
  bool anti_isomorphic_sectors = false;

  bool contains(Label l) const { return labels.count(l) != 0; }
};

namespace discrete {

/// Violated invariants of a candidate (size, finiteness, involution up to phase).
std::vector<std::string> check(const DiscreteCandidate& candidate, int dim,
                               const TolerancePolicy& tol = {});

/// +1 if the candidate commutes with J (complex-linear), -1 if it
/// anticommutes (complex-antilinear). Anything else throws
/// NeitherCommutesNorAnticommutes.
int commutation_sign(const DiscreteCandidate& candidate, const ComplexStructure& j,
                     const TolerancePolicy& tol = {});

/// Products P*T of every supplied parity / time-reversal pair, as
/// parity-time candidates.
std::vector<DiscreteCandidate> composed_parity_time(const std::vector<DiscreteCandidate>& candidates);

/// Labels of the quantized theory. Composed P*T candidates are included.
DiscreteLabelSet classify(const std::vector<DiscreteCandidate>& candidates, const RealType& rt,
                          const TolerancePolicy& tol = {});

/// Antiparticles are physical iff the field is secretly complex and CPT holds.
bool predict_antiparticles(const RealType& rt, const DiscreteLabelSet& labels);

/// One-line explanation of predict_antiparticles.
std::string antiparticle_reason(const RealType& rt, const DiscreteLabelSet& labels);

}  // namespace discrete
}  // namespace fieldquanta

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tauq/additive.hpp"
#include "tauq/chains.hpp"
#include "tauq/translation_quiver.hpp"

namespace tauq {

/// Support criterion: every vertex lies under some theta+_n X with X injective.
struct C31Check {
  bool holds = false;
  std::vector<Vertex> uncovered;
};

/// C31 plus a Nakayama partner for every injective X with theta- X != 0.
struct C32Check {
  bool holds = false;
  bool c31 = false;
  /// One entry per injective X with theta- X != 0, in vertex order.
  std::vector<NakayamaResult> partners;
  /// Partners whose terminal eta term had more than one vertex.
  std::vector<Vertex> anomalies;
};

/// C32 plus every Nakayama target off (c33) or on (c34) the projectives.
struct TargetCheck {
  bool holds = false;
  /// True when no injective has theta- X != 0, so the target part is empty.
  bool vacuous = false;
  std::vector<Vertex> offending;  // sources whose target is on the wrong side
};

/// All four throw PreconditionError unless q is artinian within the bound.
C31Check check_c31(const TranslationQuiver& q, std::size_t bound);
C32Check check_c32(const TranslationQuiver& q, std::size_t bound);
TargetCheck check_c33(const TranslationQuiver& q, std::size_t bound);
TargetCheck check_c34(const TranslationQuiver& q, std::size_t bound);

enum class ClassLabel {
  torsionfree_class,
  hereditary_torsionfree_class,
  module_category,
  socle_projective_category,
};

std::string_view to_string(ClassLabel label);
/// "Q is the AR quiver of a ..." sentence for a label.
std::string describe(ClassLabel label);

struct ClassificationReport {
  ArtinianVerdict artinian;
  /// Everything below is filled only for artinian quivers.
  bool evaluated = false;
  std::optional<StrictVerdict> strict;
  C31Check c31;
  C32Check c32;
  TargetCheck c33;
  TargetCheck c34;
  /// Solver verdicts: right additive; additive; additive with l- = Q^i;
  /// additive with l- = sinks.
  std::array<FeasibilityOutcome, 4> solver;
  std::vector<ClassLabel> labels;
  bool consistent = false;
  /// Indices i (1..4) where the chain and solver verdicts disagree.
  std::vector<int> disagreements;

  [[nodiscard]] std::array<bool, 4> chain_verdicts() const {
    return {c31.holds, c32.holds, c33.holds, c34.holds};
  }
  [[nodiscard]] std::array<bool, 4> solver_verdicts() const {
    return {solver[0].feasible, solver[1].feasible, solver[2].feasible, solver[3].feasible};
  }
};

/// Runs every check. Non-artinian input yields a report with only the
/// artinian verdict filled in; disagreement between the chain and solver
/// sides is recorded in `disagreements`, never thrown.
ClassificationReport classify(const TranslationQuiver& q, std::size_t bound);

}  // namespace tauq

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tauq/translation_quiver.hpp"
#include "tauq/vertex_combination.hpp"

namespace tauq {

// The linear operators on the free abelian group of a translation quiver.
// All of them throw InputError when the combination mentions a vertex that
// does not belong to q.

/// theta+ X = sum_Y d(Y, X) Y: the predecessors of X.
VertexCombination theta_plus(const TranslationQuiver& q, const VertexCombination& v);
/// theta- X = sum_Y d'(X, Y) Y: the successors of X.
VertexCombination theta_minus(const TranslationQuiver& q, const VertexCombination& v);
/// tau+ extended linearly, zero on projectives.
VertexCombination tau_plus_ext(const TranslationQuiver& q, const VertexCombination& v);
/// tau- extended linearly, zero on injectives.
VertexCombination tau_minus_ext(const TranslationQuiver& q, const VertexCombination& v);
/// phi+ = 1 - theta+ + tau+.
VertexCombination phi_plus(const TranslationQuiver& q, const VertexCombination& v);
/// phi- = 1 - theta- + tau-.
VertexCombination phi_minus(const TranslationQuiver& q, const VertexCombination& v);

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks every translation-quiver axiom and lists all violations.
ValidationReport validate(const TranslationQuiver& q);

struct AdmissibilityResult {
  bool admissible = false;
  /// c(X) per vertex index, when admissible.
  std::optional<std::vector<Integer>> c;
  /// Description of a cycle whose valuation ratios do not multiply to 1.
  std::optional<std::string> conflict;
};

/// Finds the least positive integer c with c(X) d(X,Y) = d'(X,Y) c(Y) on all
/// arrows, normalised independently on each connected component.
AdmissibilityResult admissibility(const TranslationQuiver& q);

}  // namespace tauq

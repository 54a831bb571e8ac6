#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tauq/translation_quiver.hpp"
#include "tauq/vertex_combination.hpp"

namespace tauq {

enum class Flavor { right, left, both };

/// Extra requirement on l- = {X in Q^i : l(phi- X) > 0}.
enum class LMinusConstraint {
  free,
  equal_to_injectives,  // l- = Q^i
  equal_to_sinks,       // l- = {X in Q^i : theta- X = 0}
};

std::string_view to_string(Flavor f);
std::string_view to_string(LMinusConstraint c);

/// A strictly positive integer weight per vertex, additive on the meshes.
struct AdditiveFunction {
  std::vector<Integer> values;  // indexed by vertex
  Flavor flavor = Flavor::both;
  std::vector<Vertex> l_plus;   // {X in Q^p : l(phi+ X) > 0}, right or both
  std::vector<Vertex> l_minus;  // {X in Q^i : l(phi- X) > 0}, left or both
};

struct FeasibilityOutcome {
  bool feasible = false;
  std::optional<AdditiveFunction> result;
  std::optional<std::string> certificate;
};

/// Some right additive function, or an infeasibility certificate.
FeasibilityOutcome find_right_additive(const TranslationQuiver& q);
FeasibilityOutcome find_left_additive(const TranslationQuiver& q);
/// Some two-sided additive function whose l- satisfies `constraint`.
FeasibilityOutcome find_additive(const TranslationQuiver& q, LMinusConstraint constraint = LMinusConstraint::free);

struct AdditiveDefect {
  Vertex vertex;
  std::string constraint;
  Integer value;
};

struct AdditiveCheck {
  bool ok = false;
  std::vector<AdditiveDefect> defects;
};

/// Re-checks positivity and every mesh constraint of the requested flavor.
AdditiveCheck verify_additive(const TranslationQuiver& q, const std::vector<Integer>& values, Flavor flavor,
                              LMinusConstraint constraint = LMinusConstraint::free);

/// l(phi+ X) and l(phi- X) for a weight vector.
Integer apply_phi_plus(const TranslationQuiver& q, const std::vector<Integer>& values, Vertex x);
Integer apply_phi_minus(const TranslationQuiver& q, const std::vector<Integer>& values, Vertex x);

/// Writes a right additive function of a strict artinian quiver as
/// sum_{X in Q^p} a_X H[X][.] with a_X = l(phi+ X), and checks that the
/// reconstruction is exact (InvariantError otherwise).
std::map<Vertex, Integer> decompose_right_additive(const TranslationQuiver& q, const std::vector<Integer>& values,
                                                   std::size_t bound);

/// The projectives that can carry weight in a two-sided additive function:
/// those with theta+ X = 0, and those whose Nakayama source n+(X) is not
/// injective.
std::vector<Vertex> s_plus(const TranslationQuiver& q, std::size_t bound);

}  // namespace tauq

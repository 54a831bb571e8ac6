#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tauq/vertex_combination.hpp"

namespace tauq {

/// A system of linear constraints  sum_j a_j x_j  (= | >=)  b  over the
/// rationals, decided exactly.
///
/// Equalities are eliminated first by Gaussian elimination; the inequalities
/// that remain are then decided by Fourier-Motzkin elimination, and a point
/// is recovered by back substitution.
class RationalSystem {
 public:
  enum class Relation { equal, at_least };

  struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::at_least;
    Rational rhs;
    std::string label;
  };

  explicit RationalSystem(std::size_t variables) : variables_(variables) {}

  [[nodiscard]] std::size_t variables() const { return variables_; }
  [[nodiscard]] const std::vector<Constraint>& constraints() const { return constraints_; }

  void add_equal(std::vector<Rational> coefficients, Rational rhs, std::string label = {});
  void add_at_least(std::vector<Rational> coefficients, Rational rhs, std::string label = {});

  struct Solution {
    bool feasible = false;
    std::vector<Rational> point;
    /// Why the system has no solution, when infeasible.
    std::string certificate;
  };

  [[nodiscard]] Solution solve() const;

  /// True when `point` satisfies every constraint exactly.
  [[nodiscard]] bool satisfied_by(const std::vector<Rational>& point) const;

 private:
  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs, std::string label);

  std::size_t variables_;
  std::vector<Constraint> constraints_;
};

/// The least common multiple of the denominators, times the point: the
/// smallest positive integer multiple of a rational vector.
std::vector<Integer> clear_denominators(const std::vector<Rational>& point);

}  // namespace tauq

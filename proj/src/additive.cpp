#include "tauq/additive.hpp"

#include <numeric>

#include "tauq/chains.hpp"
#include "tauq/classify.hpp"
#include "tauq/errors.hpp"
#include "tauq/operators.hpp"
#include "tauq/rational_system.hpp"

namespace tauq {

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::right: return "right";
    case Flavor::left: return "left";
    case Flavor::both: return "both";
  }
  return "?";
}

std::string_view to_string(LMinusConstraint c) {
  switch (c) {
    case LMinusConstraint::free: return "free";
    case LMinusConstraint::equal_to_injectives: return "inj";
    case LMinusConstraint::equal_to_sinks: return "sinks";
  }
  return "?";
}

namespace {

bool has_right(Flavor f) { return f != Flavor::left; }
bool has_left(Flavor f) { return f != Flavor::right; }

bool is_sink(const TranslationQuiver& q, Vertex x) { return theta_minus(q, VertexCombination(x)).is_zero(); }

std::vector<Rational> row_of(const TranslationQuiver& q, const VertexCombination& v) {
  std::vector<Rational> row(q.size(), 0);
  for (const auto& [x, c] : v) row[x.index] = Rational(c);
  return row;
}

void require_values(const TranslationQuiver& q, const std::vector<Integer>& values) {
  if (values.size() != q.size())
    throw InputError("expected " + std::to_string(q.size()) + " values, got " + std::to_string(values.size()));
}

// Kinds of constraint each vertex contributes, shared by the solver and the
// verifier so the two cannot drift apart.
enum class Kind { zero, nonnegative, positive };

std::optional<Kind> right_kind(const TranslationQuiver& q, Vertex x) {
  return q.is_projective(x) ? Kind::nonnegative : Kind::zero;
}

std::optional<Kind> left_kind(const TranslationQuiver& q, Vertex x, LMinusConstraint c) {
  if (!q.is_injective(x)) return Kind::zero;
  switch (c) {
    case LMinusConstraint::free: return Kind::nonnegative;
    case LMinusConstraint::equal_to_injectives: return Kind::positive;
    case LMinusConstraint::equal_to_sinks:
      // phi- X = X on a sink, so its value is positive automatically.
      return is_sink(q, x) ? Kind::positive : Kind::zero;
  }
  return std::nullopt;
}

void add_constraint(RationalSystem& system, std::vector<Rational> row, Kind kind, std::string label) {
  switch (kind) {
    case Kind::zero: system.add_equal(std::move(row), 0, label + " = 0"); break;
    case Kind::nonnegative: system.add_at_least(std::move(row), 0, label + " >= 0"); break;
    case Kind::positive: system.add_at_least(std::move(row), 1, label + " > 0"); break;
  }
}

AdditiveFunction describe(const TranslationQuiver& q, std::vector<Integer> values, Flavor flavor) {
  AdditiveFunction f;
  f.flavor = flavor;
  for (auto x : q.vertices()) {
    if (has_right(flavor) && q.is_projective(x) && apply_phi_plus(q, values, x) > 0) f.l_plus.push_back(x);
    if (has_left(flavor) && q.is_injective(x) && apply_phi_minus(q, values, x) > 0) f.l_minus.push_back(x);
  }
  f.values = std::move(values);
  return f;
}

FeasibilityOutcome solve_for(const TranslationQuiver& q, Flavor flavor, LMinusConstraint constraint) {
  RationalSystem system(q.size());
  for (auto x : q.vertices()) {
    const auto& name = q.name_of(x);
    std::vector<Rational> unit(q.size(), 0);
    unit[x.index] = 1;
    system.add_at_least(std::move(unit), 1, "l(" + name + ") >= 1");
    if (has_right(flavor))
      add_constraint(system, row_of(q, phi_plus(q, VertexCombination(x))), *right_kind(q, x),
                     "l(phi+ " + name + ")");
    if (has_left(flavor))
      add_constraint(system, row_of(q, phi_minus(q, VertexCombination(x))), *left_kind(q, x, constraint),
                     "l(phi- " + name + ")");
  }

  FeasibilityOutcome outcome;
  auto solution = system.solve();
  if (!solution.feasible) {
    outcome.certificate = solution.certificate;
    return outcome;
  }
  auto values = clear_denominators(solution.point);
  Integer gcd = 0;
  for (const auto& v : values) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
  if (gcd > 1)
    for (auto& v : values) v /= gcd;

  auto check = verify_additive(q, values, flavor, constraint);
  if (!check.ok)
    throw InvariantError("solver returned weights failing '" + check.defects.front().constraint + "' at " +
                         q.name_of(check.defects.front().vertex));
  outcome.feasible = true;
  outcome.result = describe(q, std::move(values), flavor);
  return outcome;
}

}  // namespace

Integer apply_phi_plus(const TranslationQuiver& q, const std::vector<Integer>& values, Vertex x) {
  require_values(q, values);
  return phi_plus(q, VertexCombination(x)).evaluate([&](Vertex v) { return values[v.index]; });
}

Integer apply_phi_minus(const TranslationQuiver& q, const std::vector<Integer>& values, Vertex x) {
  require_values(q, values);
  return phi_minus(q, VertexCombination(x)).evaluate([&](Vertex v) { return values[v.index]; });
}

FeasibilityOutcome find_right_additive(const TranslationQuiver& q) {
  return solve_for(q, Flavor::right, LMinusConstraint::free);
}

FeasibilityOutcome find_left_additive(const TranslationQuiver& q) {
  return solve_for(q, Flavor::left, LMinusConstraint::free);
}

FeasibilityOutcome find_additive(const TranslationQuiver& q, LMinusConstraint constraint) {
  return solve_for(q, Flavor::both, constraint);
}

AdditiveCheck verify_additive(const TranslationQuiver& q, const std::vector<Integer>& values, Flavor flavor,
                              LMinusConstraint constraint) {
  require_values(q, values);
  if (flavor == Flavor::right && constraint != LMinusConstraint::free)
    throw InputError("an l- constraint needs a left or two-sided flavor");

  AdditiveCheck check;
  auto test = [&](Vertex x, const Integer& value, Kind kind, const std::string& label) {
    const bool ok = kind == Kind::zero ? value == 0 : kind == Kind::nonnegative ? value >= 0 : value > 0;
    if (!ok) {
      std::string want = kind == Kind::zero ? " = 0" : kind == Kind::nonnegative ? " >= 0" : " > 0";
      check.defects.push_back({x, label + want, value});
    }
  };
  for (auto x : q.vertices()) {
    const auto& name = q.name_of(x);
    test(x, values[x.index], Kind::positive, "l(" + name + ")");
    if (has_right(flavor)) test(x, apply_phi_plus(q, values, x), *right_kind(q, x), "l(phi+ " + name + ")");
    if (has_left(flavor))
      test(x, apply_phi_minus(q, values, x), *left_kind(q, x, constraint), "l(phi- " + name + ")");
  }
  check.ok = check.defects.empty();
  return check;
}

std::map<Vertex, Integer> decompose_right_additive(const TranslationQuiver& q, const std::vector<Integer>& values,
                                                   std::size_t bound) {
  require_values(q, values);
  if (!strict(q, bound).strict) throw PreconditionError("decomposition needs a strict artinian quiver");
  auto check = verify_additive(q, values, Flavor::right);
  if (!check.ok)
    throw PreconditionError("weights are not right additive: '" + check.defects.front().constraint + "' fails at " +
                            q.name_of(check.defects.front().vertex));

  const auto h = hom_length_matrix(q, bound);
  std::map<Vertex, Integer> coefficients;
  std::vector<Integer> rebuilt(q.size(), 0);
  for (auto x : q.projectives()) {
    auto a = apply_phi_plus(q, values, x);
    for (auto y : q.vertices()) rebuilt[y.index] += a * h[x.index][y.index];
    coefficients.emplace(x, std::move(a));
  }
  for (auto y : q.vertices())
    if (rebuilt[y.index] != values[y.index])
      throw InvariantError("hom-length reconstruction differs at " + q.name_of(y) + ": " +
                           rebuilt[y.index].get_str() + " != " + values[y.index].get_str());
  return coefficients;
}

std::vector<Vertex> s_plus(const TranslationQuiver& q, std::size_t bound) {
  if (!check_c32(q, bound).holds) throw PreconditionError("S+ is only defined for quivers where every non-sink injective has a Nakayama partner");
  std::vector<Vertex> out;
  for (auto x : q.projectives()) {
    if (theta_plus(q, VertexCombination(x)).is_zero()) {
      out.push_back(x);
      continue;
    }
    auto source = nakayama_plus(q, x, bound);
    if (source && !q.is_injective(source->source)) out.push_back(x);
  }
  return out;
}

}  // namespace tauq

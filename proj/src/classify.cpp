#include "tauq/classify.hpp"

#include "tauq/errors.hpp"
#include "tauq/operators.hpp"

namespace tauq {

namespace {

void require_artinian(const TranslationQuiver& q, std::size_t bound) {
  auto verdict = artinian(q, bound);
  if (!verdict.artinian()) throw PreconditionError("quiver '" + q.name() + "' is not artinian: " + verdict.reason);
}

TargetCheck check_targets(const TranslationQuiver& q, const C32Check& c32, bool want_projective) {
  TargetCheck out;
  out.vacuous = c32.partners.empty();
  if (!c32.holds) return out;
  for (const auto& p : c32.partners)
    if (q.is_projective(*p.target) != want_projective) out.offending.push_back(p.source);
  out.holds = out.offending.empty();
  return out;
}

}  // namespace

C31Check check_c31(const TranslationQuiver& q, std::size_t bound) {
  require_artinian(q, bound);
  auto verdict = strict(q, bound);
  return {verdict.support_criterion, verdict.uncovered};
}

C32Check check_c32(const TranslationQuiver& q, std::size_t bound) {
  C32Check out;
  out.c31 = check_c31(q, bound).holds;
  bool all_defined = true;
  for (auto x : q.injectives()) {
    if (theta_minus(q, VertexCombination(x)).is_zero()) continue;
    auto result = nakayama_minus(q, x, bound);
    if (result.failure == NakayamaFailure::terminal_not_vertex) out.anomalies.push_back(x);
    all_defined = all_defined && result.defined;
    out.partners.push_back(std::move(result));
  }
  out.holds = out.c31 && all_defined;
  return out;
}

TargetCheck check_c33(const TranslationQuiver& q, std::size_t bound) {
  return check_targets(q, check_c32(q, bound), false);
}

TargetCheck check_c34(const TranslationQuiver& q, std::size_t bound) {
  return check_targets(q, check_c32(q, bound), true);
}

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::torsionfree_class: return "torsionfree-class";
    case ClassLabel::hereditary_torsionfree_class: return "hereditary-torsionfree-class";
    case ClassLabel::module_category: return "module-category";
    case ClassLabel::socle_projective_category: return "socle-projective-category";
  }
  return "?";
}

std::string describe(ClassLabel label) {
  switch (label) {
    case ClassLabel::torsionfree_class:
      return "Q is the AR quiver of a torsionfree class of finitely generated modules over an artin algebra";
    case ClassLabel::hereditary_torsionfree_class:
      return "Q is the AR quiver of a hereditary torsionfree class over an artin algebra";
    case ClassLabel::module_category:
      return "Q is the AR quiver of mod L for an artin algebra L";
    case ClassLabel::socle_projective_category:
      return "Q is the AR quiver of the socle-projective modules over an artin algebra";
  }
  return {};
}

ClassificationReport classify(const TranslationQuiver& q, std::size_t bound) {
  ClassificationReport r;
  r.artinian = artinian(q, bound);
  if (!r.artinian.artinian()) return r;

  r.evaluated = true;
  r.strict = strict(q, bound);
  r.c31 = {r.strict->support_criterion, r.strict->uncovered};
  r.c32 = check_c32(q, bound);
  r.c33 = check_targets(q, r.c32, false);
  r.c34 = check_targets(q, r.c32, true);

  r.solver[0] = find_right_additive(q);
  r.solver[1] = find_additive(q, LMinusConstraint::free);
  r.solver[2] = find_additive(q, LMinusConstraint::equal_to_injectives);
  r.solver[3] = find_additive(q, LMinusConstraint::equal_to_sinks);

  const auto chain = r.chain_verdicts();
  const auto solved = r.solver_verdicts();
  for (int i = 0; i < 4; ++i)
    if (chain[i] != solved[i]) r.disagreements.push_back(i + 1);
  r.consistent = r.disagreements.empty();

  if (r.c31.holds) r.labels.push_back(ClassLabel::torsionfree_class);
  if (r.c32.holds) r.labels.push_back(ClassLabel::hereditary_torsionfree_class);
  if (r.c33.holds) r.labels.push_back(ClassLabel::module_category);
  if (r.c34.holds) r.labels.push_back(ClassLabel::socle_projective_category);
  return r;
}

}  // namespace tauq

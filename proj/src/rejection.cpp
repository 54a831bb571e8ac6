#include "tauq/rejection.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tauq/chains.hpp"
#include "tauq/errors.hpp"

namespace tauq {

DeletedQuiver::DeletedQuiver(const TranslationQuiver& base, std::vector<Vertex> subset)
    : base_(&base), kept_(std::move(subset)), member_(base.size(), false) {
  for (auto v : kept_) {
    if (!base.contains(v))
      throw InputError("vertex index " + std::to_string(v.index) + " is not a vertex of quiver '" + base.name() + "'");
    member_[v.index] = true;
  }
  std::sort(kept_.begin(), kept_.end());
  kept_.erase(std::unique(kept_.begin(), kept_.end()), kept_.end());
}

std::vector<Arrow> DeletedQuiver::arrows() const {
  std::vector<Arrow> out;
  for (const auto& a : base_->arrows())
    if (contains(a.source) && contains(a.target)) out.push_back(a);
  return out;
}

VertexCombination DeletedQuiver::theta_plus(const VertexCombination& v) const {
  VertexCombination out;
  for (const auto& [x, c] : v) {
    if (!contains(x)) continue;
    for (const auto& a : base_->arrows_into(x))
      if (contains(a.source)) out.add(a.source, c * a.valuation.d);
  }
  return out;
}

VertexCombination DeletedQuiver::theta_minus(const VertexCombination& v) const {
  VertexCombination out;
  for (const auto& [x, c] : v) {
    if (!contains(x)) continue;
    for (const auto& a : base_->arrows_out_of(x))
      if (contains(a.target)) out.add(a.target, c * a.valuation.dprime);
  }
  return out;
}

VertexCombination DeletedQuiver::tau_plus(const VertexCombination& v) const {
  VertexCombination out;
  for (const auto& [x, c] : v) {
    if (!contains(x) || base_->is_projective(x)) continue;
    if (auto t = base_->tau_plus(x); t && contains(*t)) out.add(*t, c);
  }
  return out;
}

VertexCombination DeletedQuiver::tau_minus(const VertexCombination& v) const {
  VertexCombination out;
  for (const auto& [x, c] : v) {
    if (!contains(x) || base_->is_injective(x)) continue;
    if (auto t = base_->tau_minus(x); t && contains(*t)) out.add(*t, c);
  }
  return out;
}

DeletedQuiver delete_subset(const TranslationQuiver& q, const std::vector<Vertex>& deleted) {
  return DeletedQuiver(q, deleted);
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::trivial: return "trivial";
    case Criterion::rejective_left: return "rejective-i";
    case Criterion::rejective_right: return "rejective-ii";
  }
  return "?";
}

std::string_view to_string(SequenceOutcome o) {
  switch (o) {
    case SequenceOutcome::reached_zero: return "reached-zero";
    case SequenceOutcome::periodic: return "periodic";
    case SequenceOutcome::violated: return "violated";
    case SequenceOutcome::bound_exceeded: return "bound-exceeded";
  }
  return "?";
}

namespace {

using Step = VertexCombination (DeletedQuiver::*)(const VertexCombination&) const;

// Runs a two-term recursion from (y0, y1) until `done` fires on the newest
// term pair, a term fails `bad`, the state repeats, or the bound is hit.
template <class Next, class Done, class Bad>
YSequence follow(Vertex start, Criterion criterion, VertexCombination y0, VertexCombination y1, std::size_t bound,
                 Next next, Done done, Bad bad, std::vector<RejectionFailure>& failures) {
  YSequence seq{start, criterion, {std::move(y0), std::move(y1)}, SequenceOutcome::bound_exceeded};
  std::map<std::pair<VertexCombination, VertexCombination>, std::size_t> seen;
  if (auto why = bad(seq.terms[0])) {
    seq.terms.pop_back();
    seq.outcome = SequenceOutcome::violated;
    failures.push_back({start, criterion, 0, *why});
    return seq;
  }
  while (true) {
    const std::size_t i = seq.terms.size() - 1;
    if (auto why = bad(seq.terms[i])) {
      seq.outcome = SequenceOutcome::violated;
      failures.push_back({start, criterion, i, *why});
      return seq;
    }
    if (done(seq.terms[i - 1], seq.terms[i])) {
      seq.outcome = SequenceOutcome::reached_zero;
      return seq;
    }
    if (!seen.emplace(std::make_pair(seq.terms[i - 1], seq.terms[i]), i).second) {
      seq.outcome = SequenceOutcome::periodic;
      return seq;
    }
    if (seq.terms.size() > bound) {
      failures.push_back({start, criterion, i, "bound exceeded"});
      return seq;
    }
    seq.terms.push_back(next(seq.terms[i - 1], seq.terms[i]));
  }
}

std::string describe_negative(const TranslationQuiver& q, const VertexCombination& y) {
  for (const auto& [v, c] : y)
    if (c < 0) return "negative coefficient " + c.get_str() + " at " + q.name_of(v);
  return {};
}

std::optional<bool> combine(const std::vector<YSequence>& sequences, Criterion criterion) {
  bool undecided = false;
  for (const auto& s : sequences) {
    if (s.criterion != criterion) continue;
    if (s.outcome == SequenceOutcome::violated) return false;
    if (s.outcome == SequenceOutcome::bound_exceeded) undecided = true;
  }
  if (undecided) return std::nullopt;
  return true;
}

}  // namespace

RejectionVerdict check_trivial(const TranslationQuiver& q, const std::vector<Vertex>& deleted, std::size_t bound) {
  const DeletedQuiver d(q, deleted);
  RejectionVerdict verdict;
  verdict.deleted = d.vertices();

  auto bad = [&](const VertexCombination& y) -> std::optional<std::string> {
    for (const auto& [v, c] : y)
      if (q.is_projective(v)) return "term meets the projective vertex " + q.name_of(v);
    return std::nullopt;
  };
  auto next = [&](const VertexCombination& a, const VertexCombination& b) {
    return positive_part(d.theta_plus(b) - d.tau_plus(a));
  };
  auto done = [](const VertexCombination&, const VertexCombination& b) { return b.is_zero(); };

  for (auto x : d.vertices()) {
    if (!q.is_injective(x)) continue;
    VertexCombination y0(x);
    auto y1 = d.theta_plus(y0);
    verdict.witnesses.push_back(
        follow(x, Criterion::trivial, std::move(y0), std::move(y1), bound, next, done, bad, verdict.failures));
  }
  verdict.trivial = combine(verdict.witnesses, Criterion::trivial);
  return verdict;
}

RejectionVerdict check_rejective(const TranslationQuiver& q, const std::vector<Vertex>& deleted, std::size_t bound) {
  if (!strict(q, bound).strict) throw PreconditionError("rejectivity is only decided on strict quivers");
  const DeletedQuiver d(q, deleted);
  RejectionVerdict verdict;
  verdict.deleted = d.vertices();

  auto bad = [&](const VertexCombination& y) -> std::optional<std::string> {
    if (y.has_negative()) return describe_negative(q, y);
    return std::nullopt;
  };
  auto done = [](const VertexCombination& a, const VertexCombination& b) { return a.is_zero() && b.is_zero(); };

  auto run = [&](Vertex x, Criterion criterion, Step forward, Step backward, Step shift) {
    const VertexCombination unit(x);
    auto y0 = (d.*backward)(unit);
    auto y1 = (d.*forward)(y0) - unit;
    auto next = [&](const VertexCombination& a, const VertexCombination& b) {
      return (d.*forward)(b) - (d.*shift)(a);
    };
    verdict.witnesses.push_back(
        follow(x, criterion, std::move(y0), std::move(y1), bound, next, done, bad, verdict.failures));
  };

  for (auto x : d.vertices()) {
    if (!q.is_injective(x))
      run(x, Criterion::rejective_left, &DeletedQuiver::theta_plus, &DeletedQuiver::theta_minus,
          &DeletedQuiver::tau_plus);
    if (!q.is_projective(x))
      run(x, Criterion::rejective_right, &DeletedQuiver::theta_minus, &DeletedQuiver::theta_plus,
          &DeletedQuiver::tau_minus);
  }
  auto left = combine(verdict.witnesses, Criterion::rejective_left);
  auto right = combine(verdict.witnesses, Criterion::rejective_right);
  if (left == false || right == false)
    verdict.rejective = false;
  else if (left && right)
    verdict.rejective = true;
  return verdict;
}

bool dk_singleton(const TranslationQuiver& q, Vertex x) {
  if (!q.contains(x))
    throw InputError("vertex index " + std::to_string(x.index) + " is not a vertex of quiver '" + q.name() + "'");
  return q.is_projective(x) && q.is_injective(x);
}

std::vector<Vertex> rejectable_singletons(const TranslationQuiver& q) {
  std::vector<Vertex> out;
  for (auto x : q.vertices())
    if (dk_singleton(q, x)) out.push_back(x);
  return out;
}

}  // namespace tauq

#include "tauq/chains.hpp"

#include <algorithm>
#include <map>

#include "tauq/errors.hpp"
#include "tauq/operators.hpp"

namespace tauq {

std::string_view to_string(LadderKind kind) { return kind == LadderKind::theta ? "theta" : "eta"; }

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::reached_zero: return "reached-zero";
    case Termination::negative_coefficient: return "negative-coefficient";
    case Termination::bound_exceeded: return "bound-exceeded";
    case Termination::state_cycle: return "state-cycle";
  }
  return "?";
}

std::string_view to_string(NakayamaFailure f) {
  switch (f) {
    case NakayamaFailure::sink: return "sink";
    case NakayamaFailure::negative: return "negative";
    case NakayamaFailure::hits_projective: return "hits-projective";
    case NakayamaFailure::terminal_not_vertex: return "terminal-not-vertex";
    case NakayamaFailure::bound: return "bound";
    case NakayamaFailure::cycle: return "cycle";
  }
  return "?";
}

std::size_t default_bound(const TranslationQuiver& q) { return 16 * std::max<std::size_t>(q.size(), 1); }

namespace {

void require_vertex(const TranslationQuiver& q, Vertex v) {
  if (!q.contains(v)) throw InputError("vertex index " + std::to_string(v.index) + " out of range");
}

using State = std::pair<VertexCombination, VertexCombination>;

}  // namespace

ChainTable theta_chain(const TranslationQuiver& q, Vertex x, std::size_t bound) {
  require_vertex(q, x);
  ChainTable t;
  t.kind = LadderKind::theta;
  t.start = x;
  const VertexCombination start(x);
  t.bottom.push_back(start);
  t.top.emplace_back();
  std::map<State, std::size_t> seen;

  while (true) {
    const std::size_t n = t.bottom.size();
    if (n > 1 && t.bottom.back().is_zero()) {
      // One more step of the unrestricted recursion: -tau+ theta+_{n-2} X.
      if (!tau_plus_ext(q, t.bottom[n - 2]).is_zero()) t.truncations.push_back(n);
      t.termination = Termination::reached_zero;
      return t;
    }
    if (n > bound) {
      t.termination = Termination::bound_exceeded;
      return t;
    }
    if (n > 1) {
      auto [it, inserted] = seen.try_emplace(State{t.bottom[n - 2], t.bottom[n - 1]}, n - 1);
      if (!inserted) {
        t.termination = Termination::state_cycle;
        t.cycle_from = it->second;
        return t;
      }
    }
    const auto& previous = t.bottom[n - 1];
    VertexCombination shifted = tau_plus_ext(q, previous);
    VertexCombination next;
    if (n == 1) {
      next = theta_plus(q, previous);
    } else {
      VertexCombination raw = theta_plus(q, previous) - tau_plus_ext(q, t.bottom[n - 2]);
      next = positive_part(raw);
      if (next != raw) t.truncations.push_back(n);
    }
    t.top.push_back(std::move(shifted));
    t.bottom.push_back(std::move(next));
  }
}

VertexCombination theta_n(const TranslationQuiver& q, std::size_t n, const VertexCombination& v) {
  VertexCombination out;
  for (const auto& [x, c] : v) {
    require_vertex(q, x);
    // Once theta+_m X = 0 every later term vanishes too.
    auto chain = theta_chain(q, x, n + 1);
    if (n < chain.bottom.size()) {
      out += c * chain.bottom[n];
    } else if (chain.termination == Termination::state_cycle) {
      const std::size_t from = *chain.cycle_from;  // bottom[from] repeats at bottom.size() - 1
      const std::size_t period = chain.bottom.size() - 1 - from;
      out += c * chain.bottom[from + (n - from) % period];
    } else if (chain.termination != Termination::reached_zero) {
      throw Error("theta_n: recursion did not reach index " + std::to_string(n));
    }
  }
  return out;
}

ArtinianVerdict artinian(const TranslationQuiver& q, std::size_t bound) {
  ArtinianVerdict verdict;
  verdict.zero_index.resize(q.size());
  std::size_t index = 1;
  std::optional<Vertex> out_of_steps;
  for (auto x : q.vertices()) {
    auto chain = theta_chain(q, x, bound);
    switch (chain.termination) {
      case Termination::reached_zero:
        verdict.zero_index[x.index] = chain.bottom.size() - 1;
        index = std::max(index, chain.bottom.size() - 1);
        break;
      case Termination::state_cycle: {
        verdict.status = ArtinianStatus::not_artinian;
        verdict.witness = x;
        const auto n = chain.bottom.size() - 1;
        verdict.repeating_state = State{chain.bottom[n - 1], chain.bottom[n]};
        verdict.reason = "theta recursion of " + q.name_of(x) + " repeats the state at step " +
                         std::to_string(*chain.cycle_from) + " at step " + std::to_string(n);
        return verdict;
      }
      default:
        if (!out_of_steps) out_of_steps = x;
        break;
    }
  }
  if (out_of_steps) {
    verdict.status = ArtinianStatus::undecided;
    verdict.witness = out_of_steps;
    verdict.reason = "theta recursion of " + q.name_of(*out_of_steps) + " exceeded the bound of " +
                     std::to_string(bound) + " steps without repeating";
    return verdict;
  }
  verdict.status = ArtinianStatus::artinian;
  verdict.index = index;
  verdict.reason = "theta+_" + std::to_string(index) + " = 0";
  return verdict;
}

StrictVerdict strict(const TranslationQuiver& q, std::size_t bound) {
  auto art = artinian(q, bound);
  if (!art.artinian()) throw PreconditionError("strictness is only decided for artinian quivers: " + art.reason);

  StrictVerdict verdict;
  std::vector<bool> covered(q.size(), false);
  for (auto x : q.vertices()) {
    auto chain = theta_chain(q, x, bound);
    for (auto n : chain.truncations) verdict.truncations.emplace_back(x, n);
    if (!q.is_injective(x)) continue;
    for (const auto& term : chain.bottom)
      for (const auto& [v, c] : term) covered[v.index] = true;
  }
  for (auto v : q.vertices())
    if (!covered[v.index]) verdict.uncovered.push_back(v);
  verdict.support_criterion = verdict.uncovered.empty();
  verdict.exactness_criterion = verdict.truncations.empty();
  if (verdict.support_criterion != verdict.exactness_criterion)
    throw InvariantError("strictness criteria disagree on quiver '" + q.name() + "': support criterion " +
                         (verdict.support_criterion ? "holds" : "fails") + ", exactness criterion " +
                         (verdict.exactness_criterion ? "holds" : "fails"));
  verdict.strict = verdict.support_criterion;
  return verdict;
}

ChainTable eta_chain(const TranslationQuiver& q, Vertex a, std::size_t bound) {
  require_vertex(q, a);
  ChainTable t;
  t.kind = LadderKind::eta;
  t.start = a;
  const VertexCombination start(a);
  t.top.push_back(start);
  t.bottom.push_back(theta_minus(q, start));
  std::map<State, std::size_t> seen;

  while (true) {
    const std::size_t i = t.bottom.size();
    const auto& last = t.bottom.back();
    if (i > 1 && last.is_zero()) {
      t.termination = Termination::reached_zero;
      return t;
    }
    if (last.has_negative()) {
      t.termination = Termination::negative_coefficient;
      return t;
    }
    if (i > bound) {
      t.termination = Termination::bound_exceeded;
      return t;
    }
    if (i > 1) {
      auto [it, inserted] = seen.try_emplace(State{t.bottom[i - 2], t.bottom[i - 1]}, i - 1);
      if (!inserted) {
        t.termination = Termination::state_cycle;
        t.cycle_from = it->second;
        return t;
      }
    }
    VertexCombination next = theta_plus(q, last);
    next -= (i == 1) ? start : tau_plus_ext(q, t.bottom[i - 2]);
    t.top.push_back(tau_plus_ext(q, last));
    t.bottom.push_back(std::move(next));
  }
}

NakayamaResult nakayama_minus(const TranslationQuiver& q, Vertex a, std::size_t bound) {
  NakayamaResult r;
  r.source = a;
  r.chain = eta_chain(q, a, bound);
  const auto& rows = r.chain.bottom;
  if (rows.front().is_zero()) {
    r.failure = NakayamaFailure::sink;
    return r;
  }
  switch (r.chain.termination) {
    case Termination::negative_coefficient: r.failure = NakayamaFailure::negative; return r;
    case Termination::bound_exceeded: r.failure = NakayamaFailure::bound; return r;
    case Termination::state_cycle: r.failure = NakayamaFailure::cycle; return r;
    case Termination::reached_zero: break;
  }
  const std::size_t n = rows.size() - 2;  // rows[n + 1] is the first zero
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [v, c] : rows[i])
      if (q.is_projective(v)) {
        r.failure = NakayamaFailure::hits_projective;
        return r;
      }
  auto b = rows[n].as_single_vertex();
  if (!b) {
    r.failure = NakayamaFailure::terminal_not_vertex;
    return r;
  }
  r.defined = true;
  r.target = b;
  r.length = n;
  return r;
}

std::optional<NakayamaResult> nakayama_plus(const TranslationQuiver& q, Vertex b, std::size_t bound) {
  require_vertex(q, b);
  std::optional<NakayamaResult> found;
  for (auto a : q.vertices()) {
    auto r = nakayama_minus(q, a, bound);
    if (!r.defined || r.target != b) continue;
    if (found)
      throw InvariantError("two Nakayama sources " + q.name_of(found->source) + " and " + q.name_of(a) +
                           " map to " + q.name_of(b));
    found = std::move(r);
  }
  return found;
}

HomLengthMatrix hom_length_matrix(const TranslationQuiver& q, std::size_t bound) {
  auto art = artinian(q, bound);
  if (!art.artinian()) throw PreconditionError("hom-length matrix needs an artinian quiver: " + art.reason);
  HomLengthMatrix h(q.size(), std::vector<Integer>(q.size(), 0));
  for (auto y : q.vertices()) {
    auto chain = theta_chain(q, y, bound);
    for (const auto& term : chain.bottom)
      for (const auto& [x, c] : term) h[x.index][y.index] += c;
  }
  return h;
}

}  // namespace tauq

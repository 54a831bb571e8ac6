// One PASS/FAIL line per acceptance criterion; exit status 1 on any failure.
#include <iostream>
#include <map>
#include <set>

#include "support.hpp"
#include "tauq/additive.hpp"
#include "tauq/chains.hpp"
#include "tauq/classify.hpp"
#include "tauq/rejection.hpp"
#include "tauq/report.hpp"

using namespace tauq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::size_t bound_of(const TranslationQuiver& q) { return default_bound(q); }

std::set<std::string> name_set(const TranslationQuiver& q, const std::vector<Vertex>& vs) {
  auto n = test::names(q, vs);
  return {n.begin(), n.end()};
}

std::vector<VertexCombination> parse_cells(const TranslationQuiver& q, const std::vector<std::string>& cells) {
  std::vector<VertexCombination> out;
  for (const auto& c : cells) out.push_back(test::combination(q, c));
  return out;
}

// Every golden table for `quiver` matches the computed ladder cell for cell.
void check_goldens(Outcome& o, const std::string& quiver) {
  int seen = 0;
  for (const auto& g : test::golden_ladders()) {
    if (g.quiver != quiver) continue;
    ++seen;
    const auto& q = corpus(quiver);
    const auto x = q.vertex(g.start);
    auto t = g.kind == "theta" ? theta_chain(q, x, bound_of(q)) : eta_chain(q, x, bound_of(q));
    auto [top, bottom] = ladder_cells(q, t);
    o.require(parse_cells(q, top) == parse_cells(q, g.top) && parse_cells(q, bottom) == parse_cells(q, g.bottom),
              g.kind + " ladder of " + g.start + " differs from the table");
  }
  o.require(seen > 0, "no tables found for " + quiver);
}

std::map<std::string, std::string> partners(const TranslationQuiver& q, const C32Check& c) {
  std::map<std::string, std::string> out;
  for (const auto& p : c.partners)
    if (p.defined) out[q.name_of(p.source)] = q.name_of(*p.target);
  return out;
}

bool rejective(const std::string& quiver, const std::vector<std::string>& names) {
  const auto& q = corpus(quiver);
  return check_rejective(q, test::vertices(q, names), bound_of(q)).rejective == true;
}

Outcome criterion1() {
  Outcome o;
  const auto& q = corpus("EX421");
  o.require(artinian(q, bound_of(q)).artinian(), "not artinian");
  auto s = strict(q, bound_of(q));
  o.require(!s.strict, "reported strict");
  o.require(name_set(q, s.uncovered) == std::set<std::string>{"6", "8", "10", "14", "16"}, "uncovered set");
  check_goldens(o, "EX421");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto& q = corpus("EX451");
  auto r = classify(q, bound_of(q));
  o.require(r.c31.holds && r.c32.holds && !r.c33.holds && !r.c34.holds, "condition verdicts");
  o.require(partners(q, r.c32) ==
                std::map<std::string, std::string>{{"4", "17"}, {"6", "24"}, {"8", "30"}, {"15", "34"}, {"24", "6"}},
            "partner map");
  check_goldens(o, "EX451");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& q = corpus("EX452");
  auto r = classify(q, bound_of(q));
  o.require(r.c34.holds, "c34 fails");
  auto p = partners(q, r.c32);
  o.require(p["5"] == "25" && p["19"] == "11", "partner map");
  check_goldens(o, "EX452");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& q = corpus("EX453");
  auto r = classify(q, bound_of(q));
  o.require(r.c33.holds, "c33 fails");
  auto p = partners(q, r.c32);
  o.require(p["1"] == "5" && p["4"] == "8", "partner map");
  check_goldens(o, "EX453");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& q = corpus("EX454");
  auto r = classify(q, bound_of(q));
  o.require(r.c31.holds && !r.c32.holds, "condition verdicts");
  for (const auto* name : {"5", "6", "8", "9"})
    o.require(!nakayama_minus(q, q.vertex(name), bound_of(q)).defined, std::string("n- defined at ") + name);
  return o;
}

Outcome criterion6() {
  Outcome o;
  int agreements = 0;
  for (const auto& name : test::classified_fixtures()) {
    auto r = classify(corpus(name), bound_of(corpus(name)));
    if (!r.evaluated) continue;
    auto c = r.chain_verdicts();
    auto s = r.solver_verdicts();
    for (std::size_t i = 0; i < 4; ++i) {
      if (c[i] == s[i])
        ++agreements;
      else
        o.require(false, name + " condition " + std::to_string(i + 1));
    }
  }
  o.require(agreements == 32, std::to_string(agreements) + "/32 agreements");
  o.detail = o.pass ? "32/32 agreements" : o.detail;
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto* v : {"4", "6", "8", "24"}) o.require(rejective("EX451", {v}), std::string("EX451 {") + v + "}");
  for (const auto* v : {"1", "4"}) o.require(rejective("EX453", {v}), std::string("EX453 {") + v + "}");
  o.require(rejective("EX452", {"11", "8", "6", "3", "4", "24", "22", "19"}), "EX452 set");
  o.require(rejective("EX454", {"20", "17", "12", "8"}), "EX454 first set");
  o.require(rejective("EX454", {"21", "17", "12", "18", "14", "10", "6"}), "EX454 second set");
  o.require(test::names(corpus("EX451"), rejectable_singletons(corpus("EX451"))) ==
                std::vector<std::string>{"4", "6", "8", "24"},
            "EX451 singletons");
  o.require(test::names(corpus("EX453"), rejectable_singletons(corpus("EX453"))) == std::vector<std::string>{"1", "4"},
            "EX453 singletons");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto& q = corpus("EX542");
  o.require(validate(q).ok(), "validation failed");
  o.require(q.name_of(*q.tau_plus(q.vertex("20"))) == "10", "tau+(20)");
  o.require(name_set(q, q.projectives()) == std::set<std::string>{"7", "13", "17", "25", "26"}, "projectives");
  o.require(name_set(q, q.injectives()) == std::set<std::string>{"1", "5", "13", "17", "23"}, "injectives");
  o.require(artinian(q, bound_of(q)).artinian(), "not artinian");
  o.require(strict(q, bound_of(q)).strict, "not strict");
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937 rng(2024);
  std::vector<TranslationQuiver> quivers;
  for (const auto& name : test::classified_fixtures()) quivers.push_back(corpus(name));
  for (int i = 0; i < 40; ++i) quivers.push_back(test::random_quiver(rng));

  int operator_cases = 0, dk = 0, chains = 0, perturbed = 0;
  for (const auto& q : quivers) {
    const auto bound = bound_of(q);
    const bool art = artinian(q, bound).artinian();
    std::optional<StrictVerdict> s;
    if (art) {
      s = strict(q, bound);
      o.require(s->support_criterion == s->exactness_criterion, "(b) strict criteria disagree on " + q.name());
    }
    // (a) singleton shortcut, wherever the rejectivity check applies
    if (s && s->strict)
      for (auto x : q.vertices()) {
        ++dk;
        o.require((check_rejective(q, {x}, bound).rejective == true) == dk_singleton(q, x),
                  "(a) singleton disagreement on " + q.name() + " at " + q.name_of(x));
      }
    // (d), (e) Nakayama ladders
    if (art) {
      std::vector<FeasibilityOutcome> functions;
      for (auto c : {LMinusConstraint::free, LMinusConstraint::equal_to_injectives, LMinusConstraint::equal_to_sinks})
        if (auto f = find_additive(q, c); f.feasible) functions.push_back(f);
      for (auto a : q.vertices()) {
        auto r = nakayama_minus(q, a, bound);
        if (!r.defined) continue;
        ++chains;
        auto back = nakayama_plus(q, *r.target, bound);
        o.require(back && back->source == a, "(e) n+ n- is not the identity on " + q.name());
        for (const auto& f : functions) {
          auto l = [&](const VertexCombination& v) {
            return v.evaluate([&](Vertex x) { return f.result->values[x.index]; });
          };
          const Integer d0 = l(r.chain.top[0]) - l(r.chain.bottom[0]);
          for (std::size_t i = 0; i <= *r.length; ++i)
            o.require(l(r.chain.top[i]) - l(r.chain.bottom[i]) == d0, "(d) non-constant difference on " + q.name());
        }
      }
    }
    // (f)
    for (int i = 0; i < 25; ++i, ++operator_cases) {
      auto u = test::random_combination(q, rng), v = test::random_combination(q, rng);
      o.require(theta_plus(q, u + v) == theta_plus(q, u) + theta_plus(q, v) &&
                    theta_minus(q, u + v) == theta_minus(q, u) + theta_minus(q, v) &&
                    tau_plus_ext(q, u + v) == tau_plus_ext(q, u) + tau_plus_ext(q, v) &&
                    tau_minus_ext(q, u + v) == tau_minus_ext(q, u) + tau_minus_ext(q, v),
                "(f) operator not additive on " + q.name());
    }
    for (auto x : q.vertices()) {
      VertexCombination unit(x);
      if (!q.is_projective(x))
        o.require(tau_minus_ext(q, tau_plus_ext(q, unit)) == unit, "(f) tau- tau+ on " + q.name());
      if (!q.is_injective(x))
        o.require(tau_plus_ext(q, tau_minus_ext(q, unit)) == unit, "(f) tau+ tau- on " + q.name());
    }
  }
  // (c)
  for (const auto* name : {"A2", "PT1", "EX453"}) {
    const auto& q = corpus(name);
    const auto bound = bound_of(q);
    const auto h = hom_length_matrix(q, bound);
    auto base = find_right_additive(q);
    o.require(base.feasible, std::string("(c) no right additive function on ") + name);
    if (!base.feasible) continue;
    const auto a0 = decompose_right_additive(q, base.result->values, bound);
    for (int k = 0; k < 34; ++k, ++perturbed) {
      auto l = base.result->values;
      std::map<Vertex, Integer> extra;
      for (auto x : q.projectives()) {
        extra[x] = std::uniform_int_distribution<int>(0, 5)(rng);
        for (auto y : q.vertices()) l[y.index] += extra[x] * h[x.index][y.index];
      }
      auto a = decompose_right_additive(q, l, bound);
      for (auto x : q.projectives())
        o.require(a.at(x) == a0.at(x) + extra.at(x), std::string("(c) wrong coefficient on ") + name);
    }
  }
  o.require(operator_cases >= 1000, "(f) too few cases");
  o.require(perturbed >= 100, "(c) too few instances");
  if (o.pass)
    o.detail = std::to_string(dk) + " singletons, " + std::to_string(chains) + " chains, " +
               std::to_string(perturbed) + " decompositions, " + std::to_string(operator_cases) + " operator cases";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto& q = corpus("A2");
  const std::vector<std::vector<Integer>> expected = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  auto order = test::vertices(q, {"a", "b", "c"});
  auto h = hom_length_matrix(q, bound_of(q));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      o.require(h[order[i].index][order[j].index] == expected[i][j], "entry mismatch");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"EX421 artinian, not strict, theta ladders", criterion1},
      {"EX451 conditions, partners, eta ladders", criterion2},
      {"EX452 socle-projective, partners, eta ladders", criterion3},
      {"EX453 module category, partners, eta ladders", criterion4},
      {"EX454 partners undefined at 5 6 8 9", criterion5},
      {"chain and solver verdicts agree", criterion6},
      {"rejective sets and rejectable singletons", criterion7},
      {"EX542 valid, artinian, strict", criterion8},
      {"property suites", criterion9},
      {"A2 hom-length matrix", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}

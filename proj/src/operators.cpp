#include "tauq/operators.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "tauq/errors.hpp"

namespace tauq {

namespace {

void require_vertices(const TranslationQuiver& q, const VertexCombination& v) {
  for (const auto& [vertex, c] : v)
    if (!q.contains(vertex))
      throw InputError("vertex index " + std::to_string(vertex.index) + " is not a vertex of quiver '" + q.name() + "'");
}

}  // namespace

VertexCombination theta_plus(const TranslationQuiver& q, const VertexCombination& v) {
  require_vertices(q, v);
  VertexCombination out;
  for (const auto& [x, c] : v)
    for (const auto& a : q.arrows_into(x)) out.add(a.source, c * a.valuation.d);
  return out;
}

VertexCombination theta_minus(const TranslationQuiver& q, const VertexCombination& v) {
  require_vertices(q, v);
  VertexCombination out;
  for (const auto& [x, c] : v)
    for (const auto& a : q.arrows_out_of(x)) out.add(a.target, c * a.valuation.dprime);
  return out;
}

VertexCombination tau_plus_ext(const TranslationQuiver& q, const VertexCombination& v) {
  require_vertices(q, v);
  VertexCombination out;
  for (const auto& [x, c] : v) {
    if (q.is_projective(x)) continue;
    if (auto t = q.tau_plus(x)) out.add(*t, c);
  }
  return out;
}

VertexCombination tau_minus_ext(const TranslationQuiver& q, const VertexCombination& v) {
  require_vertices(q, v);
  VertexCombination out;
  for (const auto& [x, c] : v) {
    if (q.is_injective(x)) continue;
    if (auto t = q.tau_minus(x)) out.add(*t, c);
  }
  return out;
}

VertexCombination phi_plus(const TranslationQuiver& q, const VertexCombination& v) {
  return v - theta_plus(q, v) + tau_plus_ext(q, v);
}

VertexCombination phi_minus(const TranslationQuiver& q, const VertexCombination& v) {
  return v - theta_minus(q, v) + tau_minus_ext(q, v);
}

ValidationReport validate(const TranslationQuiver& q) {
  ValidationReport report;
  auto flag = [&](std::string rule, std::string detail) {
    report.violations.push_back({std::move(rule), std::move(detail)});
  };
  const auto& nm = [&](Vertex v) -> const std::string& { return q.name_of(v); };

  for (const auto& a : q.arrows()) {
    if ((a.valuation.d == 0) != (a.valuation.dprime == 0))
      flag("mixed-valuation", "arrow " + nm(a.source) + " -> " + nm(a.target) + " has valuation (" +
                                  std::to_string(a.valuation.d) + "," + std::to_string(a.valuation.dprime) +
                                  "); both components must be zero or both positive");
  }

  std::vector<int> preimages(q.size(), 0);
  for (auto x : q.vertices()) {
    auto t = q.tau_plus(x);
    if (q.is_projective(x)) {
      if (t) flag("tau-on-projective", "tau_plus defined on projective " + nm(x));
      continue;
    }
    if (!t) {
      flag("tau-undefined", "tau_plus undefined on non-projective " + nm(x));
      continue;
    }
    ++preimages[t->index];
    if (q.is_injective(*t))
      flag("tau-into-injective", "tau_plus(" + nm(x) + ") = " + nm(*t) + " lies in Q^i");
  }
  for (auto y : q.vertices()) {
    if (preimages[y.index] > 1)
      flag("tau-not-injective", "vertex " + nm(y) + " is tau_plus of " + std::to_string(preimages[y.index]) +
                                    " vertices");
    if (!q.is_injective(y) && preimages[y.index] == 0)
      flag("tau-not-surjective", "non-injective " + nm(y) + " is not in the image of tau_plus");
  }

  for (auto x : q.vertices()) {
    if (q.arrows_into(x).empty() && !q.is_projective(x))
      flag("no-predecessor", "vertex " + nm(x) + " has no incoming arrow but is not in Q^p");
    if (q.is_projective(x)) continue;
    auto t = q.tau_plus(x);
    if (!t) continue;
    for (auto y : q.vertices()) {
      auto into_x = q.valuation(y, x).d;
      auto out_of_tau = q.valuation(*t, y).dprime;
      if (into_x != out_of_tau)
        flag("mesh", "d(" + nm(y) + "," + nm(x) + ") = " + std::to_string(into_x) + " but d'(" + nm(*t) + "," +
                         nm(y) + ") = " + std::to_string(out_of_tau) + " with tau_plus(" + nm(x) + ") = " + nm(*t));
    }
  }
  return report;
}

AdmissibilityResult admissibility(const TranslationQuiver& q) {
  // c(Y) = c(X) * d(X,Y) / d'(X,Y) along every arrow X -> Y.
  const auto n = q.size();
  std::vector<std::optional<Rational>> ratio(n);
  std::vector<Vertex> parent(n);
  std::vector<std::vector<std::pair<Vertex, Rational>>> adjacent(n);
  for (const auto& a : q.arrows()) {
    if (a.valuation.d == 0 || a.valuation.dprime == 0) continue;  // rejected by validate
    Rational forward(a.valuation.d, a.valuation.dprime);
    forward.canonicalize();
    adjacent[a.source.index].emplace_back(a.target, forward);
    adjacent[a.target.index].emplace_back(a.source, 1 / forward);
  }

  AdmissibilityResult result;
  std::vector<Integer> c(n, 1);
  auto path_to_root = [&](Vertex v) {
    std::vector<Vertex> path{v};
    while (parent[path.back().index] != path.back()) path.push_back(parent[path.back().index]);
    return path;
  };

  for (auto root : q.vertices()) {
    if (ratio[root.index]) continue;
    std::vector<Vertex> component{root};
    ratio[root.index] = Rational(1);
    parent[root.index] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (const auto& [y, r] : adjacent[x.index]) {
        Rational expected = *ratio[x.index] * r;
        if (!ratio[y.index]) {
          ratio[y.index] = expected;
          parent[y.index] = x;
          component.push_back(y);
          queue.push_back(y);
        } else if (*ratio[y.index] != expected && !result.conflict) {
          std::ostringstream os;
          os << "arrow between " << q.name_of(x) << " and " << q.name_of(y) << " closes a cycle with ratio product "
             << Rational(expected / *ratio[y.index]).get_str() << " (tree paths:";
          for (auto v : path_to_root(x)) os << ' ' << q.name_of(v);
          os << " |";
          for (auto v : path_to_root(y)) os << ' ' << q.name_of(v);
          os << ")";
          result.conflict = os.str();
        }
      }
    }
    // Clear denominators, then divide out the common factor of the numerators.
    Integer lcm = 1, gcd = 0;
    for (auto v : component) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ratio[v.index]->get_den_mpz_t());
    for (auto v : component) {
      Rational scaled = *ratio[v.index] * lcm;
      c[v.index] = scaled.get_num();
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c[v.index].get_mpz_t());
    }
    for (auto v : component) c[v.index] /= gcd;
  }

  result.admissible = !result.conflict;
  if (result.admissible) result.c = std::move(c);
  return result;
}

}  // namespace tauq

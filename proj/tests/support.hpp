#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tauq/corpus.hpp"
#include "tauq/operators.hpp"
#include "tauq/translation_quiver.hpp"
#include "tauq/vertex_combination.hpp"

namespace test {

using namespace tauq;

inline const std::vector<std::string>& reference_fixtures() {
  static const std::vector<std::string> names = {"EX421", "EX451", "EX452", "EX453", "EX454", "EX542"};
  return names;
}

/// The reference fixtures plus the two hand-made ones.
inline const std::vector<std::string>& classified_fixtures() {
  static const std::vector<std::string> names = {"EX421", "EX451", "EX452", "EX453",
                                                 "EX454", "EX542", "A2",    "PT1"};
  return names;
}

inline std::vector<Vertex> vertices(const TranslationQuiver& q, const std::vector<std::string>& names) {
  std::vector<Vertex> out;
  for (const auto& n : names) out.push_back(q.vertex(n));
  return out;
}

inline std::vector<std::string> names(const TranslationQuiver& q, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(q.name_of(v));
  return out;
}

/// "18^2,19" -> 2*18 + 19; the empty string is zero.
inline VertexCombination combination(const TranslationQuiver& q, const std::string& text) {
  VertexCombination out;
  std::stringstream in(text);
  for (std::string term; std::getline(in, term, ',');) {
    if (term.empty()) continue;
    long k = 1;
    if (auto hat = term.find('^'); hat != std::string::npos) {
      k = std::stol(term.substr(hat + 1));
      term = term.substr(0, hat);
    }
    out.add(q.vertex(term), k);
  }
  return out;
}

struct GoldenLadder {
  std::string quiver, kind, start, target;
  std::vector<std::string> top, bottom;  // left to right as printed
};

inline std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  auto first = line.find('|');
  std::string rest = line.substr(first + 1);
  std::stringstream in(rest);
  for (std::string cell; std::getline(in, cell, '|');) {
    cell.erase(0, cell.find_first_not_of(' '));
    cell.erase(cell.find_last_not_of(' ') + 1);
    cells.push_back(cell);
  }
  return cells;
}

inline std::vector<GoldenLadder> golden_ladders() {
  std::ifstream in(std::string(TAUQ_GOLDEN_DIR) + "/ladders.txt");
  std::vector<GoldenLadder> out;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("ladder ", 0) == 0) {
      GoldenLadder g;
      std::stringstream(line.substr(7)) >> g.quiver >> g.kind >> g.start >> g.target;
      out.push_back(g);
    } else if (line.rfind("top", 0) == 0) {
      out.back().top = split_cells(line);
    } else if (line.rfind("bottom", 0) == 0) {
      out.back().bottom = split_cells(line);
    }
  }
  return out;
}

/// AR quiver of the linear Nakayama algebra with Kupisch series `lengths`
/// (lengths[a] = length of the projective with top a; last entry 1).
/// Vertex "a-b" is the uniserial module with top a and socle b.
inline TranslationQuiver nakayama_quiver(const std::vector<int>& lengths) {
  const int n = static_cast<int>(lengths.size());
  auto exists = [&](int a, int b) { return a >= 0 && a < n && b >= a && b <= a + lengths[a] - 1; };
  auto name = [](int a, int b) { return std::to_string(a) + "-" + std::to_string(b); };
  TranslationQuiver::Builder builder("nakayama");
  for (int a = 0; a < n; ++a)
    for (int b = a; exists(a, b); ++b) builder.add_vertex(name(a, b));
  for (int a = 0; a < n; ++a)
    for (int b = a; exists(a, b); ++b) {
      if (exists(a + 1, b)) builder.add_arrow(name(a + 1, b), name(a, b));
      if (b > a) builder.add_arrow(name(a, b), name(a, b - 1));
      if (b == a + lengths[a] - 1)
        builder.mark_projective(name(a, b));
      else
        builder.set_tau(name(a, b), name(a + 1, b + 1));
      if (!exists(a - 1, b)) builder.mark_injective(name(a, b));
    }
  return builder.build();
}

/// The full subquiver on `keep` with tau restricted; vertices that lose
/// their translate become projective, those that lose their preimage
/// injective.
inline TranslationQuiver full_subquiver(const TranslationQuiver& q, const std::vector<bool>& keep) {
  TranslationQuiver::Builder builder(q.name() + "-sub");
  for (auto v : q.vertices())
    if (keep[v.index]) builder.add_vertex(q.name_of(v));
  for (const auto& a : q.arrows())
    if (keep[a.source.index] && keep[a.target.index])
      builder.add_arrow(q.name_of(a.source), q.name_of(a.target), a.valuation);
  for (auto v : q.vertices()) {
    if (!keep[v.index]) continue;
    auto t = q.is_projective(v) ? std::nullopt : q.tau_plus(v);
    if (t && keep[t->index])
      builder.set_tau(q.name_of(v), q.name_of(*t));
    else
      builder.mark_projective(q.name_of(v));
    auto s = q.is_injective(v) ? std::nullopt : q.tau_minus(v);
    if (!(s && keep[s->index])) builder.mark_injective(q.name_of(v));
  }
  return builder.build();
}

/// A random valid translation quiver with at most about 15 vertices.
inline TranslationQuiver random_quiver(std::mt19937& rng) {
  for (;;) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<int> lengths(n, 1);
    for (int a = n - 2; a >= 0; --a) lengths[a] = std::uniform_int_distribution<int>(2, lengths[a + 1] + 1)(rng);
    auto q = nakayama_quiver(lengths);
    if (std::bernoulli_distribution(0.4)(rng)) return q;
    std::vector<bool> keep(q.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = std::bernoulli_distribution(0.8)(rng);
    if (std::find(keep.begin(), keep.end(), true) == keep.end()) continue;
    auto sub = full_subquiver(q, keep);
    if (validate(sub).ok()) return sub;
  }
}

/// A random small signed combination over q.
inline VertexCombination random_combination(const TranslationQuiver& q, std::mt19937& rng, int max_coeff = 3) {
  VertexCombination v;
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  for (auto x : q.vertices())
    if (std::bernoulli_distribution(0.3)(rng)) v.add(x, coeff(rng));
  return v;
}

}  // namespace test

#include "tauq/vertex_combination.hpp"

#include <algorithm>

namespace tauq {

VertexCombination::VertexCombination(Vertex v, const Integer& coefficient) {
  add(v, coefficient);
}

Integer VertexCombination::coefficient(Vertex v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Integer(0) : it->second;
}

void VertexCombination::add(Vertex v, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(v, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Vertex> VertexCombination::support() const {
  std::vector<Vertex> out;
  out.reserve(terms_.size());
  for (const auto& [v, c] : terms_) out.push_back(v);
  return out;
}

bool VertexCombination::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::optional<Vertex> VertexCombination::as_single_vertex() const {
  if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
  return terms_.begin()->first;
}

Integer VertexCombination::evaluate(const std::function<Integer(Vertex)>& weight) const {
  Integer total = 0;
  for (const auto& [v, c] : terms_) total += c * weight(v);
  return total;
}

VertexCombination& VertexCombination::operator+=(const VertexCombination& other) {
  for (const auto& [v, c] : other.terms_) add(v, c);
  return *this;
}

VertexCombination& VertexCombination::operator-=(const VertexCombination& other) {
  for (const auto& [v, c] : other.terms_) add(v, -c);
  return *this;
}

VertexCombination& VertexCombination::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [v, c] : terms_) c *= scalar;
  return *this;
}

bool operator<(const VertexCombination& a, const VertexCombination& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return cmp(x.second, y.second) < 0;
      });
}

VertexCombination positive_part(const VertexCombination& v) {
  VertexCombination out;
  for (const auto& [vertex, c] : v)
    if (c > 0) out.add(vertex, c);
  return out;
}

}  // namespace tauq

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace tauq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Index of a vertex inside its TranslationQuiver. Indices follow the
/// quiver's display order, so comparing vertices compares display order.
struct Vertex {
  std::uint32_t index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// A formal integer linear combination of vertices, i.e. an element of the
/// free abelian group on the vertex set. Zero coefficients are never stored.
class VertexCombination {
 public:
  using Terms = std::map<Vertex, Integer>;
  using const_iterator = Terms::const_iterator;

  VertexCombination() = default;
  explicit VertexCombination(Vertex v, const Integer& coefficient = 1);

  [[nodiscard]] Integer coefficient(Vertex v) const;
  void add(Vertex v, const Integer& coefficient);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] std::vector<Vertex> support() const;

  /// True when every coefficient is >= 0 (the zero combination included).
  [[nodiscard]] bool is_nonnegative() const;
  [[nodiscard]] bool has_negative() const { return !is_nonnegative(); }

  /// The vertex V when this combination is exactly 1*V.
  [[nodiscard]] std::optional<Vertex> as_single_vertex() const;

  /// Sum of coefficient(v) * weight(v).
  [[nodiscard]] Integer evaluate(const std::function<Integer(Vertex)>& weight) const;

  [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const { return terms_.end(); }

  VertexCombination& operator+=(const VertexCombination& other);
  VertexCombination& operator-=(const VertexCombination& other);
  VertexCombination& operator*=(const Integer& scalar);

  friend VertexCombination operator+(VertexCombination a, const VertexCombination& b) { return a += b; }
  friend VertexCombination operator-(VertexCombination a, const VertexCombination& b) { return a -= b; }
  friend VertexCombination operator*(const Integer& s, VertexCombination a) { return a *= s; }
  friend VertexCombination operator-(VertexCombination a) { return a *= -1; }

  friend bool operator==(const VertexCombination&, const VertexCombination&) = default;
  /// Lexicographic on (vertex, coefficient) terms; only used to key maps.
  friend bool operator<(const VertexCombination& a, const VertexCombination& b);

 private:
  Terms terms_;
};

/// Keeps the strictly positive terms: (2a - b + c)_+ = 2a + c.
VertexCombination positive_part(const VertexCombination& v);

}  // namespace tauq

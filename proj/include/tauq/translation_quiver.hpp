#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tauq/vertex_combination.hpp"

namespace tauq {

/// Valuation (d, d') of an arrow. (0, 0) means there is no arrow.
struct Valuation {
  std::uint32_t d = 0;
  std::uint32_t dprime = 0;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

struct Arrow {
  Vertex source;
  Vertex target;
  Valuation valuation;
};

/// Natural ordering on vertex names: decimal numbers compare numerically and
/// sort before other names, which compare lexicographically.
bool natural_less(std::string_view a, std::string_view b);

/// A finite valued translation quiver (Q, Q^p, Q^i, tau+, d, d').
///
/// The structure is immutable once built. It can hold candidates that break
/// the translation-quiver axioms; `validate` reports those, and the analyses
/// assume a validated quiver.
class TranslationQuiver {
 public:
  class Builder;

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] std::vector<Vertex> vertices() const;

  [[nodiscard]] const std::string& name_of(Vertex v) const;
  [[nodiscard]] std::optional<Vertex> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  [[nodiscard]] Vertex vertex(std::string_view name) const;
  [[nodiscard]] bool contains(Vertex v) const { return v.index < names_.size(); }

  [[nodiscard]] bool is_projective(Vertex v) const { return projective_.at(v.index); }
  [[nodiscard]] bool is_injective(Vertex v) const { return injective_.at(v.index); }
  [[nodiscard]] std::vector<Vertex> projectives() const;
  [[nodiscard]] std::vector<Vertex> injectives() const;

  /// The translation tau+ as stored (may be set on projectives in an
  /// unvalidated candidate).
  [[nodiscard]] std::optional<Vertex> tau_plus(Vertex v) const { return tau_plus_.at(v.index); }
  /// Inverse of tau+; undefined on vertices outside its image.
  [[nodiscard]] std::optional<Vertex> tau_minus(Vertex v) const { return tau_minus_.at(v.index); }

  [[nodiscard]] Valuation valuation(Vertex from, Vertex to) const;
  [[nodiscard]] std::span<const Arrow> arrows() const { return arrows_; }
  /// Arrows ending at v, ordered by source.
  [[nodiscard]] std::span<const Arrow> arrows_into(Vertex v) const;
  /// Arrows starting at v, ordered by target.
  [[nodiscard]] std::span<const Arrow> arrows_out_of(Vertex v) const;

 private:
  TranslationQuiver() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<bool> projective_;
  std::vector<bool> injective_;
  std::vector<std::optional<Vertex>> tau_plus_;
  std::vector<std::optional<Vertex>> tau_minus_;
  std::vector<Arrow> arrows_;   // sorted by (source, target)
  std::vector<Arrow> incoming_; // sorted by (target, source)
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> in_offsets_;
};

/// Collects vertices, marks, arrows and translations by name. Reference
/// errors (unknown or duplicate names, redefinitions) throw InputError;
/// axiom violations are left for `validate`.
class TranslationQuiver::Builder {
 public:
  explicit Builder(std::string name = {}) : name_(std::move(name)) {}

  Builder& add_vertex(std::string name);
  Builder& add_arrow(std::string_view source, std::string_view target, Valuation valuation = {1, 1});
  Builder& mark_projective(std::string_view name);
  Builder& mark_injective(std::string_view name);
  /// Records tau+(source) = target.
  Builder& set_tau(std::string_view source, std::string_view target);

  [[nodiscard]] bool has_vertex(std::string_view name) const;

  [[nodiscard]] TranslationQuiver build() const;

 private:
  struct PendingArrow {
    std::string source, target;
    Valuation valuation;
  };

  void require_vertex(std::string_view name) const;

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<std::string> projective_, injective_;
  std::vector<PendingArrow> arrows_;
  std::vector<std::pair<std::string, std::string>> tau_;
};

}  // namespace tauq

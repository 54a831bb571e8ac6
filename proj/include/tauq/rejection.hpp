#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tauq/translation_quiver.hpp"
#include "tauq/vertex_combination.hpp"

namespace tauq {

/// The full subquiver on a vertex subset S, with valuations and translations
/// restricted to S. Projective/injective membership always refers to the
/// base quiver; vertices whose translate fell outside S do not become new
/// projectives.
class DeletedQuiver {
 public:
  DeletedQuiver(const TranslationQuiver& base, std::vector<Vertex> subset);

  [[nodiscard]] const TranslationQuiver& base() const { return *base_; }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return kept_; }
  [[nodiscard]] bool contains(Vertex v) const { return v.index < member_.size() && member_[v.index]; }
  [[nodiscard]] bool base_projective(Vertex v) const { return base_->is_projective(v); }
  [[nodiscard]] bool base_injective(Vertex v) const { return base_->is_injective(v); }
  [[nodiscard]] std::vector<Arrow> arrows() const;

  [[nodiscard]] VertexCombination theta_plus(const VertexCombination& v) const;
  [[nodiscard]] VertexCombination theta_minus(const VertexCombination& v) const;
  [[nodiscard]] VertexCombination tau_plus(const VertexCombination& v) const;
  [[nodiscard]] VertexCombination tau_minus(const VertexCombination& v) const;

 private:
  const TranslationQuiver* base_;
  std::vector<Vertex> kept_;
  std::vector<bool> member_;
};

/// InputError for vertices outside q.
DeletedQuiver delete_subset(const TranslationQuiver& q, const std::vector<Vertex>& deleted);

enum class Criterion { trivial, rejective_left, rejective_right };
enum class SequenceOutcome { reached_zero, periodic, violated, bound_exceeded };

std::string_view to_string(Criterion c);
std::string_view to_string(SequenceOutcome o);

struct YSequence {
  Vertex start;
  Criterion criterion = Criterion::trivial;
  std::vector<VertexCombination> terms;
  SequenceOutcome outcome = SequenceOutcome::bound_exceeded;
};

struct RejectionFailure {
  Vertex start;
  Criterion criterion = Criterion::trivial;
  std::size_t step = 0;
  std::string reason;
};

struct RejectionVerdict {
  std::vector<Vertex> deleted;
  /// Absent when the criterion was not run or a sequence ran past the bound.
  std::optional<bool> trivial;
  std::optional<bool> rejective;
  std::vector<YSequence> witnesses;
  std::vector<RejectionFailure> failures;
};

/// For X in S n Q^i: Y0 = X, Y1 = theta+ X, Yi = (theta+ Yi-1 - tau+ Yi-2)_+
/// inside the deleted quiver; trivial iff every Yi avoids Q^p.
RejectionVerdict check_trivial(const TranslationQuiver& q, const std::vector<Vertex>& deleted, std::size_t bound);

/// For X in S - Q^i: Y0 = theta- X, Y1 = theta+ theta- X - X,
/// Yi = theta+ Yi-1 - tau+ Yi-2; for X in S - Q^p the mirror sequence.
/// Rejective iff no term has a negative coefficient. PreconditionError unless
/// q is strict artinian.
RejectionVerdict check_rejective(const TranslationQuiver& q, const std::vector<Vertex>& deleted, std::size_t bound);

/// A singleton {X} is rejectable exactly when X is projective and injective.
bool dk_singleton(const TranslationQuiver& q, Vertex x);
std::vector<Vertex> rejectable_singletons(const TranslationQuiver& q);

}  // namespace tauq

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tauq/translation_quiver.hpp"
#include "tauq/vertex_combination.hpp"

namespace tauq {

enum class LadderKind { theta, eta };

enum class Termination {
  reached_zero,
  negative_coefficient,
  bound_exceeded,
  state_cycle,
};

std::string_view to_string(LadderKind kind);
std::string_view to_string(Termination t);

/// The two-row ladder of the theta+_n or eta+_i recursion, stored index-0
/// first. Both rows have the same length and include the terminating zero
/// when the recursion reaches one.
///
/// theta ladder: bottom[n] = theta+_n X, top[0] = 0, top[n] = tau+ theta+_{n-1} X.
/// eta ladder:   bottom[i] = eta+_i A,   top[0] = A, top[i] = tau+ eta+_{i-1} A.
struct ChainTable {
  LadderKind kind = LadderKind::theta;
  Vertex start;
  std::vector<VertexCombination> top;
  std::vector<VertexCombination> bottom;
  Termination termination = Termination::bound_exceeded;
  /// For state cycles: the index n whose state (bottom[n-1], bottom[n]) recurs.
  std::optional<std::size_t> cycle_from;
  /// theta ladders only: the indices n >= 2 where theta+ theta+_{n-1} X -
  /// tau+ theta+_{n-2} X had a negative coefficient, i.e. the positive part
  /// changed something. Includes the step right after the terminating zero.
  std::vector<std::size_t> truncations;
};

/// Iteration bound used when the caller has no preference: 16 |Q| steps.
std::size_t default_bound(const TranslationQuiver& q);

ChainTable theta_chain(const TranslationQuiver& q, Vertex x, std::size_t bound);

/// theta+_n evaluated on each basis vertex of v and extended additively.
VertexCombination theta_n(const TranslationQuiver& q, std::size_t n, const VertexCombination& v);

enum class ArtinianStatus { artinian, not_artinian, undecided };

struct ArtinianVerdict {
  ArtinianStatus status = ArtinianStatus::undecided;
  /// Least n > 0 with theta+_n = 0, when artinian.
  std::optional<std::size_t> index;
  /// Per vertex, the first n with theta+_n X = 0 (absent when it never came).
  std::vector<std::optional<std::size_t>> zero_index;
  /// Vertex whose chain certifies non-artinian-ness or ran out of steps.
  std::optional<Vertex> witness;
  /// The repeating state (theta+_{n-1} X, theta+_n X) for non-artinian quivers.
  std::optional<std::pair<VertexCombination, VertexCombination>> repeating_state;
  std::string reason;

  [[nodiscard]] bool artinian() const { return status == ArtinianStatus::artinian; }
};

ArtinianVerdict artinian(const TranslationQuiver& q, std::size_t bound);

struct StrictVerdict {
  bool strict = false;
  /// Q equals the union of supp theta+_n X over injective X.
  bool support_criterion = false;
  /// theta+_n = theta+ theta+_{n-1} - tau+ theta+_{n-2} for every n >= 2.
  bool exactness_criterion = false;
  std::vector<Vertex> uncovered;
  /// (vertex, n) pairs where the positive part truncated.
  std::vector<std::pair<Vertex, std::size_t>> truncations;
};

/// Decides strictness of an artinian quiver by both criteria and throws
/// InvariantError if they disagree. PreconditionError on non-artinian input.
StrictVerdict strict(const TranslationQuiver& q, std::size_t bound);

ChainTable eta_chain(const TranslationQuiver& q, Vertex a, std::size_t bound);

enum class NakayamaFailure {
  sink,                // theta- A = 0
  negative,            // some eta+_i A has a negative coefficient
  hits_projective,     // eta+_i A meets Q^p before the terminal step
  terminal_not_vertex, // eta+_{n+1} A = 0 but eta+_n A is not a single vertex
  bound,
  cycle,
};

std::string_view to_string(NakayamaFailure f);

struct NakayamaResult {
  Vertex source;
  bool defined = false;
  std::optional<Vertex> target;
  std::optional<std::size_t> length;  // the n with eta+_n A = B
  ChainTable chain;
  std::optional<NakayamaFailure> failure;
};

/// n-(A): the Nakayama partner B with (A, B) a Nakayama pair.
NakayamaResult nakayama_minus(const TranslationQuiver& q, Vertex a, std::size_t bound);

/// n+(B): the unique A with n-(A) = B, or nullopt when no vertex maps to B.
/// Throws InvariantError if two vertices do.
std::optional<NakayamaResult> nakayama_plus(const TranslationQuiver& q, Vertex b, std::size_t bound);

/// H[X][Y] = sum_n (coefficient of X in theta+_n Y). PreconditionError unless
/// q is artinian within the bound.
using HomLengthMatrix = std::vector<std::vector<Integer>>;
HomLengthMatrix hom_length_matrix(const TranslationQuiver& q, std::size_t bound);

}  // namespace tauq

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tauq/errors.hpp"
#include "tauq/translation_quiver.hpp"

namespace tauq {

/// InputError carrying the 1-based line it refers to (0 when none applies).
class FormatError : public InputError {
 public:
  FormatError(std::size_t line, const std::string& message)
      : InputError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class DeclarationKind { vertex, proj, inj, arrow, tau };

struct Declaration {
  DeclarationKind kind;
  std::vector<std::string> tokens;
  std::size_t line = 0;
};

/// A tokenized quiver file. Lines look like
///   quiver NAME | vertex ID... | proj ID... | inj ID... |
///   arrow SRC DST [D DPRIME] | tau X Y      (tau+ X = Y)
/// with '#' starting a comment.
struct QuiverDocument {
  std::string name;
  std::vector<Declaration> declarations;
};

/// Syntax only: keywords, token counts, integer valuations.
QuiverDocument parse_quiver(std::string_view text);

enum class LowerMode {
  validated,   // reject quivers that fail validate()
  structural,  // only reject malformed declarations
};

/// Builds the quiver. Unknown or duplicate vertices, arrow and tau
/// redefinitions and tau on a projective vertex are FormatErrors.
TranslationQuiver lower(const QuiverDocument& doc, LowerMode mode = LowerMode::validated);

TranslationQuiver load_quiver(std::string_view text, LowerMode mode = LowerMode::validated);

/// Renders a quiver back into the file format; lower(parse_quiver(.)) of
/// the output reproduces the quiver.
std::string format_quiver(const TranslationQuiver& q);

}  // namespace tauq

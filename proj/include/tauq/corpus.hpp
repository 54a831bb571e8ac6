#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tauq/translation_quiver.hpp"

namespace tauq {

struct CorpusEntry {
  std::string_view name;
  std::string_view text;
};

namespace detail {
const std::vector<CorpusEntry>& corpus_entries();
}

/// Names of the bundled fixtures, sorted.
std::vector<std::string> corpus_names();

/// Source text of a fixture. InputError for unknown names.
std::string_view corpus_text(std::string_view name);

/// The fixture as a validated quiver, parsed once and cached.
const TranslationQuiver& corpus(std::string_view name);

}  // namespace tauq

#include "tauq/corpus.hpp"

#include <map>

#include "tauq/errors.hpp"
#include "tauq/quiver_format.hpp"

namespace tauq {

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& e : detail::corpus_entries()) names.emplace_back(e.name);
  return names;
}

std::string_view corpus_text(std::string_view name) {
  for (const auto& e : detail::corpus_entries())
    if (e.name == name) return e.text;
  std::string known;
  for (const auto& n : corpus_names()) known += (known.empty() ? "" : ", ") + n;
  throw InputError("unknown corpus quiver '" + std::string(name) + "' (known: " + known + ")");
}

const TranslationQuiver& corpus(std::string_view name) {
  static const std::map<std::string, TranslationQuiver, std::less<>> cache = [] {
    std::map<std::string, TranslationQuiver, std::less<>> m;
    for (const auto& e : detail::corpus_entries()) m.emplace(std::string(e.name), load_quiver(e.text));
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) {
    corpus_text(name);  // throws with the list of known names
    throw InputError("unknown corpus quiver '" + std::string(name) + "'");
  }
  return it->second;
}

}  // namespace tauq

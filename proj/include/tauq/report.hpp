#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tauq/additive.hpp"
#include "tauq/chains.hpp"
#include "tauq/classify.hpp"
#include "tauq/operators.hpp"
#include "tauq/rejection.hpp"
#include "tauq/translation_quiver.hpp"

namespace tauq {

enum class Format { text, json };

/// A command result. The payload is the single source of truth; both
/// renderings are derived from it.
struct Report {
  std::string command;
  std::string quiver;
  nlohmann::json payload;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string render(const Report& r, Format format);
std::string render_json(const Report& r);
std::string render_text(const Report& r);
/// Inverse of render_json. InputError on malformed input.
Report parse_report(std::string_view json_text);

/// "18^2,19"; "0" for the zero combination.
std::string format_combination(const TranslationQuiver& q, const VertexCombination& v);
/// The two ladder rows, right to left as drawn by hand: index 0 is the
/// rightmost column. Columns are padded to a common width.
std::vector<std::string> format_ladder(const TranslationQuiver& q, const ChainTable& t);
/// The cells behind format_ladder, left to right; zero cells are empty.
std::pair<std::vector<std::string>, std::vector<std::string>> ladder_cells(const TranslationQuiver& q,
                                                                           const ChainTable& t);

nlohmann::json combination_json(const TranslationQuiver& q, const VertexCombination& v);
nlohmann::json chain_json(const TranslationQuiver& q, const ChainTable& t);

nlohmann::json validate_payload(const TranslationQuiver& q, const ValidationReport& v, const AdmissibilityResult& a);
nlohmann::json theta_payload(const TranslationQuiver& q, const ChainTable& t);
nlohmann::json eta_payload(const TranslationQuiver& q, const ChainTable& t);
nlohmann::json nakayama_payload(const TranslationQuiver& q, const std::vector<NakayamaResult>& results);
nlohmann::json classify_payload(const TranslationQuiver& q, const ClassificationReport& r);
nlohmann::json additive_payload(const TranslationQuiver& q, Flavor flavor, LMinusConstraint constraint,
                                const FeasibilityOutcome& outcome);
nlohmann::json reject_payload(const TranslationQuiver& q, const RejectionVerdict& trivial,
                              const std::optional<RejectionVerdict>& rejective, const std::string& note);
nlohmann::json basis_payload(const TranslationQuiver& q, const HomLengthMatrix& h,
                             const std::optional<std::vector<Vertex>>& s_plus);

}  // namespace tauq

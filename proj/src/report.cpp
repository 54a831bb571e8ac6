#include "tauq/report.hpp"

#include <algorithm>
#include <sstream>

#include "tauq/errors.hpp"

namespace tauq {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string integer_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

json names_json(const TranslationQuiver& q, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(q.name_of(v));
  return out;
}

json weights_json(const TranslationQuiver& q, const std::vector<Integer>& values) {
  json out = json::array();
  for (auto v : q.vertices()) out.push_back({q.name_of(v), integer_json(values[v.index])});
  return out;
}

json optional_size(const std::optional<std::size_t>& n) { return n ? json(*n) : json(nullptr); }

// --- text helpers over payload json -------------------------------------------------

std::string combination_text(const json& pairs, bool blank_zero = false) {
  if (pairs.empty()) return blank_zero ? "" : "0";
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ',';
    const std::string name = p[0].get<std::string>();
    const std::string coeff = integer_text(p[1]);
    if (coeff == "1")
      out += name;
    else if (coeff == "-1")
      out += "-" + name;
    else if (coeff.front() == '-')
      out += "-" + name + "^" + coeff.substr(1);
    else
      out += name + "^" + coeff;
  }
  return out;
}

std::vector<std::string> ladder_rows(const std::vector<std::string>& top, const std::vector<std::string>& bottom) {
  std::string upper, lower;
  for (std::size_t k = top.size(); k-- > 0;) {
    const std::size_t width = std::max(top[k].size(), bottom[k].size());
    auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
    const bool last = k == 0;
    upper += pad(top[k]) + (last ? "" : "  ->  ");
    lower += pad(bottom[k]) + (last ? "" : "  ->  ");
  }
  auto trim = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  return {trim(upper), trim(lower)};
}

// Index order (0 first). The printed ladders show the closing zero column
// for theta but not for eta.
std::pair<std::vector<std::string>, std::vector<std::string>> cells_from_json(const json& chain) {
  std::size_t columns = chain["top"].size();
  if (chain["kind"] == "eta" && chain["termination"] == "reached-zero" && columns > 0) --columns;
  std::vector<std::string> top, bottom;
  for (std::size_t k = 0; k < columns; ++k) {
    top.push_back(combination_text(chain["top"][k], true));
    bottom.push_back(combination_text(chain["bottom"][k], true));
  }
  return {top, bottom};
}

std::vector<std::string> ladder_from_json(const json& chain) {
  auto [top, bottom] = cells_from_json(chain);
  return ladder_rows(top, bottom);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string yes(const json& b) { return b.is_null() ? "undecided" : yes(b.get<bool>()); }

std::string join(const json& names, const std::string& sep = " ") {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : sep) + n.get<std::string>();
  return out.empty() ? "(none)" : out;
}

std::string weights_text(const json& pairs) {
  std::string out;
  for (const auto& p : pairs) out += (out.empty() ? "" : " ") + p[0].get<std::string>() + ":" + integer_text(p[1]);
  return out;
}

void chain_text(std::ostringstream& out, const json& chain, const std::string& indent) {
  for (const auto& row : ladder_from_json(chain)) out << indent << row << '\n';
}

void text_validate(std::ostringstream& out, const json& p) {
  out << p["vertices"] << " vertices, " << p["arrows"] << " arrows\n";
  out << "projective: " << join(p["projectives"]) << '\n';
  out << "injective:  " << join(p["injectives"]) << '\n';
  out << "valid: " << yes(p["valid"].get<bool>()) << '\n';
  for (const auto& v : p["violations"])
    out << "  [" << v["rule"].get<std::string>() << "] " << v["detail"].get<std::string>() << '\n';
  out << "admissible: " << yes(p["admissible"].get<bool>());
  if (!p["c"].is_null()) out << " (c = " << weights_text(p["c"]) << ")";
  if (!p["conflict"].is_null()) out << " - " << p["conflict"].get<std::string>();
  out << '\n';
}

void text_ladder(std::ostringstream& out, const json& p, const std::string& title) {
  const auto& c = p["chain"];
  out << title << ' ' << c["start"].get<std::string>() << " (" << c["termination"].get<std::string>();
  if (!c["cycle_from"].is_null()) out << " from n = " << c["cycle_from"];
  out << ")\n";
  chain_text(out, c, "  ");
  if (p.contains("zero_index") && !p["zero_index"].is_null())
    out << "theta+_n " << c["start"].get<std::string>() << " = 0 from n = " << p["zero_index"] << '\n';
  if (!c["truncations"].empty()) {
    out << "positive part truncated at n =";
    for (const auto& n : c["truncations"]) out << ' ' << n;
    out << '\n';
  }
}

void text_partner(std::ostringstream& out, const json& pair) {
  out << "n-(" << pair["source"].get<std::string>() << ") = ";
  if (pair["defined"].get<bool>())
    out << pair["target"].get<std::string>() << "  (length " << pair["length"] << ")\n";
  else
    out << "undefined (" << pair["failure"].get<std::string>() << ")\n";
}

void text_nakayama(std::ostringstream& out, const json& p) {
  if (p["pairs"].empty()) out << "no vertex to examine\n";
  for (const auto& pair : p["pairs"]) {
    text_partner(out, pair);
    chain_text(out, pair["chain"], "  ");
  }
}

void text_classify(std::ostringstream& out, const json& p) {
  const auto& a = p["artinian"];
  out << "artinian: " << a["status"].get<std::string>();
  if (!a["index"].is_null()) out << " (theta+_n = 0 from n = " << a["index"] << ")";
  if (a["status"] != "artinian" && !a["reason"].get<std::string>().empty()) out << " - " << a["reason"].get<std::string>();
  out << '\n';
  if (!p["evaluated"].get<bool>()) return;

  const auto& s = p["strict"];
  out << "strict: " << yes(s["strict"].get<bool>()) << '\n';
  const auto& c = p["conditions"];
  const auto& sol = p["solver"];
  auto row = [&](const char* key, const char* what, const char* skey, const char* swhat) {
    std::string left = std::string(key) + " " + what;
    std::string right = std::string(skey) + " " + swhat;
    out << "  " << left << std::string(left.size() < 40 ? 40 - left.size() : 1, ' ') << yes(c[key]["holds"].get<bool>())
        << (c[key]["holds"].get<bool>() ? "   " : "    ") << right << std::string(right.size() < 40 ? 40 - right.size() : 1, ' ')
        << yes(sol[skey]["feasible"].get<bool>()) << '\n';
  };
  row("c31", "injectives cover Q", "a41", "right additive function");
  row("c32", "Nakayama partners defined", "a42", "additive function");
  row("c33", "partners outside Q^p", "a43", "additive with l- = Q^i");
  row("c34", "partners in Q^p", "a44", "additive with l- = sinks");
  if (!c["c31"]["uncovered"].empty()) out << "uncovered: " << join(c["c31"]["uncovered"]) << '\n';
  if (c["c33"]["vacuous"].get<bool>()) out << "(no injective has a successor: the partner conditions hold vacuously)\n";
  for (const auto& pair : c["c32"]["partners"]) text_partner(out, pair);
  for (const auto& v : c["c32"]["anomalies"])
    out << "warning: the terminal eta term of " << v.get<std::string>() << " is not a single vertex\n";
  for (const auto& d : p["descriptions"]) out << "* " << d.get<std::string>() << '\n';
  if (p["labels"].empty()) out << "no class label applies\n";
  out << "consistent: " << yes(p["consistent"].get<bool>()) << '\n';
  if (!p["consistent"].get<bool>()) {
    out << "INCONSISTENT: chain and solver verdicts disagree on condition(s)";
    for (const auto& i : p["disagreements"]) out << ' ' << i;
    out << "; the fixture transcription or the implementation is wrong\n";
  }
}

void text_additive(std::ostringstream& out, const json& p) {
  out << "flavor: " << p["flavor"].get<std::string>() << ", l-: " << p["lminus"].get<std::string>() << '\n';
  out << "feasible: " << yes(p["feasible"].get<bool>()) << '\n';
  if (!p["values"].is_null()) {
    out << "l = " << weights_text(p["values"]) << '\n';
    if (p.contains("l_plus")) out << "l+ = " << join(p["l_plus"]) << '\n';
    if (p.contains("l_minus")) out << "l- = " << join(p["l_minus"]) << '\n';
  }
  if (!p["certificate"].is_null()) out << "certificate: " << p["certificate"].get<std::string>() << '\n';
}

void text_reject(std::ostringstream& out, const json& p) {
  out << "deleted: " << join(p["deleted"]) << '\n';
  out << "trivial: " << yes(p["trivial"]) << '\n';
  out << "rejective: " << yes(p["rejective"]) << '\n';
  if (p.contains("rejectable_singletons"))
    out << "rejectable singletons: " << join(p["rejectable_singletons"]) << '\n';
  if (!p["note"].get<std::string>().empty()) out << "note: " << p["note"].get<std::string>() << '\n';
  for (const auto& f : p["failures"])
    out << "  " << f["criterion"].get<std::string>() << " from " << f["start"].get<std::string>() << ", step "
        << f["step"] << ": " << f["reason"].get<std::string>() << '\n';
  for (const auto& s : p["sequences"]) {
    out << "  " << s["criterion"].get<std::string>() << " from " << s["start"].get<std::string>() << " ("
        << s["outcome"].get<std::string>() << "):";
    for (const auto& t : s["terms"]) out << "  " << combination_text(t);
    out << '\n';
  }
}

void text_basis(std::ostringstream& out, const json& p) {
  out << "hom-length functions l_X for projective X:\n";
  for (const auto& r : p["rows"]) {
    out << "  l_" << r["projective"].get<std::string>() << " =";
    for (std::size_t k = 0; k < p["vertices"].size(); ++k)
      if (integer_text(r["values"][k]) != "0")
        out << ' ' << p["vertices"][k].get<std::string>() << ':' << integer_text(r["values"][k]);
    out << '\n';
  }
  if (!p["s_plus"].is_null()) out << "S+ = " << join(p["s_plus"]) << '\n';
}

}  // namespace

std::string format_combination(const TranslationQuiver& q, const VertexCombination& v) {
  return combination_text(combination_json(q, v));
}

std::vector<std::string> format_ladder(const TranslationQuiver& q, const ChainTable& t) {
  return ladder_from_json(chain_json(q, t));
}

std::pair<std::vector<std::string>, std::vector<std::string>> ladder_cells(const TranslationQuiver& q,
                                                                           const ChainTable& t) {
  auto [top, bottom] = cells_from_json(chain_json(q, t));
  std::reverse(top.begin(), top.end());
  std::reverse(bottom.begin(), bottom.end());
  return {top, bottom};
}

json combination_json(const TranslationQuiver& q, const VertexCombination& v) {
  json out = json::array();
  for (const auto& [x, c] : v) out.push_back({q.name_of(x), integer_json(c)});
  return out;
}

json chain_json(const TranslationQuiver& q, const ChainTable& t) {
  json top = json::array(), bottom = json::array();
  for (const auto& v : t.top) top.push_back(combination_json(q, v));
  for (const auto& v : t.bottom) bottom.push_back(combination_json(q, v));
  return {{"kind", to_string(t.kind)},
          {"start", q.name_of(t.start)},
          {"termination", to_string(t.termination)},
          {"cycle_from", optional_size(t.cycle_from)},
          {"top", top},
          {"bottom", bottom},
          {"truncations", t.truncations}};
}

json validate_payload(const TranslationQuiver& q, const ValidationReport& v, const AdmissibilityResult& a) {
  json violations = json::array();
  for (const auto& x : v.violations) violations.push_back({{"rule", x.rule}, {"detail", x.detail}});
  return {{"vertices", q.size()},
          {"arrows", q.arrows().size()},
          {"projectives", names_json(q, q.projectives())},
          {"injectives", names_json(q, q.injectives())},
          {"valid", v.ok()},
          {"violations", violations},
          {"admissible", a.admissible},
          {"c", a.c ? weights_json(q, *a.c) : json(nullptr)},
          {"conflict", a.conflict ? json(*a.conflict) : json(nullptr)}};
}

json theta_payload(const TranslationQuiver& q, const ChainTable& t) {
  std::optional<std::size_t> zero;
  if (t.termination == Termination::reached_zero) zero = t.bottom.size() - 1;
  return {{"chain", chain_json(q, t)}, {"zero_index", optional_size(zero)}};
}

json eta_payload(const TranslationQuiver& q, const ChainTable& t) { return {{"chain", chain_json(q, t)}}; }

namespace {

json partner_json(const TranslationQuiver& q, const NakayamaResult& r, bool with_chain) {
  json out = {{"source", q.name_of(r.source)},
              {"defined", r.defined},
              {"target", r.target ? json(q.name_of(*r.target)) : json(nullptr)},
              {"length", optional_size(r.length)},
              {"failure", r.failure ? json(to_string(*r.failure)) : json(nullptr)}};
  if (with_chain) out["chain"] = chain_json(q, r.chain);
  return out;
}

json outcome_json(const TranslationQuiver& q, const FeasibilityOutcome& o) {
  return {{"feasible", o.feasible},
          {"values", o.result ? weights_json(q, o.result->values) : json(nullptr)},
          {"certificate", o.certificate ? json(*o.certificate) : json(nullptr)}};
}

json target_json(const TranslationQuiver& q, const TargetCheck& t) {
  return {{"holds", t.holds}, {"vacuous", t.vacuous}, {"offending", names_json(q, t.offending)}};
}

void append_sequences(const TranslationQuiver& q, const RejectionVerdict& v, json& sequences, json& failures) {
  for (const auto& s : v.witnesses) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(combination_json(q, t));
    sequences.push_back({{"start", q.name_of(s.start)},
                         {"criterion", to_string(s.criterion)},
                         {"outcome", to_string(s.outcome)},
                         {"terms", terms}});
  }
  for (const auto& f : v.failures)
    failures.push_back({{"start", q.name_of(f.start)},
                        {"criterion", to_string(f.criterion)},
                        {"step", f.step},
                        {"reason", f.reason}});
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json nakayama_payload(const TranslationQuiver& q, const std::vector<NakayamaResult>& results) {
  json pairs = json::array();
  for (const auto& r : results) pairs.push_back(partner_json(q, r, true));
  return {{"pairs", pairs}};
}

json classify_payload(const TranslationQuiver& q, const ClassificationReport& r) {
  const auto& a = r.artinian;
  static constexpr const char* status_names[] = {"artinian", "not-artinian", "undecided"};
  json out = {{"artinian",
               {{"status", status_names[static_cast<int>(a.status)]},
                {"index", optional_size(a.index)},
                {"witness", a.witness ? json(q.name_of(*a.witness)) : json(nullptr)},
                {"reason", a.reason}}},
              {"evaluated", r.evaluated}};
  if (!r.evaluated) return out;

  json truncations = json::array();
  for (const auto& [v, n] : r.strict->truncations) truncations.push_back({q.name_of(v), n});
  out["strict"] = {{"strict", r.strict->strict},
                   {"support_criterion", r.strict->support_criterion},
                   {"exactness_criterion", r.strict->exactness_criterion},
                   {"uncovered", names_json(q, r.strict->uncovered)},
                   {"truncations", truncations}};

  json partners = json::array(), map = json::array();
  for (const auto& p : r.c32.partners) {
    partners.push_back(partner_json(q, p, false));
    if (p.defined) map.push_back({q.name_of(p.source), q.name_of(*p.target)});
  }
  out["conditions"] = {
      {"c31", {{"holds", r.c31.holds}, {"uncovered", names_json(q, r.c31.uncovered)}}},
      {"c32", {{"holds", r.c32.holds}, {"partners", partners}, {"anomalies", names_json(q, r.c32.anomalies)}}},
      {"c33", target_json(q, r.c33)},
      {"c34", target_json(q, r.c34)}};
  out["nakayama_map"] = map;
  out["solver"] = {{"a41", outcome_json(q, r.solver[0])},
                   {"a42", outcome_json(q, r.solver[1])},
                   {"a43", outcome_json(q, r.solver[2])},
                   {"a44", outcome_json(q, r.solver[3])}};
  json labels = json::array(), descriptions = json::array();
  for (auto l : r.labels) {
    labels.push_back(to_string(l));
    descriptions.push_back(describe(l));
  }
  out["labels"] = labels;
  out["descriptions"] = descriptions;
  out["consistent"] = r.consistent;
  out["disagreements"] = r.disagreements;
  return out;
}

json additive_payload(const TranslationQuiver& q, Flavor flavor, LMinusConstraint constraint,
                      const FeasibilityOutcome& outcome) {
  json out = outcome_json(q, outcome);
  out["flavor"] = to_string(flavor);
  out["lminus"] = to_string(constraint);
  if (outcome.result) {
    if (flavor != Flavor::left) out["l_plus"] = names_json(q, outcome.result->l_plus);
    if (flavor != Flavor::right) out["l_minus"] = names_json(q, outcome.result->l_minus);
  }
  return out;
}

json reject_payload(const TranslationQuiver& q, const RejectionVerdict& trivial,
                    const std::optional<RejectionVerdict>& rejective, const std::string& note) {
  json sequences = json::array(), failures = json::array();
  append_sequences(q, trivial, sequences, failures);
  if (rejective) append_sequences(q, *rejective, sequences, failures);
  return {{"deleted", names_json(q, trivial.deleted)},
          {"trivial", optional_bool(trivial.trivial)},
          {"rejective", rejective ? optional_bool(rejective->rejective) : json(nullptr)},
          {"note", note},
          {"sequences", sequences},
          {"failures", failures}};
}

json basis_payload(const TranslationQuiver& q, const HomLengthMatrix& h,
                   const std::optional<std::vector<Vertex>>& s_plus) {
  json rows = json::array();
  for (auto x : q.projectives()) {
    json values = json::array();
    for (const auto& v : h[x.index]) values.push_back(integer_json(v));
    rows.push_back({{"projective", q.name_of(x)}, {"values", values}});
  }
  return {{"vertices", names_json(q, q.vertices())},
          {"rows", rows},
          {"s_plus", s_plus ? names_json(q, *s_plus) : json(nullptr)}};
}

std::string render_json(const Report& r) {
  json doc = {{"command", r.command}, {"quiver", r.quiver}, {"result", r.payload}};
  return doc.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("command") || !doc.contains("quiver") || !doc.contains("result"))
    throw InputError("malformed report: expected command, quiver and result");
  return {doc["command"].get<std::string>(), doc["quiver"].get<std::string>(), doc["result"]};
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  const auto& p = r.payload;
  if (!r.quiver.empty()) out << "quiver " << r.quiver << '\n';
  if (r.command == "validate")
    text_validate(out, p);
  else if (r.command == "theta")
    text_ladder(out, p, "theta ladder of");
  else if (r.command == "eta")
    text_ladder(out, p, "eta ladder of");
  else if (r.command == "nakayama")
    text_nakayama(out, p);
  else if (r.command == "classify")
    text_classify(out, p);
  else if (r.command == "additive")
    text_additive(out, p);
  else if (r.command == "reject")
    text_reject(out, p);
  else if (r.command == "basis")
    text_basis(out, p);
  else if (r.command == "corpus-list")
    for (const auto& n : p["names"]) out << n.get<std::string>() << '\n';
  else if (r.command == "corpus-show")
    out << p["text"].get<std::string>();
  else
    out << p.dump(2) << '\n';
  return out.str();
}

std::string render(const Report& r, Format format) {
  return format == Format::json ? render_json(r) : render_text(r);
}

}  // namespace tauq

#include "tauq/quiver_format.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "tauq/operators.hpp"

namespace tauq {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::uint32_t parse_valuation(const std::string& tok, std::size_t line) {
  std::uint32_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw FormatError(line, "expected a non-negative integer valuation, got '" + tok + "'");
  return value;
}

}  // namespace

QuiverDocument parse_quiver(std::string_view text) {
  static const std::map<std::string, DeclarationKind, std::less<>> keywords = {
      {"vertex", DeclarationKind::vertex}, {"proj", DeclarationKind::proj}, {"inj", DeclarationKind::inj},
      {"arrow", DeclarationKind::arrow},   {"tau", DeclarationKind::tau},
  };

  QuiverDocument doc;
  bool named = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string keyword = tokens.front();
    tokens.erase(tokens.begin());
    if (keyword == "quiver") {
      if (tokens.size() != 1) throw FormatError(line_no, "expected 'quiver NAME'");
      if (named) throw FormatError(line_no, "quiver name given twice");
      doc.name = tokens.front();
      named = true;
      continue;
    }
    auto it = keywords.find(keyword);
    if (it == keywords.end())
      throw FormatError(line_no, "unknown keyword '" + keyword + "'; expected quiver, vertex, proj, inj, arrow or tau");
    const auto kind = it->second;
    switch (kind) {
      case DeclarationKind::vertex:
      case DeclarationKind::proj:
      case DeclarationKind::inj:
        if (tokens.empty()) throw FormatError(line_no, "expected at least one vertex after '" + keyword + "'");
        break;
      case DeclarationKind::arrow:
        if (tokens.size() != 2 && tokens.size() != 4)
          throw FormatError(line_no, "expected 'arrow SRC DST [D DPRIME]', got " + std::to_string(tokens.size()) +
                                         " operands");
        for (std::size_t i = 2; i < tokens.size(); ++i) parse_valuation(tokens[i], line_no);
        break;
      case DeclarationKind::tau:
        if (tokens.size() != 2) throw FormatError(line_no, "expected 'tau X Y'");
        break;
    }
    doc.declarations.push_back({kind, std::move(tokens), line_no});
  }
  return doc;
}

TranslationQuiver lower(const QuiverDocument& doc, LowerMode mode) {
  TranslationQuiver::Builder builder(doc.name);
  auto at = [](const Declaration& d, auto&& action) {
    try {
      action();
    } catch (const FormatError&) {
      throw;
    } catch (const InputError& e) {
      throw FormatError(d.line, e.what());
    }
  };

  // Vertices first so that declarations may come in any order.
  for (const auto& d : doc.declarations)
    if (d.kind == DeclarationKind::vertex)
      at(d, [&] {
        for (const auto& v : d.tokens) builder.add_vertex(v);
      });

  std::map<std::string, std::size_t, std::less<>> tau_lines;
  std::map<std::string, bool, std::less<>> projective;
  for (const auto& d : doc.declarations) {
    switch (d.kind) {
      case DeclarationKind::vertex: break;
      case DeclarationKind::proj:
        at(d, [&] {
          for (const auto& v : d.tokens) {
            builder.mark_projective(v);
            projective[v] = true;
          }
        });
        break;
      case DeclarationKind::inj:
        at(d, [&] {
          for (const auto& v : d.tokens) builder.mark_injective(v);
        });
        break;
      case DeclarationKind::arrow:
        at(d, [&] {
          Valuation val{1, 1};
          if (d.tokens.size() == 4) val = {parse_valuation(d.tokens[2], d.line), parse_valuation(d.tokens[3], d.line)};
          builder.add_arrow(d.tokens[0], d.tokens[1], val);
        });
        break;
      case DeclarationKind::tau:
        at(d, [&] { builder.set_tau(d.tokens[0], d.tokens[1]); });
        tau_lines[d.tokens[0]] = d.line;
        break;
    }
  }
  for (const auto& [source, line] : tau_lines)
    if (projective.count(source))
      throw FormatError(line, "tau defined on vertex " + source + ", but the source of tau must be non-projective");

  auto q = builder.build();
  if (mode == LowerMode::validated) {
    auto report = validate(q);
    if (!report.ok()) {
      std::string msg = "quiver '" + q.name() + "' is not a valid translation quiver:";
      for (const auto& v : report.violations) msg += "\n  [" + v.rule + "] " + v.detail;
      throw FormatError(0, msg);
    }
  }
  return q;
}

TranslationQuiver load_quiver(std::string_view text, LowerMode mode) { return lower(parse_quiver(text), mode); }

std::string format_quiver(const TranslationQuiver& q) {
  std::ostringstream out;
  if (!q.name().empty()) out << "quiver " << q.name() << "\n\n";
  auto list = [&](const char* keyword, const std::vector<Vertex>& vs) {
    if (vs.empty()) return;
    out << keyword;
    for (auto v : vs) out << ' ' << q.name_of(v);
    out << '\n';
  };
  list("vertex", q.vertices());
  list("proj", q.projectives());
  list("inj", q.injectives());
  if (!q.arrows().empty()) out << '\n';
  for (const auto& a : q.arrows()) {
    out << "arrow " << q.name_of(a.source) << ' ' << q.name_of(a.target);
    if (a.valuation != Valuation{1, 1}) out << ' ' << a.valuation.d << ' ' << a.valuation.dprime;
    out << '\n';
  }
  bool gap = false;
  for (auto v : q.vertices())
    if (auto t = q.tau_plus(v)) {
      if (!gap) out << '\n';
      gap = true;
      out << "tau " << q.name_of(v) << ' ' << q.name_of(*t) << '\n';
    }
  return out.str();
}

}  // namespace tauq

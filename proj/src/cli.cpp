#include "tauq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tauq/corpus.hpp"
#include "tauq/errors.hpp"
#include "tauq/quiver_format.hpp"
#include "tauq/report.hpp"

namespace tauq::cli {

namespace {

struct Options {
  std::string format = "text";
  std::optional<std::size_t> bound;
  std::string quiver;
  std::string vertex;
  std::string flavor = "both";
  std::string lminus = "free";
  std::vector<std::string> deleted;
  std::string corpus_action;
  std::string corpus_name;
};

TranslationQuiver load(const std::string& source, LowerMode mode) {
  constexpr std::string_view prefix = "corpus:";
  if (source.rfind(prefix, 0) == 0) {
    auto name = source.substr(prefix.size());
    return load_quiver(corpus_text(name), mode);
  }
  std::ifstream in(source);
  if (!in) throw InputError("cannot open quiver file '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    auto q = load_quiver(text.str(), mode);
    return q;
  } catch (const FormatError& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::size_t resolve_bound(const Options& o, const TranslationQuiver& q) {
  if (o.bound) return *o.bound;
  if (const char* env = std::getenv("TAUQ_BOUND"); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) throw InputError("TAUQ_BOUND must be a positive integer, got '" + std::string(env) + "'");
    return static_cast<std::size_t>(value);
  }
  return default_bound(q);
}

std::string display_name(const TranslationQuiver& q, const std::string& source) {
  return q.name().empty() ? source : q.name();
}

Report run_validate(const Options& o) {
  auto q = load(o.quiver, LowerMode::structural);
  return {"validate", display_name(q, o.quiver), validate_payload(q, validate(q), admissibility(q))};
}

Report run_theta(const Options& o) {
  auto q = load(o.quiver, LowerMode::validated);
  return {"theta", display_name(q, o.quiver), theta_payload(q, theta_chain(q, q.vertex(o.vertex), resolve_bound(o, q)))};
}

Report run_eta(const Options& o) {
  auto q = load(o.quiver, LowerMode::validated);
  return {"eta", display_name(q, o.quiver), eta_payload(q, eta_chain(q, q.vertex(o.vertex), resolve_bound(o, q)))};
}

Report run_nakayama(const Options& o) {
  auto q = load(o.quiver, LowerMode::validated);
  const auto bound = resolve_bound(o, q);
  std::vector<NakayamaResult> results;
  if (!o.vertex.empty()) {
    results.push_back(nakayama_minus(q, q.vertex(o.vertex), bound));
  } else {
    for (auto x : q.injectives())
      if (!theta_minus(q, VertexCombination(x)).is_zero()) results.push_back(nakayama_minus(q, x, bound));
  }
  return {"nakayama", display_name(q, o.quiver), nakayama_payload(q, results)};
}

Report run_classify(const Options& o) {
  auto q = load(o.quiver, LowerMode::validated);
  return {"classify", display_name(q, o.quiver), classify_payload(q, classify(q, resolve_bound(o, q)))};
}

Report run_additive(const Options& o) {
  auto q = load(o.quiver, LowerMode::validated);
  const Flavor flavor = o.flavor == "right" ? Flavor::right : o.flavor == "left" ? Flavor::left : Flavor::both;
  const LMinusConstraint c = o.lminus == "inj"     ? LMinusConstraint::equal_to_injectives
                             : o.lminus == "sinks" ? LMinusConstraint::equal_to_sinks
                                                   : LMinusConstraint::free;
  if (c != LMinusConstraint::free && flavor != Flavor::both)
    throw InputError("--lminus only applies to --flavor both");
  FeasibilityOutcome outcome = flavor == Flavor::right  ? find_right_additive(q)
                               : flavor == Flavor::left ? find_left_additive(q)
                                                        : find_additive(q, c);
  return {"additive", display_name(q, o.quiver), additive_payload(q, flavor, c, outcome)};
}

Report run_reject(const Options& o) {
  auto q = load(o.quiver, LowerMode::validated);
  const auto bound = resolve_bound(o, q);
  std::vector<Vertex> deleted;
  for (const auto& name : o.deleted)
    if (!name.empty()) deleted.push_back(q.vertex(name));

  auto trivial = check_trivial(q, deleted, bound);
  std::optional<RejectionVerdict> rejective;
  std::string note;
  auto a = artinian(q, bound);
  if (a.artinian() && strict(q, bound).strict)
    rejective = check_rejective(q, deleted, bound);
  else
    note = "rejectivity is only decided on strict artinian quivers";
  auto payload = reject_payload(q, trivial, rejective, note);
  nlohmann::json singles = nlohmann::json::array();
  for (auto v : rejectable_singletons(q)) singles.push_back(q.name_of(v));
  payload["rejectable_singletons"] = singles;
  return {"reject", display_name(q, o.quiver), payload};
}

Report run_basis(const Options& o) {
  auto q = load(o.quiver, LowerMode::validated);
  const auto bound = resolve_bound(o, q);
  auto h = hom_length_matrix(q, bound);
  std::optional<std::vector<Vertex>> sp;
  if (check_c32(q, bound).holds) sp = s_plus(q, bound);
  return {"basis", display_name(q, o.quiver), basis_payload(q, h, sp)};
}

Report run_corpus(const Options& o) {
  if (o.corpus_action == "list") {
    if (!o.corpus_name.empty()) throw InputError("'corpus list' takes no name");
    return {"corpus-list", "", {{"names", corpus_names()}}};
  }
  if (o.corpus_name.empty()) throw InputError("'corpus show' needs a fixture name");
  return {"corpus-show", o.corpus_name, {{"name", o.corpus_name}, {"text", std::string(corpus_text(o.corpus_name))}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tauq - combinatorics of finite translation quivers", "tauq"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", o.bound, "Iteration bound for the ladders (default 16|Q|, or TAUQ_BOUND)")
      ->check(CLI::PositiveNumber);

  const std::string quiver_help = "Quiver file, or corpus:NAME";
  auto with_quiver = [&](CLI::App* sub) {
    sub->add_option("quiver", o.quiver, quiver_help)->required();
    return sub;
  };
  auto* validate_cmd = with_quiver(app.add_subcommand("validate", "Check the translation quiver axioms"));
  auto* classify_cmd = with_quiver(app.add_subcommand("classify", "Decide which category classes Q can realise"));
  auto* theta_cmd = with_quiver(app.add_subcommand("theta", "The theta+_n ladder of a vertex"));
  theta_cmd->add_option("vertex", o.vertex)->required();
  auto* eta_cmd = with_quiver(app.add_subcommand("eta", "The eta+_i ladder of a vertex"));
  eta_cmd->add_option("vertex", o.vertex)->required();
  auto* nakayama_cmd = with_quiver(app.add_subcommand("nakayama", "Nakayama partners n-(X)"));
  nakayama_cmd->add_option("vertex", o.vertex, "Default: every injective with a successor");
  auto* additive_cmd = with_quiver(app.add_subcommand("additive", "Find an additive function"));
  additive_cmd->add_option("--flavor", o.flavor)->check(CLI::IsMember({"right", "left", "both"}));
  additive_cmd->add_option("--lminus", o.lminus)->check(CLI::IsMember({"free", "inj", "sinks"}));
  auto* reject_cmd = with_quiver(app.add_subcommand("reject", "Triviality and rejectivity of a deleted vertex set"));
  reject_cmd->add_option("--delete", o.deleted, "Comma-separated vertices")->delimiter(',')->required();
  auto* basis_cmd = with_quiver(app.add_subcommand("basis", "Hom-length basis of right additive functions"));
  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled fixtures");
  corpus_cmd->add_option("action", o.corpus_action)->required()->check(CLI::IsMember({"list", "show"}));
  corpus_cmd->add_option("name", o.corpus_name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "tauq: " << e.what() << "\nRun 'tauq --help' for usage.\n";
    return input_error;
  }

  try {
    Report report;
    if (*validate_cmd) report = run_validate(o);
    else if (*classify_cmd) report = run_classify(o);
    else if (*theta_cmd) report = run_theta(o);
    else if (*eta_cmd) report = run_eta(o);
    else if (*nakayama_cmd) report = run_nakayama(o);
    else if (*additive_cmd) report = run_additive(o);
    else if (*reject_cmd) report = run_reject(o);
    else if (*basis_cmd) report = run_basis(o);
    else report = run_corpus(o);
    out << render(report, o.format == "json" ? Format::json : Format::text);
    return ok;
  } catch (const InputError& e) {
    err << "tauq: " << e.what() << '\n';
    return input_error;
  } catch (const PreconditionError& e) {
    err << "tauq: " << e.what() << '\n';
    return input_error;
  } catch (const InvariantError& e) {
    err << "tauq: internal inconsistency: " << e.what() << '\n';
    return internal_error;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace tauq::cli

#include "tauq/translation_quiver.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tauq/errors.hpp"

namespace tauq {

namespace {

bool is_decimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  const bool na = is_decimal(a), nb = is_decimal(b);
  if (na != nb) return na;
  if (na) {
    auto strip = [](std::string_view s) {
      auto pos = s.find_first_not_of('0');
      return pos == std::string_view::npos ? std::string_view("0") : s.substr(pos);
    };
    auto sa = strip(a), sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

std::vector<Vertex> TranslationQuiver::vertices() const {
  std::vector<Vertex> out(size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Vertex{i};
  return out;
}

const std::string& TranslationQuiver::name_of(Vertex v) const {
  if (!contains(v)) throw InputError("vertex index " + std::to_string(v.index) + " out of range");
  return names_[v.index];
}

std::optional<Vertex> TranslationQuiver::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex TranslationQuiver::vertex(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::vector<Vertex> TranslationQuiver::projectives() const {
  std::vector<Vertex> out;
  for (auto v : vertices())
    if (is_projective(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> TranslationQuiver::injectives() const {
  std::vector<Vertex> out;
  for (auto v : vertices())
    if (is_injective(v)) out.push_back(v);
  return out;
}

Valuation TranslationQuiver::valuation(Vertex from, Vertex to) const {
  for (const auto& a : arrows_out_of(from))
    if (a.target == to) return a.valuation;
  return {};
}

std::span<const Arrow> TranslationQuiver::arrows_into(Vertex v) const {
  if (!contains(v)) throw InputError("vertex index " + std::to_string(v.index) + " out of range");
  return std::span<const Arrow>(incoming_).subspan(in_offsets_[v.index],
                                                    in_offsets_[v.index + 1] - in_offsets_[v.index]);
}

std::span<const Arrow> TranslationQuiver::arrows_out_of(Vertex v) const {
  if (!contains(v)) throw InputError("vertex index " + std::to_string(v.index) + " out of range");
  return std::span<const Arrow>(arrows_).subspan(out_offsets_[v.index],
                                                  out_offsets_[v.index + 1] - out_offsets_[v.index]);
}

TranslationQuiver::Builder& TranslationQuiver::Builder::add_vertex(std::string name) {
  if (name.empty()) throw InputError("empty vertex name");
  if (has_vertex(name)) throw InputError("duplicate vertex '" + name + "'");
  vertices_.push_back(std::move(name));
  return *this;
}

bool TranslationQuiver::Builder::has_vertex(std::string_view name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

void TranslationQuiver::Builder::require_vertex(std::string_view name) const {
  if (!has_vertex(name)) throw InputError("unknown vertex '" + std::string(name) + "'");
}

TranslationQuiver::Builder& TranslationQuiver::Builder::add_arrow(std::string_view source, std::string_view target,
                                                                  Valuation valuation) {
  require_vertex(source);
  require_vertex(target);
  for (const auto& a : arrows_)
    if (a.source == source && a.target == target)
      throw InputError("arrow " + std::string(source) + " -> " + std::string(target) + " redefined");
  arrows_.push_back({std::string(source), std::string(target), valuation});
  return *this;
}

TranslationQuiver::Builder& TranslationQuiver::Builder::mark_projective(std::string_view name) {
  require_vertex(name);
  projective_.emplace_back(name);
  return *this;
}

TranslationQuiver::Builder& TranslationQuiver::Builder::mark_injective(std::string_view name) {
  require_vertex(name);
  injective_.emplace_back(name);
  return *this;
}

TranslationQuiver::Builder& TranslationQuiver::Builder::set_tau(std::string_view source, std::string_view target) {
  require_vertex(source);
  require_vertex(target);
  for (const auto& [s, t] : tau_)
    if (s == source) throw InputError("tau of " + std::string(source) + " redefined");
  tau_.emplace_back(source, target);
  return *this;
}

TranslationQuiver TranslationQuiver::Builder::build() const {
  TranslationQuiver q;
  q.name_ = name_;
  q.names_ = vertices_;
  std::sort(q.names_.begin(), q.names_.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  const auto n = q.names_.size();
  for (std::uint32_t i = 0; i < n; ++i) q.index_.emplace(q.names_[i], Vertex{i});

  q.projective_.assign(n, false);
  q.injective_.assign(n, false);
  for (const auto& p : projective_) q.projective_[q.index_.at(p).index] = true;
  for (const auto& i : injective_) q.injective_[q.index_.at(i).index] = true;

  q.tau_plus_.assign(n, std::nullopt);
  q.tau_minus_.assign(n, std::nullopt);
  for (const auto& [s, t] : tau_) {
    auto vs = q.index_.at(s), vt = q.index_.at(t);
    q.tau_plus_[vs.index] = vt;
    // Keep the first preimage only; a non-injective tau+ is a validation error.
    if (!q.tau_minus_[vt.index]) q.tau_minus_[vt.index] = vs;
  }

  for (const auto& a : arrows_) {
    if (a.valuation.d == 0 && a.valuation.dprime == 0) continue;
    q.arrows_.push_back({q.index_.at(a.source), q.index_.at(a.target), a.valuation});
  }
  std::sort(q.arrows_.begin(), q.arrows_.end(), [](const Arrow& x, const Arrow& y) {
    return std::tie(x.source, x.target) < std::tie(y.source, y.target);
  });
  q.incoming_ = q.arrows_;
  std::sort(q.incoming_.begin(), q.incoming_.end(), [](const Arrow& x, const Arrow& y) {
    return std::tie(x.target, x.source) < std::tie(y.target, y.source);
  });

  q.out_offsets_.assign(n + 1, 0);
  q.in_offsets_.assign(n + 1, 0);
  for (const auto& a : q.arrows_) {
    ++q.out_offsets_[a.source.index + 1];
    ++q.in_offsets_[a.target.index + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    q.out_offsets_[i + 1] += q.out_offsets_[i];
    q.in_offsets_[i + 1] += q.in_offsets_[i];
  }
  return q;
}

}  // namespace tauq

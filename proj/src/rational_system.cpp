#include "tauq/rational_system.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>

#include "tauq/errors.hpp"

namespace tauq {

namespace {

// An inequality  sum_j a_j x_j >= b  over the free variables.
struct Inequality {
  std::vector<Rational> a;
  Rational b;
  std::string label;
  // Indices of the original inequalities this row was combined from.
  std::vector<std::uint32_t> history;
};

std::vector<std::uint32_t> merge_history(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  std::vector<std::uint32_t> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// Scales an inequality so its coefficients are coprime integers; two
// inequalities with the same normalised left side differ only in bound.
void normalise(Inequality& in) {
  Integer lcm = 1, gcd = 0;
  for (const auto& c : in.a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : in.a) {
    c *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  in.b *= lcm;
  if (gcd == 0) return;
  for (auto& c : in.a) c /= gcd;
  in.b /= gcd;
}

bool all_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

std::string join_labels(const std::string& a, const std::string& b) {
  constexpr std::size_t limit = 160;
  std::string out = a + " + " + b;
  if (out.size() > limit) out = out.substr(0, limit) + "...";
  return out;
}

struct KeyLess {
  bool operator()(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Rational& p, const Rational& q) { return cmp(p, q) < 0; });
  }
};

// Drops duplicates, keeping the tightest bound per left side.
std::vector<Inequality> deduplicate(std::vector<Inequality> rows) {
  std::map<std::vector<Rational>, Inequality, KeyLess> best;
  for (auto& r : rows) {
    normalise(r);
    if (all_zero(r.a) && r.b <= 0) continue;
    auto it = best.find(r.a);
    if (it == best.end())
      best.emplace(r.a, std::move(r));
    else if (r.b > it->second.b)
      it->second = std::move(r);
  }
  std::vector<Inequality> out;
  out.reserve(best.size());
  for (auto& [k, v] : best) out.push_back(std::move(v));
  return out;
}

}  // namespace

void RationalSystem::add(std::vector<Rational> coefficients, Relation relation, Rational rhs, std::string label) {
  if (coefficients.size() != variables_)
    throw Error("constraint '" + label + "' has " + std::to_string(coefficients.size()) + " coefficients, expected " +
                std::to_string(variables_));
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs), std::move(label)});
}

void RationalSystem::add_equal(std::vector<Rational> coefficients, Rational rhs, std::string label) {
  add(std::move(coefficients), Relation::equal, std::move(rhs), std::move(label));
}

void RationalSystem::add_at_least(std::vector<Rational> coefficients, Rational rhs, std::string label) {
  add(std::move(coefficients), Relation::at_least, std::move(rhs), std::move(label));
}

bool RationalSystem::satisfied_by(const std::vector<Rational>& point) const {
  if (point.size() != variables_) return false;
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < variables_; ++j) lhs += c.coefficients[j] * point[j];
    if (c.relation == Relation::equal ? lhs != c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

RationalSystem::Solution RationalSystem::solve() const {
  const std::size_t n = variables_;
  Solution solution;

  // Reduced row echelon form of the equalities, augmented with the rhs.
  std::vector<std::vector<Rational>> rows;
  std::vector<std::string> row_labels;
  for (const auto& c : constraints_) {
    if (c.relation != Relation::equal) continue;
    auto row = c.coefficients;
    row.push_back(c.rhs);
    rows.push_back(std::move(row));
    row_labels.push_back(c.label);
  }
  std::vector<std::size_t> pivot_column;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(row_labels[rank], row_labels[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& entry : rows[rank]) entry /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t j = col; j <= n; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    pivot_column.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][n] != 0) {
      solution.certificate = "the equality constraints are inconsistent (a combination involving '" + row_labels[r] +
                             "' reduces to 0 = " + rows[r][n].get_str() + ")";
      return solution;
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_column) is_pivot[c] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_vars.push_back(j);
  const std::size_t m = free_vars.size();

  // x_pivot = rhs - sum over free variables of row entries; expressed as an
  // affine map from the free variables.
  auto substitute = [&](const std::vector<Rational>& coefficients, Inequality& out) {
    out.a.assign(m, 0);
    for (std::size_t k = 0; k < m; ++k) out.a[k] = coefficients[free_vars[k]];
    for (std::size_t r = 0; r < rank; ++r) {
      const Rational& c = coefficients[pivot_column[r]];
      if (c == 0) continue;
      out.b -= c * rows[r][n];
      for (std::size_t k = 0; k < m; ++k) out.a[k] -= c * rows[r][free_vars[k]];
    }
  };

  std::vector<Inequality> current;
  for (const auto& c : constraints_) {
    if (c.relation != Relation::at_least) continue;
    Inequality in{{}, c.rhs, c.label, {static_cast<std::uint32_t>(current.size())}};
    substitute(c.coefficients, in);
    current.push_back(std::move(in));
  }

  // Fourier-Motzkin: levels[k] holds the system in which the first k
  // chosen variables have been eliminated.
  std::vector<std::vector<Inequality>> levels;
  std::vector<std::size_t> order;
  std::vector<bool> eliminated(m, false);
  current = deduplicate(std::move(current));
  for (std::size_t step = 0; step < m; ++step) {
    // Eliminate the variable producing the fewest new rows.
    std::size_t pick = m, best_cost = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (eliminated[k]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& in : current) {
        if (in.a[k] > 0) ++pos;
        else if (in.a[k] < 0) ++neg;
      }
      const std::size_t cost = pos * neg;
      if (pick == m || cost < best_cost) {
        pick = k;
        best_cost = cost;
      }
    }
    levels.push_back(current);
    order.push_back(pick);
    eliminated[pick] = true;

    std::vector<Inequality> next, lower, upper;
    for (auto& in : current) {
      if (in.a[pick] > 0) lower.push_back(in);
      else if (in.a[pick] < 0) upper.push_back(in);
      else next.push_back(in);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo.a[pick] > 0 > up.a[pick]: combine to cancel the variable.
        const Rational wl = -up.a[pick], wu = lo.a[pick];
        // Chernikov: a row built from more than step + 2 originals is implied
        // by the others.
        auto history = merge_history(lo.history, up.history);
        if (history.size() > step + 2) continue;
        Inequality combined{std::vector<Rational>(m), wl * lo.b + wu * up.b, join_labels(lo.label, up.label),
                            std::move(history)};
        for (std::size_t k = 0; k < m; ++k) combined.a[k] = wl * lo.a[k] + wu * up.a[k];
        combined.a[pick] = 0;
        next.push_back(std::move(combined));
      }
    }
    current = deduplicate(std::move(next));
  }
  for (const auto& in : current) {
    if (all_zero(in.a) && in.b > 0) {
      solution.certificate = "eliminating all variables leaves 0 >= " + in.b.get_str() + " from: " + in.label;
      return solution;
    }
  }

  // Back substitution in reverse elimination order.
  std::vector<Rational> value(m, 0);
  std::vector<bool> assigned(m, false);
  for (std::size_t step = m; step-- > 0;) {
    const std::size_t k = order[step];
    std::optional<Rational> lo, hi;
    for (const auto& in : levels[step]) {
      if (in.a[k] == 0) continue;
      Rational rest = in.b;
      for (std::size_t j = 0; j < m; ++j)
        if (j != k && assigned[j]) rest -= in.a[j] * value[j];
      Rational bound = rest / in.a[k];
      if (in.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw InvariantError("Fourier-Motzkin back substitution found an empty interval");
    value[k] = lo ? *lo : (hi ? std::min(*hi, Rational(0)) : Rational(0));
    assigned[k] = true;
  }

  solution.point.assign(n, 0);
  for (std::size_t k = 0; k < m; ++k) solution.point[free_vars[k]] = value[k];
  for (std::size_t r = 0; r < rank; ++r) {
    Rational x = rows[r][n];
    for (std::size_t k = 0; k < m; ++k) x -= rows[r][free_vars[k]] * value[k];
    solution.point[pivot_column[r]] = x;
  }
  if (!satisfied_by(solution.point)) throw InvariantError("rational solver produced a point violating the system");
  solution.feasible = true;
  return solution;
}

std::vector<Integer> clear_denominators(const std::vector<Rational>& point) {
  Integer lcm = 1;
  for (const auto& x : point) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(point.size());
  for (const auto& x : point) out.push_back(Rational(x * lcm).get_num());
  return out;
}

}  // namespace tauq

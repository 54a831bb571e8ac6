#include "doctest.h"
#include "support.hpp"
#include "tauq/chains.hpp"
#include "tauq/errors.hpp"
#include "tauq/report.hpp"

using namespace tauq;
using test::combination;

namespace {

std::vector<VertexCombination> combos(const TranslationQuiver& q, const std::vector<std::string>& cells) {
  std::vector<VertexCombination> out;
  for (const auto& c : cells) out.push_back(combination(q, c));
  return out;
}

// Printed tables run right to left; compare cell by cell as combinations.
void check_against_golden(const test::GoldenLadder& g) {
  CAPTURE(g.quiver);
  CAPTURE(g.start);
  const auto& q = corpus(g.quiver);
  const auto start = q.vertex(g.start);
  auto table = g.kind == "theta" ? theta_chain(q, start, default_bound(q)) : eta_chain(q, start, default_bound(q));
  auto [top, bottom] = ladder_cells(q, table);
  REQUIRE(top.size() == g.top.size());
  REQUIRE(bottom.size() == g.bottom.size());
  CHECK(combos(q, top) == combos(q, g.top));
  CHECK(combos(q, bottom) == combos(q, g.bottom));
}

}  // namespace

TEST_CASE("printed ladder tables") {
  auto goldens = test::golden_ladders();
  REQUIRE(goldens.size() == 15);
  for (const auto& g : goldens) check_against_golden(g);
}

TEST_CASE("theta ladder of EX421 at 7") {
  const auto& q = corpus("EX421");
  auto t = theta_chain(q, q.vertex("7"), default_bound(q));
  CHECK(t.termination == Termination::reached_zero);
  CHECK(t.bottom == combos(q, {"7", "11", "13,15", "18,19", "2,3", "5", "9", ""}));
  CHECK(t.top.front().is_zero());
  CHECK(t.top.size() == t.bottom.size());
}

TEST_CASE("small theta ladders") {
  const auto& a2 = corpus("A2");
  auto t = theta_chain(a2, a2.vertex("c"), 10);
  CHECK(t.bottom == combos(a2, {"c", "b", ""}));
  const auto& pt = corpus("PT1");
  CHECK(theta_chain(pt, pt.vertex("X"), 10).bottom == combos(pt, {"X", ""}));
}

TEST_CASE("theta_n extends additively") {
  const auto& a2 = corpus("A2");
  CHECK(theta_n(a2, 1, combination(a2, "b,c")) == combination(a2, "a,b"));
  CHECK(theta_n(a2, 0, combination(a2, "b^2,c")) == combination(a2, "b^2,c"));
  const auto& ex421 = corpus("EX421");
  CHECK(theta_n(ex421, 2, combination(ex421, "7")) == combination(ex421, "13,15"));
}

TEST_CASE("artinian verdicts") {
  CHECK(artinian(corpus("EX421"), default_bound(corpus("EX421"))).artinian());
  auto a2 = artinian(corpus("A2"), 100);
  CHECK(a2.artinian());
  CHECK(a2.index == 2u);
  auto loop = artinian(corpus("LOOP2"), 100);
  CHECK(loop.status == ArtinianStatus::not_artinian);
  CHECK(loop.repeating_state);
  CHECK_FALSE(loop.index);
}

TEST_CASE("a tiny bound leaves artinian-ness undecided") {
  auto v = artinian(corpus("EX451"), 3);
  CHECK(v.status == ArtinianStatus::undecided);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("strictness") {
  const auto& ex421 = corpus("EX421");
  auto s = strict(ex421, default_bound(ex421));
  CHECK_FALSE(s.strict);
  CHECK(test::names(ex421, s.uncovered) == std::vector<std::string>{"6", "8", "10", "14", "16"});
  CHECK(strict(corpus("EX451"), 1000).strict);
  CHECK(strict(corpus("PT1"), 10).strict);
  CHECK_THROWS_AS(strict(corpus("LOOP2"), 100), PreconditionError);
}

TEST_CASE("eta ladders on A2") {
  const auto& q = corpus("A2");
  auto b = eta_chain(q, q.vertex("b"), 10);
  CHECK(b.bottom == combos(q, {"c", ""}));
  auto c = eta_chain(q, q.vertex("c"), 10);
  CHECK(c.termination == Termination::negative_coefficient);
  CHECK(c.bottom.size() == 2);
  CHECK(c.bottom[0].is_zero());
  CHECK(c.bottom[1] == -combination(q, "c"));
}

TEST_CASE("Nakayama partners") {
  const auto& ex451 = corpus("EX451");
  auto six = nakayama_minus(ex451, ex451.vertex("6"), 1000);
  REQUIRE(six.defined);
  CHECK(ex451.name_of(*six.target) == "24");
  const auto& ex453 = corpus("EX453");
  auto one = nakayama_minus(ex453, ex453.vertex("1"), 1000);
  REQUIRE(one.defined);
  CHECK(ex453.name_of(*one.target) == "5");
  const auto& ex454 = corpus("EX454");
  for (auto v : {"5", "6", "8", "9"}) {
    CAPTURE(v);
    auto r = nakayama_minus(ex454, ex454.vertex(v), 1000);
    CHECK_FALSE(r.defined);
    CHECK(r.failure);
  }
  auto sink = nakayama_minus(corpus("A2"), corpus("A2").vertex("c"), 10);
  CHECK_FALSE(sink.defined);
}

TEST_CASE("inverse Nakayama partner") {
  const auto& ex451 = corpus("EX451");
  auto src = nakayama_plus(ex451, ex451.vertex("24"), 1000);
  REQUIRE(src);
  CHECK(ex451.name_of(src->source) == "6");
  const auto& ex453 = corpus("EX453");
  auto four = nakayama_plus(ex453, ex453.vertex("8"), 1000);
  REQUIRE(four);
  CHECK(ex453.name_of(four->source) == "4");
  CHECK_FALSE(nakayama_plus(corpus("A2"), corpus("A2").vertex("a"), 10));
}

TEST_CASE("hom-length matrix") {
  const auto& a2 = corpus("A2");
  auto h = hom_length_matrix(a2, 10);
  CHECK(h == HomLengthMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(hom_length_matrix(corpus("PT1"), 10) == HomLengthMatrix{{1}});
  const auto& ex421 = corpus("EX421");
  auto big = hom_length_matrix(ex421, default_bound(ex421));
  CHECK(big[ex421.vertex("11").index][ex421.vertex("7").index] >= 1);
  for (auto x : ex421.vertices()) CHECK(big[x.index][x.index] >= 1);
  CHECK_THROWS_AS(hom_length_matrix(corpus("LOOP2"), 100), PreconditionError);
}

#include "doctest.h"
#include <set>

#include "support.hpp"
#include "tauq/errors.hpp"

using namespace tauq;
using test::combination;

TEST_CASE("A2 operators") {
  const auto& q = corpus("A2");
  auto c = combination(q, "c"), b = combination(q, "b"), a = combination(q, "a");
  CHECK(theta_plus(q, c) == b);
  CHECK(theta_minus(q, b) == c);
  CHECK(tau_plus_ext(q, c) == a);
  CHECK(tau_plus_ext(q, b).is_zero());
  CHECK(tau_minus_ext(q, a) == c);
  CHECK(phi_plus(q, c) == c - b + a);
  CHECK(phi_plus(q, b) == b - a);
  CHECK(phi_plus(q, VertexCombination{}).is_zero());
  CHECK(theta_plus(q, VertexCombination{}).is_zero());
}

TEST_CASE("fixtures: single operator values") {
  CHECK(theta_plus(corpus("EX421"), combination(corpus("EX421"), "7")) == combination(corpus("EX421"), "11"));
  CHECK(theta_minus(corpus("EX451"), combination(corpus("EX451"), "4")) == combination(corpus("EX451"), "1"));
  CHECK(tau_plus_ext(corpus("EX542"), combination(corpus("EX542"), "20")) == combination(corpus("EX542"), "10"));
}

TEST_CASE("unknown vertices are input errors") {
  const auto& q = corpus("A2");
  CHECK_THROWS_AS(theta_plus(q, VertexCombination(Vertex{17})), InputError);
  CHECK_THROWS_AS((void)q.vertex("zz"), InputError);
}

TEST_CASE("fixture sizes and marks") {
  const auto& ex421 = corpus("EX421");
  CHECK(ex421.size() == 19);
  CHECK(test::names(ex421, ex421.projectives()) == std::vector<std::string>{"14", "16"});
  CHECK(test::names(ex421, ex421.injectives()) == std::vector<std::string>{"7", "9"});
  const auto& ex451 = corpus("EX451");
  CHECK(ex451.size() == 38);
  CHECK(test::names(ex451, ex451.projectives()) == std::vector<std::string>{"4", "6", "8", "24", "34"});
  CHECK(test::names(ex451, ex451.injectives()) == std::vector<std::string>{"4", "6", "8", "15", "24"});
  const auto& ex453 = corpus("EX453");
  CHECK(ex453.size() == 20);
  CHECK(test::names(ex453, ex453.projectives()) == std::vector<std::string>{"1", "4"});
  CHECK(test::names(ex453, ex453.injectives()) == std::vector<std::string>{"1", "4"});
  const auto& ex542 = corpus("EX542");
  CHECK(test::names(ex542, ex542.projectives()) == std::vector<std::string>{"7", "13", "17", "25", "26"});
  CHECK(test::names(ex542, ex542.injectives()) == std::vector<std::string>{"1", "5", "13", "17", "23"});
}

TEST_CASE("every fixture validates and is admissible with c = 1") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto& q = corpus(name);
    CHECK(validate(q).ok());
    auto adm = admissibility(q);
    if (name == "BADC") {
      CHECK_FALSE(adm.admissible);
      CHECK(adm.conflict);
      continue;
    }
    REQUIRE(adm.admissible);
    for (const auto& c : *adm.c) CHECK(c == 1);
  }
}

TEST_CASE("validate reports a missing translate") {
  TranslationQuiver::Builder b("A2-broken");
  for (auto v : {"a", "b", "c"}) b.add_vertex(v);
  b.add_arrow("a", "b").add_arrow("b", "c");
  b.mark_projective("a").mark_projective("b").mark_injective("b").mark_injective("c");
  auto report = validate(b.build());
  CHECK_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) found = found || v.rule == "tau-undefined";
  CHECK(found);
}

TEST_CASE("validate catches a mesh defect and mixed valuations") {
  TranslationQuiver::Builder b("bad");
  for (auto v : {"a", "b", "c"}) b.add_vertex(v);
  b.add_arrow("a", "b", {1, 2}).add_arrow("b", "c", {1, 0});
  b.mark_projective("a").mark_projective("b").mark_injective("b").mark_injective("c");
  b.set_tau("c", "a");
  auto report = validate(b.build());
  std::set<std::string> rules;
  for (const auto& v : report.violations) rules.insert(v.rule);
  CHECK(rules.count("mixed-valuation"));
  CHECK(rules.count("mesh"));
}

TEST_CASE("single vertex quiver is valid") {
  CHECK(validate(corpus("PT1")).ok());
}

TEST_CASE("admissibility with a non-trivial valuation") {
  TranslationQuiver::Builder b("XY");
  b.add_vertex("X").add_vertex("Y").add_arrow("X", "Y", {1, 2});
  for (auto v : {"X", "Y"}) b.mark_projective(v).mark_injective(v);
  auto q = b.build();
  auto adm = admissibility(q);
  REQUIRE(adm.admissible);
  CHECK((*adm.c)[q.vertex("X").index] == 2);
  CHECK((*adm.c)[q.vertex("Y").index] == 1);
}

TEST_CASE("builder rejects duplicates and redefinitions") {
  TranslationQuiver::Builder b;
  b.add_vertex("X");
  CHECK_THROWS_AS(b.add_vertex("X"), InputError);
  b.add_vertex("Y").add_arrow("X", "Y");
  CHECK_THROWS_AS(b.add_arrow("X", "Y"), InputError);
  CHECK_THROWS_AS(b.add_arrow("X", "Z"), InputError);
  b.set_tau("Y", "X");
  CHECK_THROWS_AS(b.set_tau("Y", "Y"), InputError);
}

TEST_CASE("vertices are ordered numerically") {
  CHECK(natural_less("9", "10"));
  CHECK_FALSE(natural_less("10", "9"));
  CHECK(natural_less("10", "a"));
  const auto& q = corpus("EX421");
  CHECK(q.name_of(q.vertices().back()) == "19");
}

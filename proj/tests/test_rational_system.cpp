#include "doctest.h"
#include "tauq/errors.hpp"
#include "tauq/rational_system.hpp"

using namespace tauq;

TEST_CASE("equalities and bounds") {
  RationalSystem s(2);
  s.add_equal({1, -2}, 0, "x = 2y");
  s.add_at_least({0, 1}, Rational(1, 3), "y >= 1/3");
  auto sol = s.solve();
  REQUIRE(sol.feasible);
  CHECK(s.satisfied_by(sol.point));
  CHECK(sol.point[0] == 2 * sol.point[1]);
}

TEST_CASE("inconsistent equalities give a certificate") {
  RationalSystem s(1);
  s.add_equal({1}, 1, "x = 1");
  s.add_equal({2}, 3, "2x = 3");
  auto sol = s.solve();
  CHECK_FALSE(sol.feasible);
  CHECK_FALSE(sol.certificate.empty());
}

TEST_CASE("infeasible inequalities") {
  RationalSystem s(2);
  s.add_at_least({1, 0}, 1, "x >= 1");
  s.add_at_least({0, 1}, 1, "y >= 1");
  s.add_at_least({-1, -1}, -1, "x + y <= 1");
  auto sol = s.solve();
  CHECK_FALSE(sol.feasible);
  CHECK(sol.certificate.find("x + y <= 1") != std::string::npos);
}

TEST_CASE("clearing denominators") {
  CHECK(clear_denominators({Rational(1, 2), Rational(2, 3), 1}) == std::vector<Integer>{3, 4, 6});
}

TEST_CASE("constraint arity is checked") {
  RationalSystem s(2);
  CHECK_THROWS_AS(s.add_equal({1}, 0, "short"), Error);
}

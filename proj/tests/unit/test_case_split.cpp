#include "doctest.h"
#include "postlie/poly/case_split.hpp"

using namespace postlie::poly;
using postlie::exact::Rational;

namespace {
Polynomial P(const std::string& s, const std::vector<std::string>& names) { return parse_polynomial(s, names); }
}  // namespace

TEST_CASE("x*y splits into two components") {
  std::vector<std::string> n{"x", "y"};
  Budget b;
  Ideal I(2, {P("x*y", n)});
  auto comps = case_split(I, 1, b);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].substitutions.size() == 1);
  CHECK(comps[0].substitutions[0].var == 0);
  CHECK(comps[0].nonvanishing.empty());
  CHECK(comps[1].substitutions[0].var == 1);
  REQUIRE(comps[1].nonvanishing.size() == 1);
  CHECK(comps[1].nonvanishing[0] == P("x", n));
  CHECK(sound(I, comps, b));
  CHECK(covers(I, comps, b));
}

TEST_CASE("radical collapse of x^2") {
  std::vector<std::string> n{"x"};
  Budget b;
  auto comps = case_split(Ideal(1, {P("x^2", n)}), 3, b);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].resolved);
  CHECK(comps[0].substitutions[0].numerator.is_zero());
}

TEST_CASE("gamma(gamma-1) gives both roots") {
  std::vector<std::string> n{"g", "a"};
  Budget b;
  Ideal I(2, {P("g^2 - g", n)});
  auto comps = case_split(I, 2, b);
  REQUIRE(comps.size() == 2);
  auto p0 = sample_points(comps[0], 5);
  auto p1 = sample_points(comps[1], 5);
  REQUIRE(p0.size() == 5);
  CHECK(p0[0][0] == Rational(0));
  CHECK(p1[0][0] == Rational(1));
  CHECK(covers(I, comps, b));
}

TEST_CASE("inconsistent ideal yields no component") {
  std::vector<std::string> n{"x"};
  Budget b;
  CHECK(case_split(Ideal(1, {P("x", n), P("x - 1", n)}), 2, b).empty());
}

TEST_CASE("parametric solution with a denominator") {
  std::vector<std::string> n{"x", "y", "z"};
  Budget b;
  Ideal I(3, {P("x*y - z", n), P("y*z", n)});
  auto comps = case_split(I, 4, b);
  CHECK(sound(I, comps, b));
  CHECK(covers(I, comps, b));
  for (const auto& c : comps) {
    for (const auto& pt : sample_points(c, 5)) {
      for (const auto& g : I.generators) CHECK(g.evaluate(pt).is_zero());
    }
  }
}

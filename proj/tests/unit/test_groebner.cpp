#include "doctest.h"
#include "postlie/poly/groebner.hpp"

using namespace postlie::poly;
using postlie::exact::Rational;

namespace {
std::vector<std::string> xy{"x", "y"};
Polynomial P(const std::string& s, const std::vector<std::string>& names = xy) { return parse_polynomial(s, names); }
std::vector<std::string> strs(const GroebnerBasis& gb, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : gb.polys()) out.push_back(p.str(names));
  return out;
}
}  // namespace

TEST_CASE("hand computed basis is already reduced") {
  Budget b;
  auto gb = groebner(Ideal(2, {P("x^2 + x*y"), P("y^2")}, TermOrder{OrderKind::Lex, 0}), b);
  auto s = strs(gb, xy);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "y^2");
  CHECK(s[1] == "x^2 + x*y");
}

TEST_CASE("inconsistent system gives the unit ideal") {
  Budget b;
  auto gb = groebner(Ideal(2, {P("x*y - 1"), P("x"), P("y - 2")}), b);
  CHECK(gb.contains_one());
  CHECK(gb.polys().size() == 1);
}

TEST_CASE("twisted cubic lex basis") {
  std::vector<std::string> n{"x", "y", "z"};
  Budget b;
  auto gb = groebner(Ideal(3, {P("y - x^2", n), P("z - x^3", n)}, TermOrder{OrderKind::Lex, 0}), b);
  auto s = strs(gb, n);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == "y^3 - z^2");
  CHECK(s[3] == "x^2 - y");
  CHECK(gb.member(P("y^3 - z^2", n), b));
  CHECK_FALSE(gb.member(P("y - z", n), b));
}

TEST_CASE("saturation removes a component") {
  Budget b;
  // x*y = 0 saturated by x leaves y = 0
  auto gb = saturate(Ideal(2, {P("x*y"), P("x^2 - x")}), {P("x")}, b);
  auto s = strs(gb, xy);
  REQUIRE(s.size() == 2);
  CHECK(gb.member(P("y"), b));
  CHECK(gb.member(P("x - 1"), b));
}

TEST_CASE("radical membership and intersection") {
  Budget b;
  Ideal I(2, {P("x^2"), P("y^3")});
  CHECK(in_radical(I, P("x + y"), b));
  CHECK_FALSE(in_radical(I, P("x + 1"), b));
  Ideal J = intersect(Ideal(2, {P("x")}), Ideal(2, {P("y")}), b);
  CHECK(ideal_equal(J, Ideal(2, {P("x*y")}), b));
}

TEST_CASE("budget exhaustion throws") {
  Budget b(3);
  std::vector<std::string> n{"a", "b", "c", "d"};
  CHECK_THROWS_AS(groebner(Ideal(4, {P("a^3 - b*c*d", n), P("b^2*a - c", n), P("c^3 - d*a", n), P("d^2 - a*b", n)}), b),
                  BudgetExhausted);
}

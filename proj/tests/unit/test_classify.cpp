#include <algorithm>

#include "doctest.h"
#include "postlie/lie/catalog.hpp"
#include "postlie/solver/classify.hpp"
#include "postlie/solver/tables.hpp"

using namespace postlie::solver;
using postlie::exact::Rational;
using postlie::lie::catalog;

namespace {
ClassificationResult run(const std::string& alg) {
  return classify_commutative(catalog(alg), automorphisms(alg), class_representatives(alg), {});
}
}  // namespace

TEST_CASE("isomorphism decisions") {
  Budget b;
  const auto h = catalog("heisenberg");
  const auto aut = automorphisms("heisenberg");
  const auto c2 = table("C2");
  auto r12 = isomorphic(h, c2.at({Rational(1)}), c2.at({Rational(2)}), aut, b);
  CHECK(r12.answer == Answer::No);
  auto r11 = isomorphic(h, c2.at({Rational(1)}), c2.at({Rational(1)}), aut, b);
  CHECK(r11.answer == Answer::Yes);
  REQUIRE(r11.witness);
  auto a = isomorphic(catalog("r2"), table("A2").product(), table("A3").product(), automorphisms("r2"), b);
  CHECK(a.answer == Answer::No);
  CHECK(a.evidence == "fingerprint");
  CHECK(parameter_distinct(h, c2, aut, b).answer == Answer::No);
  // a rescaled C3 is found isomorphic with an explicit map
  auto c3 = table("C3").product();
  postlie::exact::Matrix P(3, 3);
  P(0, 0) = Rational(2);
  P(1, 1) = Rational(1);
  P(2, 2) = Rational(2);
  P(2, 0) = Rational(1);
  auto moved = c3.transported(P);
  auto w = isomorphic(h, c3, moved, aut, b);
  CHECK(w.answer == Answer::Yes);
  if (w.witness) CHECK(c3.transported(*w.witness) == moved);
}

TEST_CASE("classify r2") {
  auto r = run("r2");
  CHECK(r.complete());
  CHECK(r.class_names() == std::vector<std::string>{"A1", "A2", "A3"});
}

TEST_CASE("classify r3_jordan") {
  auto r = run("r3_jordan");
  CHECK(r.complete());
  CHECK(r.class_names() == std::vector<std::string>{"B1", "B2", "B3", "B4"});
}

TEST_CASE("classify heisenberg") {
  auto r = run("heisenberg");
  CHECK(r.missing.empty());
  const auto names = r.class_names();
  REQUIRE(names.size() >= 4);
  CHECK(std::vector<std::string>(names.begin(), names.begin() + 4) == std::vector<std::string>{"C1", "C2", "C3", "C4"});
  // central products x.y = B(x,y) e3 with det B != 1 are extra classes
  CHECK(names.size() > 4);
  for (const auto& d : r.distinct) CHECK(d.result.answer == Answer::No);
  for (const auto& c : r.coverage) CHECK(c.unmatched == 0);
}

TEST_CASE("determinant of a central form is an invariant") {
  Budget b;
  const auto h = catalog("heisenberg");
  const auto aut = automorphisms("heisenberg");
  auto form = [](int l) {
    return ProductFamily::from_left_text("f", 3, {}, {"0,0,0;0,0,0;1,0,0", "0,0,0;0,0,0;0," + std::to_string(l) + ",0", "0"})
        .product();
  };
  CHECK(isomorphic(h, form(1), table("C4").product(), aut, b).answer == Answer::Yes);
  auto r = isomorphic(h, form(1), form(2), aut, b);
  CHECK(r.answer == Answer::No);
  CHECK(r.evidence == "certificate");
  CHECK(isomorphic(h, form(1), form(-1), aut, b).answer == Answer::No);
}

TEST_CASE("reduced systems match the displayed families") {
  Budget b;
  auto j = setup_commutative(catalog("r3_jordan"));
  REQUIRE(linear_stage(j));
  reduce_stage(j, TermOrder{}, b);
  auto mj = match_linear_family(j, table("B"), b);
  CHECK(mj.shape);
  CHECK(mj.invertible);
  CHECK(mj.constraints_equal);
  auto h = setup_commutative(catalog("heisenberg"));
  REQUIRE(linear_stage(h));
  reduce_stage(h, TermOrder{}, b);
  auto mh = match_linear_family(h, table("h1_family"), b);
  CHECK(mh.shape);
  CHECK(mh.invertible);
  CHECK(mh.constraints_equal);
}

TEST_CASE("family nilpotency on nilpotent algebras") {
  for (const char* n : {"heisenberg", "f23"}) {
    auto r = solve_commutative(catalog(n), {});
    for (const auto& f : r.families) {
      Budget b;
      auto nil = family_left_nilpotent(f, catalog(n).dim(), b);
      CHECK(nil.symbolic_checked);
      CHECK(nil.pass());
      CHECK(nil.samples == 5);
    }
  }
  auto r = solve_commutative(catalog("h1_plus_C"), {});
  bool some_fail = false;
  for (const auto& f : r.families) {
    Budget b;
    if (!family_left_nilpotent(f, 4, b).pass()) some_fail = true;
  }
  CHECK(some_fail);
}

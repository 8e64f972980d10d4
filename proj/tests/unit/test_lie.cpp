#include "doctest.h"
#include "postlie/error.hpp"
#include "postlie/lie/catalog.hpp"
#include "postlie/lie/semidirect.hpp"
#include "postlie/lie/structure.hpp"

using namespace postlie::lie;
using postlie::InputError;

TEST_CASE("catalog entries satisfy Jacobi") {
  for (const auto& [name, g] : catalog_samples()) {
    CAPTURE(name);
    CHECK(jacobi_defect(g.dim(), g.constants()).empty());
  }
}

TEST_CASE("jacobi defect detects a broken bracket") {
  // [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=e1 breaks J(e1,e2,e3).
  const std::size_t n = 3;
  std::vector<Rational> c(27, Rational(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    c[(i * n + j) * n + k] = Rational(1);
    c[(j * n + i) * n + k] = Rational(-1);
  };
  set(0, 1, 0);
  set(0, 2, 1);
  set(1, 2, 0);
  CHECK_FALSE(jacobi_defect(n, c).empty());
  CHECK_THROWS_AS(LieAlgebra(n, c), InputError);
  CHECK(jacobi_defect(3, catalog("heisenberg").constants()).empty());
  CHECK(jacobi_defect(3, std::vector<Rational>(27, Rational(0))).empty());
}

TEST_CASE("series") {
  CHECK(series_dims(catalog("f23"), SeriesKind::LowerCentral) == std::vector<std::size_t>{5, 3, 2, 0});
  CHECK(series_dims(catalog("sl2"), SeriesKind::Derived) == std::vector<std::size_t>{3});
  CHECK(series_dims(catalog("abelian(3)"), SeriesKind::LowerCentral) == std::vector<std::size_t>{3, 0});
}

TEST_CASE("predicates") {
  CHECK_FALSE(predicates(catalog("r2")).is_unimodular);
  CHECK(catalog("r2").ad(1).trace() == Rational(-1));
  CHECK(predicates(catalog("r3_diag(-1)")).is_unimodular);
  CHECK_FALSE(predicates(catalog("r3_diag(1)")).is_unimodular);
  CHECK_FALSE(predicates(catalog("r3_diag(2)")).is_unimodular);
  auto p = predicates(catalog("sl2_ltimes_V(2)"));
  CHECK(p.is_perfect);
  CHECK_FALSE(p.is_semisimple);
  auto s = predicates(catalog("sl2"));
  CHECK(s.is_semisimple);
  CHECK(s.center_dim == 0);
  CHECK(predicates(catalog("f23")).is_nilpotent);
  CHECK(predicates(catalog("heisenberg")).center_dim == 1);
  for (std::size_t m : {2, 3, 4}) CHECK(predicates(catalog("sl2_ltimes_V", {Rational(long(m))})).is_perfect);
}

TEST_CASE("killing radical") {
  CHECK(killing_radical(catalog("sl2")).dim() == 0);
  CHECK(killing_radical(catalog("r3_jordan")).dim() == 3);
  const auto g = catalog("sl2_ltimes_V(2)");
  const auto rad = killing_radical(g);
  CHECK(rad == Subspace::span(5, {postlie::exact::unit_vector(5, 3), postlie::exact::unit_vector(5, 4)}));
  for (const auto& [name, a] : catalog_samples()) {
    CAPTURE(name);
    const auto r = killing_radical(a);
    REQUIRE(is_ideal(a, r));
    CHECK(predicates(restrict(a, r)).is_solvable);
    const auto q = quotient(a, r);
    if (q.dim() > 0) CHECK(is_semisimple(q));
  }
}

TEST_CASE("semidirect products") {
  const auto s = catalog("sl2");
  const auto split = semidirect(LieAlgebra::abelian(2), s, sl2_module(2));
  CHECK(split.algebra.relabeled({2, 3, 4, 0, 1}) == catalog("sl2_ltimes_V2"));
  const auto sum = semidirect(LieAlgebra::abelian(1), s, Representation::trivial(s, 1));
  CHECK(sum.algebra == direct_sum(LieAlgebra::abelian(1), s));
  const auto ab = semidirect(LieAlgebra::abelian(2), LieAlgebra::abelian(1),
                             Representation::trivial(LieAlgebra::abelian(1), 2));
  CHECK(ab.algebra.is_abelian());
  // restriction to r and projection to s
  const auto& g = split.algebra;
  CHECK(restrict(g, Subspace::span(5, {postlie::exact::unit_vector(5, 0), postlie::exact::unit_vector(5, 1)})).is_abelian());
  CHECK(quotient(g, killing_radical(g)) == s);
}

TEST_CASE("semidirect rejects non-derivations") {
  const auto r = catalog("heisenberg");
  const auto s = LieAlgebra::abelian(1);
  Matrix bad(3, 3);
  bad(0, 0) = Rational(1);  // scales e1 only: D[e1,e2] = 0 but [De1,e2] = e3
  CHECK_THROWS_AS(semidirect(r, s, Representation(s, {bad})), InputError);
}

TEST_CASE("catalog brackets as displayed") {
  const auto j = catalog("r3_jordan");
  CHECK(j.bracket(0, 1) == Vector{Rational(0), Rational(1), Rational(0)});
  CHECK(j.bracket(0, 2) == Vector{Rational(0), Rational(1), Rational(1)});
  const auto sv = catalog("sl2_ltimes_V(2)");
  // [e1,e5] = e4, [e2,e4] = e5, [e3,e4] = e4, [e3,e5] = -e5
  CHECK(sv.constant(0, 4, 3) == Rational(1));
  CHECK(sv.constant(1, 3, 4) == Rational(1));
  CHECK(sv.constant(2, 3, 3) == Rational(1));
  CHECK(sv.constant(2, 4, 4) == Rational(-1));
  CHECK_THROWS_AS(catalog("nope"), InputError);
  CHECK_THROWS_AS(catalog("abelian(0)"), InputError);
  CHECK_THROWS_AS(catalog("r3_diag"), InputError);
}

#include "doctest.h"
#include "postlie/deriv/derivations.hpp"
#include "postlie/lie/catalog.hpp"
#include "postlie/lie/structure.hpp"

using namespace postlie::deriv;
using postlie::lie::catalog;
using postlie::lie::sl2_module;

namespace {

// The displayed 10-parameter derivation of f23, parameters
// (a1, a2, b1, b2, g1, g2, d1, d2, e1, e2).
Matrix f23_pattern(const std::vector<Rational>& p) {
  const Rational &a1 = p[0], &a2 = p[1], &b1 = p[2], &b2 = p[3], &g1 = p[4], &g2 = p[5], &d1 = p[6], &d2 = p[7],
                 &e1 = p[8], &e2 = p[9];
  const Rational z(0);
  return Matrix::from_rows({{a1, a2, z, z, z},
                            {b1, b2, z, z, z},
                            {g1, g2, a1 + b2, z, z},
                            {d1, d2, g2, Rational(2) * a1 + b2, a2},
                            {e1, e2, -g1, b1, a1 + Rational(2) * b2}});
}

Subspace pattern_space() {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < 10; ++i) {
    std::vector<Rational> p(10, Rational(0));
    p[i] = Rational(1);
    v.push_back(f23_pattern(p).flatten());
  }
  return Subspace::span(25, v);
}

}  // namespace

TEST_CASE("derivations of f23 match the displayed pattern") {
  const auto der = derivations(catalog("f23"));
  CHECK(der.dim() == 10);
  CHECK(der.space == pattern_space());
}

TEST_CASE("derivation dimensions") {
  CHECK(derivations(catalog("heisenberg")).dim() == 6);
  CHECK(derivations(catalog("abelian(3)")).dim() == 9);
  auto s = inner_and_outer(catalog("sl2"));
  CHECK(s.dim_der == 3);
  CHECK(s.dim_inner == 3);
  CHECK(s.dim_H1 == 0);
  auto a = inner_and_outer(catalog("abelian(2)"));
  CHECK(a.dim_der == 4);
  CHECK(a.dim_inner == 0);
  CHECK(a.dim_H1 == 4);
  for (long m : {2, 3, 4}) CHECK(inner_and_outer(catalog("sl2_ltimes_V", {Rational(m)})).dim_H1 == 1);
}

TEST_CASE("every derivation basis element is a derivation") {
  for (const auto& [name, g] : postlie::lie::catalog_samples()) {
    if (g.dim() > 6) continue;
    CAPTURE(name);
    for (const auto& d : derivations(g).basis()) CHECK(postlie::lie::is_derivation(g, d));
  }
}

TEST_CASE("D(0,1,1)") {
  CHECK(d011(catalog("sl2")).dim() == 0);
  CHECK(d011(catalog("abelian(3)")).dim() == 9);
  CHECK(d011(catalog("sl2_ltimes_V(2)")).dim() == 0);
}

TEST_CASE("intertwiners") {
  CHECK(intertwiners(sl2_module(2)).dim() == 1);
  CHECK(intertwiners(Representation::direct_sum(sl2_module(2), sl2_module(3))).dim() == 2);
  CHECK(intertwiners(Representation::direct_sum(sl2_module(2), sl2_module(2))).dim() == 4);
  CHECK(intertwiners(Representation::trivial(catalog("sl2"), 2)).dim() == 4);
}

TEST_CASE("first cohomology") {
  for (std::size_t m : {2, 3, 4}) {
    const auto h = cohomology_H1(sl2_module(m));
    CHECK(h.dim_H1() == 0);
    CHECK(h.dim_Z1() == m);
  }
  const auto t = cohomology_H1(Representation::trivial(LieAlgebra::abelian(1), 1));
  CHECK(t.dim_Z1() == 1);
  CHECK(t.dim_B1() == 0);
}

TEST_CASE("derivation triples on sl2 x| V(m)") {
  for (std::size_t m : {2, 3, 4}) {
    CAPTURE(m);
    const auto split = postlie::lie::semidirect(LieAlgebra::abelian(m), catalog("sl2"), sl2_module(m));
    const auto a = Subspace::span(m + 3, [&] {
      std::vector<Vector> v;
      for (std::size_t i = 0; i < m; ++i) v.push_back(postlie::exact::unit_vector(m + 3, i));
      return v;
    }());
    const auto direct = derivations_into(split.algebra, a);
    const auto triples = triple_space(split, true);
    CHECK(direct.space == triples.space);
    CHECK(direct.dim() == cohomology_H1(split.action).dim_Z1() + intertwiners(split.action).dim());
    CHECK(triple_space(split, false).space == derivations(split.algebra).space);
    CHECK(inner_intertwiner_dim(split) == 0);
  }
}

TEST_CASE("verify_triple") {
  const auto split = postlie::lie::semidirect(LieAlgebra::abelian(2), catalog("sl2"), sl2_module(2));
  const Matrix id2 = Matrix::identity(2);
  auto r1 = verify_triple(split, {id2, Matrix(2, 3), Matrix(3, 3)});
  CHECK(r1.all());
  CHECK(r1.is_derivation);
  const auto z1 = cohomology_H1(split.action).z1.basis();
  auto r2 = verify_triple(split, {Matrix(2, 2), z1[0], Matrix(3, 3)});
  CHECK(r2.all());
  CHECK(r2.is_derivation);
  Matrix bad(3, 3);
  bad(0, 0) = Rational(1);
  auto r3 = verify_triple(split, {Matrix(2, 2), Matrix(2, 3), bad});
  CHECK_FALSE(r3.b);
  CHECK_FALSE(r3.is_derivation);
}

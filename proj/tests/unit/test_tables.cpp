#include "doctest.h"
#include "postlie/lie/catalog.hpp"
#include "postlie/product/product.hpp"
#include "postlie/solver/tables.hpp"

using namespace postlie::solver;
using postlie::exact::Rational;
using postlie::lie::catalog;
using postlie::product::verify_commutative;

TEST_CASE("table representatives verify") {
  for (const char* n : {"A1", "A2", "A3", "B1", "B2", "B3", "B4", "C1", "C3", "C4", "h1_plus_C"}) {
    CAPTURE(n);
    const auto f = table(n);
    CHECK(verify_commutative(catalog(table_algebra(n)), f.product()).pass());
  }
  for (int mu : {0, 1, -2}) {
    CHECK(verify_commutative(catalog("heisenberg"), table("C2").at({Rational(mu)})).pass());
  }
  for (const char* b : {"B(0,0,0)", "B(1,0,0)", "B(0,1,0)", "B(0,0,1)", "B(2,-1,1)", "B(1/2,3,0)"}) {
    CAPTURE(b);
    CHECK(verify_commutative(catalog("r3_jordan"), table(b).product()).pass());
  }
  CHECK(table("B(0,0,1)").product() == table("B4").product());
  CHECK_THROWS(table("B(0,0,2)"));
  CHECK_THROWS(table("Z9"));
}

TEST_CASE("h1 proof family members verify") {
  // alpha = delta = kappa = 0, beta = 0: gamma, epsilon, lambda free
  const auto f = table("h1_family");
  const std::vector<Rational> pt = {0, 0, 3, 0, Rational(1, 2), 0, -1};
  for (const auto& c : f.constraints) CHECK(c.evaluate(pt).is_zero());
  CHECK(verify_commutative(catalog("heisenberg"), f.at(pt)).pass());
  // kappa = 1, alpha = delta = 0 forces beta = 0, lambda = -2 delta eps / ... = gamma free
  const std::vector<Rational> q = {0, 0, 0, 0, 2, 1, 5};
  for (const auto& c : f.constraints) CHECK(c.evaluate(q).is_zero());
  CHECK(verify_commutative(catalog("heisenberg"), f.at(q)).pass());
}

TEST_CASE("automorphism parametrizations") {
  for (const char* a : {"r2", "r3_jordan", "heisenberg"}) {
    CAPTURE(a);
    CHECK(validate_aut(catalog(a), automorphisms(a)));
  }
  // the r2 matrix is not an automorphism of r3_jordan-sized algebras
  CHECK_FALSE(validate_aut(catalog("heisenberg"), automorphisms("r2")));
  auto wrong = automorphisms("r2");
  wrong.entries[3] = wrong.entries[0];  // [[a,b],[0,a]]
  CHECK_FALSE(validate_aut(catalog("r2"), wrong));
}

TEST_CASE("sl3 example") {
  const auto ex = sl3_example();
  const postlie::lie::PairOnSameSpace pair(ex.g, ex.n);
  CHECK(postlie::product::verify_pair(pair, ex.product).pass());
  const auto rep = postlie::product::phi_to_product(ex.phi, pair);
  CHECK(rep.pass());
  CHECK(rep.product == ex.product);
}

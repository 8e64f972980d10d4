#include "doctest.h"
#include "postlie/lie/catalog.hpp"
#include "postlie/solver/solve.hpp"

using namespace postlie::solver;
using postlie::lie::catalog;

TEST_CASE("commutative solve sl2 is zero") {
  auto r = solve_commutative(catalog("sl2"), {});
  REQUIRE(r.status == Status::Families);
  REQUIRE(r.families.size() == 1);
  CHECK(r.families[0].params.empty());
  CHECK(r.families[0].sample_products.at(0).is_zero());
}

TEST_CASE("commutative solve small algebras") {
  for (const char* n : {"r2", "r3_jordan", "heisenberg", "abelian(2)", "f23", "h1_plus_C"}) {
    auto r = solve_commutative(catalog(n), {});
    CHECK(r.status == Status::Families);
    for (const auto& f : r.families) CHECK(f.verified);
  }
}

TEST_CASE("pair solves") {
  using postlie::lie::PairOnSameSpace;
  auto a = solve_pair(PairOnSameSpace(catalog("heisenberg"), catalog("sl2")), {});
  CHECK(a.status == Status::Empty);
  auto b = solve_pair(PairOnSameSpace(catalog("abelian(3)"), catalog("sl2")), {});
  CHECK(b.status == Status::Empty);
  auto c = solve_pair(PairOnSameSpace(catalog("r3_diag(1)"), catalog("sl2")), {});
  CHECK(c.status == Status::Witness);
  auto d = solve_pair(PairOnSameSpace(catalog("sl2"), catalog("sl2")), {});
  CHECK(d.status == Status::Witness);
}

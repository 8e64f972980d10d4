#include "doctest.h"
#include "postlie/lie/catalog.hpp"
#include "postlie/solver/system.hpp"

using namespace postlie::solver;
using postlie::lie::catalog;

namespace {
std::size_t kernel_params(const std::string& name) {
  auto sys = setup_commutative(catalog(name));
  REQUIRE(linear_stage(sys));
  return sys.nvars();
}
}  // namespace

TEST_CASE("commutative linear stage parameter counts") {
  CHECK(kernel_params("sl2") == 0);
  CHECK(kernel_params("r3_jordan") == 6);
  CHECK(kernel_params("heisenberg") == 9);
  CHECK(kernel_params("f23") == 15);
  CHECK(kernel_params("abelian(2)") == 6);
}

TEST_CASE("reduced commutative systems") {
  Budget b;
  auto sys = setup_commutative(catalog("heisenberg"));
  REQUIRE(linear_stage(sys));
  auto red = reduce_stage(sys, TermOrder{}, b);
  CHECK_FALSE(red.empty);
  CHECK(red.collapsed_powers == 2);
  CHECK(sys.nvars() == 7);
  auto j = setup_commutative(catalog("r3_jordan"));
  REQUIRE(linear_stage(j));
  reduce_stage(j, TermOrder{}, b);
  CHECK(j.nvars() == 3);
  REQUIRE(j.nonlinear.size() == 1);
  CHECK(j.nonlinear[0].total_degree() == 2);
}

TEST_CASE("phi systems") {
  Budget b;
  auto s = setup_phi({catalog("sl2"), catalog("sl2")});
  REQUIRE(linear_stage(s));
  CHECK(s.nvars() == 0);
  auto h = setup_phi({catalog("heisenberg"), catalog("sl2")});
  bool consistent = linear_stage(h);
  if (consistent) CHECK(reduce_stage(h, TermOrder{}, b).empty);
}

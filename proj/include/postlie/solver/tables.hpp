#pragma once

#include <string>
#include <vector>

#include "postlie/solver/family.hpp"

namespace postlie::solver {

/// Structure tables for r2 (A1..A3), r3_jordan (B1..B4 and the B family in
/// alpha, beta, gamma), heisenberg (C1..C4, C2 in mu, and the seven-parameter
/// family "h1_family"), and "h1_plus_C" (the non-nilpotent example).
/// Names accept a parameter list, e.g. "C2(3)" or "B(0,1,1)".
ProductFamily table(const std::string& spec);
std::vector<std::string> table_names();
/// Catalog name of the algebra a table lives on.
std::string table_algebra(const std::string& spec);

/// Representatives of the commutative classes on r2, r3_jordan, heisenberg.
std::vector<ProductFamily> class_representatives(const std::string& algebra);

/// gamma^2 - gamma, in the B family's parameters.
std::vector<Polynomial> b_family_conditions();
/// The five conditions on (alpha, beta, gamma, delta, epsilon, kappa, lambda).
std::vector<Polynomial> h1_family_conditions();

/// Parametrized automorphism groups of r2, r3_jordan and heisenberg.
AutGroupParam automorphisms(const std::string& algebra);

/// Eight-dimensional example on a solvable g with n = sl3.
struct Sl3Example {
  LieAlgebra g;
  LieAlgebra n;
  BilinearProduct product;
  Matrix phi;
};
Sl3Example sl3_example();

}  // namespace postlie::solver

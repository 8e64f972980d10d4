#pragma once

#include <string>
#include <vector>

#include "postlie/lie/algebra.hpp"
#include "postlie/poly/groebner.hpp"

namespace postlie::solver {

using exact::Matrix;
using exact::Rational;
using lie::LieAlgebra;
using lie::PairOnSameSpace;
using poly::Budget;
using poly::Polynomial;
using poly::TermOrder;

enum class Mode { General, Phi, Commutative };
const char* to_string(Mode m);

/// A post-Lie solving problem: product (and phi) coefficients as polynomials
/// in the unknowns `names`, with linear and nonlinear constraints.
struct System {
  Mode mode = Mode::General;
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<Polynomial> product;  // a(i,j,k) at (i*dim + j)*dim + k
  std::vector<Polynomial> phi;      // phi mode: row-major, column c is phi(e_c)
  std::vector<Polynomial> linear;
  std::vector<Polynomial> nonlinear;

  [[nodiscard]] std::size_t nvars() const { return names.size(); }
  /// All constraints as one ideal.
  [[nodiscard]] poly::Ideal ideal(TermOrder order) const;
};

/// Unknowns s{i}{j}_{k} (i <= j) for the symmetric part; the antisymmetric
/// part is fixed to ([x,y] - {x,y})/2.
System setup_general(const PairOnSameSpace& pair);
/// Unknowns p{r}{c}, the entries of phi. Throws InputError unless n is
/// semisimple.
System setup_phi(const PairOnSameSpace& pair);
/// Symmetric unknowns s{i}{j}_{k} with g = n.
System setup_commutative(const LieAlgebra& g);

/// Solve the linear constraints and rewrite everything in the free unknowns.
/// Returns false when the linear system is inconsistent.
bool linear_stage(System& sys);

struct Reduction {
  bool empty = false;
  poly::GroebnerBasis gb;             // of the nonlinear constraints at the end
  std::size_t eliminated_linear = 0;  // unknowns removed by linear GB elements
  std::size_t collapsed_powers = 0;   // unknowns removed through x^k in the GB
};

/// Iterate: Groebner basis of the nonlinear constraints, then eliminate
/// unknowns from basis elements that are linear or pure powers. Afterwards
/// `sys.nonlinear` is the reduced basis.
Reduction reduce_stage(System& sys, TermOrder order, Budget& budget);

}  // namespace postlie::solver

#pragma once

#include <functional>
#include <vector>

#include "postlie/lie/algebra.hpp"
#include "postlie/lie/semidirect.hpp"

namespace postlie::deriv {

using exact::Matrix;
using exact::Rational;
using exact::Subspace;
using exact::Vector;
using lie::LieAlgebra;
using lie::Representation;

/// Subspace of rows x cols matrices (row-major flattening) in canonical form.
struct MatrixSpace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Subspace space;

  [[nodiscard]] std::size_t dim() const { return space.dim(); }
  [[nodiscard]] std::vector<Matrix> basis() const;
  [[nodiscard]] bool contains(const Matrix& m) const { return space.contains(m.flatten()); }
};

/// Kernel of a linear map given by its action on unknown vectors of length
/// `unknowns`; the map is sampled on unit vectors to build its matrix.
Subspace linear_kernel(std::size_t unknowns, const std::function<Vector(const Vector&)>& f);

MatrixSpace derivations(const LieAlgebra& g);
MatrixSpace inner_derivations(const LieAlgebra& g);
/// Derivations D with D(g) contained in `target`.
MatrixSpace derivations_into(const LieAlgebra& g, const Subspace& target);

struct InnerOuter {
  std::size_t dim_der = 0;
  std::size_t dim_inner = 0;
  std::size_t dim_H1 = 0;
};
InnerOuter inner_and_outer(const LieAlgebra& g);

/// {phi : [phi x, y] + [x, phi y] = 0 for all x, y}.
MatrixSpace d011(const LieAlgebra& g);

/// Commutant of the action.
MatrixSpace intertwiners(const Representation& rho);

struct Cohomology1 {
  MatrixSpace z1;  // module_dim x s_dim, column x is f(e_x)
  MatrixSpace b1;
  [[nodiscard]] std::size_t dim_Z1() const { return z1.dim(); }
  [[nodiscard]] std::size_t dim_B1() const { return b1.dim(); }
  [[nodiscard]] std::size_t dim_H1() const { return z1.dim() - b1.dim(); }
};
Cohomology1 cohomology_H1(const Representation& rho);

/// D(a, x) = (d1 a + f x, d2 x) on r x| s.
struct Triple {
  Matrix d1;  // r -> r
  Matrix f;   // s -> r
  Matrix d2;  // s -> s
};

struct TripleReport {
  bool a = false;  // d1 in Der(r)
  bool b = false;  // d2 in Der(s)
  bool c = false;  // f is a 1-cocycle
  bool d = false;  // [d1, phi(x)] = ad_r(f x) + phi(d2 x)
  bool is_derivation = false;  // direct check of the assembled map
  [[nodiscard]] bool all() const { return a && b && c && d; }
};

Matrix assemble(const lie::SemidirectSplit& split, const Triple& t);
Triple disassemble(const lie::SemidirectSplit& split, const Matrix& d);
TripleReport verify_triple(const lie::SemidirectSplit& split, const Triple& t);

/// All assembled matrices of triples satisfying (a)-(d); with
/// `d2_zero` the s -> s block is fixed to zero.
MatrixSpace triple_space(const lie::SemidirectSplit& split, bool d2_zero);

/// Dimension of {d in End_s(r) : (d,0,0) is inner}; zero when no nonzero
/// intertwiner is realized by an inner derivation.
std::size_t inner_intertwiner_dim(const lie::SemidirectSplit& split);

}  // namespace postlie::deriv

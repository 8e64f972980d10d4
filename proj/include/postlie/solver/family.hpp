#pragma once

#include <string>
#include <vector>

#include "postlie/lie/algebra.hpp"
#include "postlie/poly/polynomial.hpp"
#include "postlie/product/product.hpp"

namespace postlie::solver {

using exact::Matrix;
using exact::Rational;
using lie::LieAlgebra;
using poly::Polynomial;
using product::BilinearProduct;

/// Square matrix from "a,b;c,d" text over `names`; "0" is the zero matrix.
std::vector<Polynomial> parse_matrix_text(const std::string& text, std::size_t dim, const std::vector<std::string>& names);

/// Product whose coefficients are polynomials in named parameters, subject
/// to polynomial constraints. No parameters means a single product.
struct ProductFamily {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<Polynomial> a;  // dim^3 coefficients, a[(i*dim+j)*dim+k]
  std::vector<Polynomial> constraints;

  static ProductFamily single(std::string name, const BilinearProduct& p);
  /// Left multiplication matrices in text form, rows split by ';' and
  /// entries by ','; "0" is the zero matrix. Column j of L(e_i) is e_i.e_j.
  static ProductFamily from_left_text(std::string name, std::size_t dim, std::vector<std::string> params,
                                      const std::vector<std::string>& left);

  [[nodiscard]] std::size_t nparams() const { return params.size(); }
  [[nodiscard]] BilinearProduct at(const std::vector<Rational>& values) const;
  [[nodiscard]] BilinearProduct product() const { return at({}); }
};

/// Matrix group with polynomial entries; members are the points where
/// `nonvanishing` is nonzero.
struct AutGroupParam {
  std::string algebra;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<Polynomial> entries;  // row-major, column j is the image of e_j
  Polynomial nonvanishing;

  static AutGroupParam from_text(std::string algebra, std::size_t dim, std::vector<std::string> params,
                                 const std::string& matrix, const std::string& nonvanishing);
  [[nodiscard]] Matrix at(const std::vector<Rational>& values) const;
};

/// Every member is a Lie automorphism of g: P[x,y] = [Px,Py] holds as a
/// polynomial identity, and det P vanishes only where `nonvanishing` does.
bool validate_aut(const LieAlgebra& g, const AutGroupParam& aut);

}  // namespace postlie::solver

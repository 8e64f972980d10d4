#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "postlie/exact/linalg.hpp"
#include "postlie/exact/matrix.hpp"

namespace postlie::lie {

using exact::Matrix;
using exact::Rational;
using exact::Subspace;
using exact::Vector;

struct JacobiViolation {
  std::size_t i, j, k;
  Vector defect;
};

/// Basis triples i < j < k where the Jacobi sum is nonzero, for constants
/// indexed c[(i*dim + j)*dim + k].
std::vector<JacobiViolation> jacobi_defect(std::size_t dim, const std::vector<Rational>& c);

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Construction rejects non-antisymmetric
/// constants and Jacobi failures with InputError.
class LieAlgebra {
 public:
  struct Bracket {
    std::size_t i, j;
    Vector value;
  };

  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, std::vector<Rational> constants, std::vector<std::string> names = {});

  static LieAlgebra abelian(std::size_t dim);
  /// Brackets for i < j, 0-based; missing pairs are zero.
  static LieAlgebra from_brackets(std::size_t dim, const std::vector<Bracket>& brackets,
                                  std::vector<std::string> names = {});
  /// The span of `basis` under the matrix commutator (must be closed).
  static LieAlgebra from_matrices(const std::vector<Matrix>& basis, std::vector<std::string> names = {});

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::vector<Rational>& constants() const { return c_; }
  [[nodiscard]] const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] Vector bracket(std::size_t i, std::size_t j) const;
  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;
  /// ad(e_i); column j is [e_i, e_j].
  [[nodiscard]] Matrix ad(std::size_t i) const;
  [[nodiscard]] Matrix ad(const Vector& x) const;
  [[nodiscard]] bool is_abelian() const;

  /// Same space with the bracket multiplied by -1.
  [[nodiscard]] LieAlgebra negated() const;
  /// New basis f_a = e_{perm[a]}.
  [[nodiscard]] LieAlgebra relabeled(const std::vector<std::size_t>& perm) const;
  /// Nonzero brackets [e_i, e_j], i < j.
  [[nodiscard]] std::vector<Bracket> brackets() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
  std::vector<std::string> names_;
};

/// Linear action of s on a module: action[i] = rho(e_i).
class Representation {
 public:
  Representation() = default;
  /// Throws InputError unless rho([e_i,e_j]) = [rho(e_i), rho(e_j)].
  Representation(LieAlgebra algebra, std::vector<Matrix> action);

  static Representation adjoint(const LieAlgebra& g);
  static Representation trivial(const LieAlgebra& s, std::size_t module_dim);
  static Representation direct_sum(const Representation& a, const Representation& b);

  [[nodiscard]] const LieAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] std::size_t module_dim() const { return module_dim_; }
  [[nodiscard]] const std::vector<Matrix>& action() const { return action_; }
  [[nodiscard]] const Matrix& act(std::size_t i) const { return action_[i]; }
  [[nodiscard]] Matrix act(const Vector& x) const;

 private:
  LieAlgebra algebra_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> action_;
};

/// Two Lie brackets on one vector space.
struct PairOnSameSpace {
  LieAlgebra g;
  LieAlgebra n;
  PairOnSameSpace(LieAlgebra g_, LieAlgebra n_);
  [[nodiscard]] std::size_t dim() const { return g.dim(); }
};

}  // namespace postlie::lie

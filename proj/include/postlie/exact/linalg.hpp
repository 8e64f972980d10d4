#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "postlie/exact/matrix.hpp"

namespace postlie::exact {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form. Pivots are the first nonzero entry in
/// column order; no numeric pivot selection is needed over the rationals.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A linear subspace of k^n held by its canonical reduced echelon basis, so
/// two subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  [[nodiscard]] Vector coordinates(const Vector& v) const;
  /// Standard basis indices complementing the pivots (canonical complement).
  [[nodiscard]] std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Basis of {v : m v = 0}; dim = cols - rank.
Subspace kernel_basis(const Matrix& m);

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Full solution set of a x = b, or nullopt when b is outside the column
/// space. Throws std::invalid_argument on a dimension mismatch.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

/// Solution set of a x = b written in terms of the free unknowns of the
/// echelon form: x = particular + sum_f t_f * direction_f, where free column
/// f carries a 1 in its own slot.
struct AffineParametrization {
  Vector particular;
  std::vector<std::size_t> free_columns;
  std::vector<Vector> directions;
};

std::optional<AffineParametrization> parametrize_affine(const Matrix& a, const Vector& b);

/// Determinant by fraction-preserving elimination.
Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace postlie::exact

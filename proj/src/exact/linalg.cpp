#include "postlie/exact/linalg.hpp"

#include <stdexcept>

namespace postlie::exact {

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const auto res = rref(Matrix::from_row_vectors(vectors, ambient_dim));
  for (std::size_t i = 0; i < res.rank; ++i) s.basis_.push_back(res.reduced.row(i));
  s.pivots_ = res.pivot_columns;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient_dim; ++i) vs.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, vs);
}

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector outside ambient space");
  Vector coords;
  coords.reserve(basis_.size());
  Vector rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = rest[pivots_[i]];
    coords.push_back(c);
    if (!c.is_zero()) rest = rest - c * basis_[i];
  }
  if (!is_zero(rest)) throw std::invalid_argument("vector not in subspace");
  return coords;
}

bool Subspace::contains(const Vector& v) const {
  Vector rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = rest[pivots_[i]];
    if (!c.is_zero()) rest = rest - c * basis_[i];
  }
  return is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0 and map the x-part back.
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da == 0 || db == 0) return Subspace(n);
  Matrix m(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, da + j) = -b.basis()[j][r];
  const auto ker = kernel_basis(m);
  std::vector<Vector> vs;
  for (const auto& k : ker.basis()) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < da; ++i) {
      if (!k[i].is_zero()) v = v + k[i] * a.basis()[i];
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

std::optional<AffineParametrization> parametrize_affine(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: dimension mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto res = rref(aug);
  if (!res.pivot_columns.empty() && res.pivot_columns.back() == n) return std::nullopt;
  AffineParametrization out;
  out.particular = zero_vector(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < res.rank; ++i) {
    const std::size_t pc = res.pivot_columns[i];
    is_pivot[pc] = true;
    out.particular[pc] = res.reduced(i, n);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector d = zero_vector(n);
    d[f] = 1;
    for (std::size_t i = 0; i < res.rank; ++i) d[res.pivot_columns[i]] = -res.reduced(i, f);
    out.free_columns.push_back(f);
    out.directions.push_back(std::move(d));
  }
  return out;
}

Subspace kernel_basis(const Matrix& m) {
  auto p = parametrize_affine(m, zero_vector(m.rows()));
  return Subspace::span(m.cols(), p->directions);
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  auto p = parametrize_affine(a, b);
  if (!p) return std::nullopt;
  return AffineSolution{p->particular, Subspace::span(a.cols(), p->directions)};
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto res = rref(aug);
  if (res.rank < n || res.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.reduced(i, n + j);
  return inv;
}

}  // namespace postlie::exact

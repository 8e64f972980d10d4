#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "postlie/exact/rational.hpp"

namespace postlie::exact {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
std::string to_string(const Vector& v);

/// Dense row-major matrix of exact rationals.
///
/// Linear maps on a Lie algebra follow the column convention used in the
/// tables: column j holds the coordinates of the image of e_j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_row_vectors(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return data_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector col(std::size_t c) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Vector apply(const Vector& v) const;
  /// Entries flattened row-major, as a coordinate vector of matrix space.
  [[nodiscard]] const Vector& flatten() const { return data_; }
  static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// Rows rendered as "[a, b; c, d]".
  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned k);

}  // namespace postlie::exact

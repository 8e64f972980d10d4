#pragma once

#include <cstddef>
#include <vector>

#include "postlie/lie/algebra.hpp"

namespace postlie::product {

using exact::Rational;
using lie::LieAlgebra;

/// Defect of one identity on a basis triple (k unused for two-argument
/// identities).
template <class T>
struct Residual {
  std::size_t i, j, k;
  std::vector<T> defect;
};

/// Coefficients a[(i*n + j)*n + k] of e_i . e_j, over any ring T providing
/// +, -, T*T, Rational*T and is_zero().
template <class T>
class Coefficients {
 public:
  Coefficients(std::size_t dim, std::vector<T> a) : dim_(dim), a_(std::move(a)) {}
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const T& at(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * dim_ + j) * dim_ + k]; }
  [[nodiscard]] const std::vector<T>& raw() const { return a_; }

 private:
  std::size_t dim_;
  std::vector<T> a_;
};

namespace detail {

template <class T>
bool all_zero(const std::vector<T>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// x.y - y.x - ([x,y] - {x,y}) on pairs i < j.
std::vector<Residual<Rational>> axiom_skew(const LieAlgebra& g, const LieAlgebra& n, const Coefficients<Rational>& a);

/// [x,y].z - x.(y.z) + y.(x.z) on i < j, all k.
template <class T>
std::vector<Residual<T>> axiom_representation(const LieAlgebra& g, const Coefficients<T>& a, const T& zero) {
  std::vector<Residual<T>> out;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<T> r(d, zero);
        for (std::size_t m = 0; m < d; ++m) {
          T acc = zero;
          for (std::size_t l = 0; l < d; ++l) {
            const Rational& c = g.constant(i, j, l);
            if (!c.is_zero() && !a.at(l, k, m).is_zero()) acc = acc + c * a.at(l, k, m);
            if (!a.at(j, k, l).is_zero() && !a.at(i, l, m).is_zero()) acc = acc - a.at(j, k, l) * a.at(i, l, m);
            if (!a.at(i, k, l).is_zero() && !a.at(j, l, m).is_zero()) acc = acc + a.at(i, k, l) * a.at(j, l, m);
          }
          r[m] = std::move(acc);
        }
        if (!detail::all_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
    }
  }
  return out;
}

/// x.{y,z} - {x.y,z} - {y,x.z} on all i, j < k (the bracket is n's).
template <class T>
std::vector<Residual<T>> axiom_derivation(const LieAlgebra& n, const Coefficients<T>& a, const T& zero) {
  std::vector<Residual<T>> out;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        std::vector<T> r(d, zero);
        for (std::size_t m = 0; m < d; ++m) {
          T acc = zero;
          for (std::size_t l = 0; l < d; ++l) {
            const Rational& b1 = n.constant(j, k, l);
            if (!b1.is_zero()) acc = acc + b1 * a.at(i, l, m);
            const Rational& b2 = n.constant(l, k, m);
            if (!b2.is_zero()) acc = acc - b2 * a.at(i, j, l);
            const Rational& b3 = n.constant(j, l, m);
            if (!b3.is_zero()) acc = acc - b3 * a.at(i, k, l);
          }
          r[m] = std::move(acc);
        }
        if (!detail::all_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
    }
  }
  return out;
}

/// x.y - y.x on pairs i < j.
template <class T>
std::vector<Residual<T>> axiom_symmetry(const Coefficients<T>& a, const T& zero) {
  std::vector<Residual<T>> out;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<T> r(d, zero);
      for (std::size_t m = 0; m < d; ++m) r[m] = a.at(i, j, m) - a.at(j, i, m);
      if (!detail::all_zero(r)) out.push_back({i, j, 0, std::move(r)});
    }
  }
  return out;
}

}  // namespace postlie::product

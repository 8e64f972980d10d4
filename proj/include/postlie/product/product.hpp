#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postlie/lie/algebra.hpp"
#include "postlie/poly/polynomial.hpp"
#include "postlie/product/axioms.hpp"

namespace postlie::product {

using exact::Matrix;
using exact::Subspace;
using exact::Vector;
using lie::PairOnSameSpace;

/// x . y = sum_k a(i,j,k) e_k on basis vectors.
class BilinearProduct {
 public:
  struct Entry {
    std::size_t i, j;
    Vector value;
  };

  BilinearProduct() = default;
  BilinearProduct(std::size_t dim, std::vector<Rational> a);
  static BilinearProduct zero(std::size_t dim);
  /// 0-based entries; unlisted pairs are zero.
  static BilinearProduct from_entries(std::size_t dim, const std::vector<Entry>& entries);
  /// From left multiplications: column j of L[i] is e_i . e_j.
  static BilinearProduct from_left_ops(const std::vector<Matrix>& ops);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Rational>& raw() const { return a_; }
  [[nodiscard]] const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * dim_ + j) * dim_ + k]; }
  [[nodiscard]] Vector mul(std::size_t i, std::size_t j) const;
  [[nodiscard]] Vector mul(const Vector& x, const Vector& y) const;
  [[nodiscard]] Matrix left(std::size_t i) const;
  [[nodiscard]] Matrix left(const Vector& x) const;
  [[nodiscard]] std::vector<Matrix> left_ops() const;
  [[nodiscard]] std::vector<Entry> entries() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Coefficients<Rational> coefficients() const { return {dim_, a_}; }
  /// Product transported along a basis change: q(Px, Py) = P p(x, y).
  [[nodiscard]] BilinearProduct transported(const Matrix& p) const;

  friend bool operator==(const BilinearProduct& a, const BilinearProduct& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> a_;
};

struct AxiomCheck {
  std::string name;  // identity label
  std::vector<Residual<Rational>> residuals;
  [[nodiscard]] bool pass() const { return residuals.empty(); }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  [[nodiscard]] bool pass() const;
};

/// Skew, representation and derivation identities for the pair (g, n).
AxiomReport verify_pair(const PairOnSameSpace& pair, const BilinearProduct& p);
/// Symmetry, representation and derivation identities with g = n.
AxiomReport verify_commutative(const LieAlgebra& g, const BilinearProduct& p);

struct LeftOpsReport {
  std::vector<Matrix> ops;
  std::vector<bool> in_der;  // L(e_i) is a derivation of n
  bool homomorphism = true;  // L([x,y]) = [L(x), L(y)] for g's bracket
  [[nodiscard]] bool pass() const;
};
LeftOpsReport left_ops(const PairOnSameSpace& pair, const BilinearProduct& p);

struct PhiReport {
  BilinearProduct product;
  bool linear_condition = false;    // {phi x, y} + {x, phi y} = [x,y] - {x,y}
  bool morphism_condition = false;  // phi [x,y] = {phi x, phi y}
  [[nodiscard]] bool pass() const { return linear_condition && morphism_condition; }
};
/// x.y = {phi x, y}. Throws InputError if n is not semisimple.
PhiReport phi_to_product(const Matrix& phi, const PairOnSameSpace& pair);

struct NilpotencyResult {
  bool nilpotent = true;
  std::optional<Vector> witness;  // some x with L(x) not nilpotent
  std::vector<poly::Polynomial> traces;  // tr L(x)^m, m = 1..dim, in x_1..x_dim
};
/// Exact symbolic test that every L(x) is nilpotent.
NilpotencyResult all_left_nilpotent(const BilinearProduct& p);

/// Symbolic traces for a product whose coefficients are polynomials in
/// `nparams` family parameters. The returned polynomials live in nparams +
/// dim variables (parameters first); all vanish iff every member of the
/// family has only nilpotent left multiplications.
std::vector<poly::Polynomial> left_power_traces(std::size_t dim, const std::vector<poly::Polynomial>& a,
                                                std::size_t nparams);

/// span(g . g) inside the Killing radical of g.
bool image_in_radical(const LieAlgebra& g, const BilinearProduct& p);

Subspace image_span(const BilinearProduct& p);
Subspace annihilator(const BilinearProduct& p);

/// Isomorphism invariants of a structure.
struct Fingerprint {
  std::size_t image_dim = 0;
  std::size_t annihilator_dim = 0;
  std::size_t left_map_rank = 0;
  std::size_t generic_left_rank = 0;
  std::size_t image_in_derived_dim = 0;
  bool all_left_nilpotent = true;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  [[nodiscard]] std::string str() const;
};
Fingerprint invariants(const LieAlgebra& g, const BilinearProduct& p);

}  // namespace postlie::product

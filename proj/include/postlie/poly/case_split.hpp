#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "postlie/poly/groebner.hpp"

namespace postlie::poly {

/// var = numerator / denominator; the denominator is nonzero on the component.
struct Substitution {
  std::size_t var = 0;
  Polynomial numerator;
  Polynomial denominator;
};

struct RationalFunction {
  Polynomial num;
  Polynomial den;
  [[nodiscard]] bool is_polynomial() const { return den.is_constant(); }
  /// num/den as a polynomial; requires a constant denominator.
  [[nodiscard]] Polynomial as_polynomial() const;
  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
};

struct CaseComponent {
  std::size_t nvars = 0;
  std::vector<Substitution> substitutions;  // in the order they were made
  std::vector<Polynomial> residual;         // reduced GB in the free variables
  std::vector<Polynomial> nonvanishing;
  bool resolved = false;  // residual empty; every free variable is a parameter

  [[nodiscard]] std::vector<std::size_t> free_vars() const;
  [[nodiscard]] bool is_substituted(std::size_t var) const;
  /// Full point from values of the free variables, or nullopt when a
  /// nonvanishing condition fails or a residual polynomial does not vanish.
  [[nodiscard]] std::optional<std::vector<Rational>> point(std::span<const Rational> free_values) const;
  /// Every variable as a rational function of the free variables.
  [[nodiscard]] std::vector<RationalFunction> parametric() const;
  /// Generators of an ideal whose variety contains the component.
  [[nodiscard]] std::vector<Polynomial> closure_generators() const;
};

/// Bounded case analysis of V(I): saturate by the current nonvanishing list,
/// eliminate variables through x^k and solvable linear elements, then branch
/// x = 0 / x != 0. Components come out in depth-first order, zero branch first.
std::vector<CaseComponent> case_split(const Ideal& ideal, std::size_t depth, Budget& budget);

/// The fixed sample values 0, 1, -1, 2, 1/2.
const std::vector<Rational>& sample_sequence();

/// Up to `count` distinct valid points on the component, taken from the
/// deterministic sample schedule.
std::vector<std::vector<Rational>> sample_points(const CaseComponent& c, std::size_t count);

/// Checks that V(I) is covered by the components: every generator of the
/// intersection of the closure ideals lies in the radical of I.
bool covers(const Ideal& ideal, const std::vector<CaseComponent>& components, Budget& budget);

/// Checks that every generator of I vanishes on each component (symbolically
/// modulo its residual).
bool sound(const Ideal& ideal, const std::vector<CaseComponent>& components, Budget& budget);

}  // namespace postlie::poly

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postlie/poly/case_split.hpp"
#include "postlie/product/product.hpp"
#include "postlie/solver/system.hpp"

namespace postlie::solver {

using product::BilinearProduct;

struct SolveOptions {
  TermOrder order{};
  std::size_t split_depth = 6;
  std::size_t budget = poly::kDefaultBudget;
  bool search_identifications = true;
  std::size_t samples = 5;
};

enum class Status { Witness, Families, Empty, Inconclusive };
const char* to_string(Status s);

/// One case-split component read as a parametrized product.
struct SolutionFamily {
  std::vector<std::string> params;
  std::vector<std::size_t> param_vars;  // indices in the reduced ring
  std::vector<poly::RationalFunction> product;
  std::vector<poly::RationalFunction> phi;
  std::vector<Polynomial> constraints;
  std::vector<Polynomial> nonvanishing;
  bool resolved = false;
  std::vector<std::vector<Rational>> samples;  // points of the reduced ring
  std::vector<BilinearProduct> sample_products;
  bool verified = false;
  poly::CaseComponent component;

  [[nodiscard]] BilinearProduct product_at(const std::vector<Rational>& point) const;
  [[nodiscard]] Matrix phi_at(const std::vector<Rational>& point) const;
  /// Coefficients as polynomials when no denominator is left.
  [[nodiscard]] std::optional<std::vector<Polynomial>> polynomial_product() const;
};

struct SolveReport {
  Mode mode = Mode::General;
  Status status = Status::Inconclusive;
  std::size_t unknowns = 0;
  std::size_t kernel_params = 0;
  System reduced;  // after the linear and reduce stages
  std::size_t collapsed_powers = 0;
  std::vector<std::string> certificate;
  std::vector<SolutionFamily> families;
  std::optional<BilinearProduct> witness;
  std::optional<Matrix> witness_phi;
  std::vector<std::size_t> identification;  // V's basis vector a is g's e_{identification[a]}
  std::size_t budget_used = 0;
  std::string note;
};

/// Full pipeline on a prepared system: linear stage, reduce stage, case split,
/// sampling and verification of every family.
SolveReport solve(const System& sys, const PairOnSameSpace& pair, const SolveOptions& opt);

/// phi form when n is semisimple, the general product system otherwise. If
/// the variety is empty and `search_identifications` is set (dim <= 4), other
/// identifications of g's basis with V are tried in lexicographic order.
SolveReport solve_pair(const PairOnSameSpace& pair, const SolveOptions& opt);
SolveReport solve_commutative(const LieAlgebra& g, const SolveOptions& opt);

/// Recompute the Groebner basis of the unreduced system and check that it
/// contains 1.
bool recheck_empty(const System& original, TermOrder order, Budget& budget);

}  // namespace postlie::solver

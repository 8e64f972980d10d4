#pragma once

#include <string>
#include <vector>

#include "postlie/lie/algebra.hpp"

namespace postlie::lie {

struct CatalogEntry {
  std::string name;
  std::size_t nparams;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Built-in algebras. Parameterized names take their parameter either in
/// `params` or inline, e.g. "r3_diag(1)", "abelian(3)", "sl2_ltimes_V(2)".
/// Throws InputError on unknown names or invalid parameters.
LieAlgebra catalog(const std::string& name, const std::vector<Rational>& params = {});

/// Every entry instantiated at a representative parameter, for integrity checks.
std::vector<std::pair<std::string, LieAlgebra>> catalog_samples();

/// V(m): sl2 acting on binary forms of degree m - 1, basis v_0 .. v_{m-1}.
Representation sl2_module(std::size_t m);

}  // namespace postlie::lie

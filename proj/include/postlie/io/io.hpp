#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "postlie/deriv/derivations.hpp"
#include "postlie/lie/algebra.hpp"
#include "postlie/product/product.hpp"
#include "postlie/solver/classify.hpp"
#include "postlie/solver/solve.hpp"

namespace postlie::io {

using Json = nlohmann::ordered_json;
using exact::Matrix;
using exact::Rational;
using lie::LieAlgebra;
using product::BilinearProduct;

/// 64-bit FNV-1a, as 16 hex digits.
std::string digest(std::string_view bytes);

Json to_json(const Matrix& m);
Json to_json(const exact::Vector& v);

/// {"dim", "basis", "brackets": [{"i","j","coeffs": {"k": "p/q"}}]}, 1-based,
/// i < j, zero brackets omitted.
Json to_json(const LieAlgebra& g);
/// Throws InputError on malformed input, antisymmetry or Jacobi failure.
LieAlgebra algebra_from_json(const Json& j);

/// {"dim", "products": [{"i","j","coeffs"}]}, 1-based, any (i, j).
Json to_json(const BilinearProduct& p);
BilinearProduct product_from_json(const Json& j);

Json to_json(const product::AxiomReport& r);
Json to_json(const product::Fingerprint& f);
Json to_json(const solver::SolveReport& r);
Json to_json(const solver::IsoResult& r);
Json to_json(const solver::ClassificationResult& r);
Json to_json(const deriv::MatrixSpace& s, bool show_basis);

Json read_json_file(const std::string& path);

/// "catalog:NAME" (optionally "catalog:NAME(p)") or a JSON file path.
/// `params` fills a parameterized catalog name without inline arguments.
LieAlgebra resolve_algebra(const std::string& arg, const std::vector<Rational>& params = {});
/// "table:NAME" (e.g. "table:C2(1)") or a JSON product file.
BilinearProduct resolve_product(const std::string& arg);

}  // namespace postlie::io

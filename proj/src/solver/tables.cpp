#include "postlie/solver/tables.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "postlie/error.hpp"
#include "postlie/lie/catalog.hpp"

namespace postlie::solver {

namespace {

struct TableDef {
  std::string algebra;
  std::size_t dim;
  std::vector<std::string> params;
  std::vector<std::string> left;
};

// L(e_i) as displayed, rows ';' entries ','.
const std::map<std::string, TableDef>& defs() {
  static const std::map<std::string, TableDef> d = {
      {"A1", {"r2", 2, {}, {"0", "0"}}},
      {"A2", {"r2", 2, {}, {"0", "0,1;0,0"}}},
      {"A3", {"r2", 2, {}, {"0,-1;0,0", "-1,0;0,0"}}},
      // gamma/(2gamma-1) equals gamma wherever gamma^2 = gamma
      {"B", {"r3_jordan", 3, {"alpha", "beta", "gamma"},
             {"0,0,0;alpha,gamma,gamma;beta,0,gamma", "0,0,0;gamma,0,0;0,0,0", "0,0,0;gamma,0,0;gamma,0,0"}}},
      {"B1", {"r3_jordan", 3, {}, {"0", "0", "0"}}},
      {"B2", {"r3_jordan", 3, {}, {"0,0,0;1,0,0;0,0,0", "0", "0"}}},
      {"B3", {"r3_jordan", 3, {}, {"0,0,0;0,0,0;1,0,0", "0", "0"}}},
      {"B4", {"r3_jordan", 3, {}, {"0,0,0;0,1,1;0,0,1", "0,0,0;1,0,0;0,0,0", "0,0,0;1,0,0;1,0,0"}}},
      {"C1", {"heisenberg", 3, {}, {"0", "0", "0"}}},
      {"C2", {"heisenberg", 3, {"mu"}, {"0,0,0;1,0,0;0,mu,0", "0,0,0;0,0,0;mu,0,0", "0"}}},
      {"C3", {"heisenberg", 3, {}, {"0,0,0;0,0,0;1,0,0", "0", "0"}}},
      {"C4", {"heisenberg", 3, {}, {"0,0,0;0,0,0;1,0,0", "0,0,0;0,0,0;0,1,0", "0"}}},
      {"h1_family", {"heisenberg", 3, {"alpha", "beta", "gamma", "delta", "epsilon", "kappa", "lambda"},
                     {"alpha,delta,0;beta,-alpha,0;gamma,epsilon,0", "delta,kappa,0;-alpha,-delta,0;epsilon,lambda,0", "0"}}},
      {"h1_plus_C", {"h1_plus_C", 4, {}, {"0,0,0,0;0,0,0,0;0,0,0,0;1,0,0,1", "0", "0", "0,0,0,0;0,0,0,0;0,0,0,0;1,0,0,1"}}},
  };
  return d;
}

std::pair<std::string, std::vector<Rational>> split_spec(const std::string& spec) {
  const auto open = spec.find('(');
  if (open == std::string::npos) return {spec, {}};
  if (spec.back() != ')') throw InputError("malformed table reference: " + spec);
  std::vector<Rational> values;
  std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  std::size_t start = 0;
  while (start <= inner.size()) {
    const auto comma = inner.find(',', start);
    const std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      values.push_back(Rational::parse(tok));
    } catch (const std::exception&) {
      throw InputError("bad table parameter '" + tok + "' in " + spec);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {spec.substr(0, open), values};
}

const TableDef& def(const std::string& name) {
  const auto it = defs().find(name);
  if (it == defs().end()) throw InputError("unknown table '" + name + "'");
  return it->second;
}

}  // namespace

ProductFamily table(const std::string& spec) {
  const auto [name, values] = split_spec(spec);
  const TableDef& d = def(name);
  ProductFamily f = ProductFamily::from_left_text(name, d.dim, d.params, d.left);
  if (name == "B") f.constraints = b_family_conditions();
  if (name == "h1_family") f.constraints = h1_family_conditions();
  if (values.empty()) return f;
  if (values.size() != f.params.size()) throw InputError("table " + name + " takes " + std::to_string(f.params.size()) + " parameters");
  for (const auto& c : f.constraints) {
    if (!c.evaluate(values).is_zero()) throw InputError("parameters violate the constraints of table " + name);
  }
  return ProductFamily::single(spec, f.at(values));
}

std::vector<std::string> table_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : defs()) out.push_back(k);
  return out;
}

std::string table_algebra(const std::string& spec) { return def(split_spec(spec).first).algebra; }

std::vector<ProductFamily> class_representatives(const std::string& algebra) {
  std::vector<std::string> names;
  if (algebra == "r2") names = {"A1", "A2", "A3"};
  if (algebra == "r3_jordan") names = {"B1", "B2", "B3", "B4"};
  if (algebra == "heisenberg" || algebra == "h1" || algebra == "n3") names = {"C1", "C2", "C3", "C4"};
  if (names.empty()) throw InputError("no class table for " + algebra);
  std::vector<ProductFamily> out;
  for (const auto& n : names) out.push_back(table(n));
  return out;
}

std::vector<Polynomial> b_family_conditions() {
  const std::vector<std::string> v = {"alpha", "beta", "gamma"};
  return {poly::parse_polynomial("gamma^2 - gamma", v)};
}

std::vector<Polynomial> h1_family_conditions() {
  const std::vector<std::string> v = {"alpha", "beta", "gamma", "delta", "epsilon", "kappa", "lambda"};
  std::vector<Polynomial> out;
  for (const char* s : {"alpha*delta + beta*kappa", "alpha*kappa - delta^2", "alpha^2 + beta*delta",
                        "gamma*delta - 2*alpha*epsilon - beta*lambda", "alpha*lambda + gamma*kappa - 2*delta*epsilon"}) {
    out.push_back(poly::parse_polynomial(s, v));
  }
  return out;
}

AutGroupParam automorphisms(const std::string& algebra) {
  if (algebra == "r2") return AutGroupParam::from_text("r2", 2, {"a", "b"}, "a,b;0,1", "a");
  if (algebra == "r3_jordan") {
    return AutGroupParam::from_text("r3_jordan", 3, {"phi2", "phi3", "phi5", "phi8"}, "1,0,0;phi2,phi5,phi8;phi3,0,phi5",
                                    "phi5");
  }
  if (algebra == "heisenberg" || algebra == "h1" || algebra == "n3") {
    return AutGroupParam::from_text("heisenberg", 3, {"phi1", "phi2", "phi3", "phi4", "phi5", "phi6"},
                                    "phi1,phi4,0;phi2,phi5,0;phi3,phi6,phi1*phi5 - phi2*phi4",
                                    "phi1*phi5 - phi2*phi4");
  }
  throw InputError("no automorphism parametrization for " + algebra);
}

Sl3Example sl3_example() {
  // e1..e8 = E12, E13, E21, E23, E31, E32, E11-E22, E22-E33
  const LieAlgebra n = lie::catalog("sl3_chevalley").relabeled({2, 4, 5, 3, 7, 6, 0, 1});
  using B = std::tuple<std::size_t, std::size_t, std::vector<std::pair<std::size_t, Rational>>>;
  const std::vector<B> brackets = {
      {0, 3, {{1, Rational(1)}}},  {0, 6, {{0, Rational(-2)}}}, {0, 7, {{0, Rational(1)}}},
      {1, 5, {{0, Rational(1)}}},  {1, 6, {{1, Rational(-1)}}}, {1, 7, {{1, Rational(-1)}}},
      {3, 5, {{7, Rational(1)}}},  {3, 6, {{3, Rational(1)}}},  {3, 7, {{3, Rational(-2)}}},
      {5, 6, {{5, Rational(-1)}}}, {5, 7, {{5, Rational(2)}}},
  };
  std::vector<LieAlgebra::Bracket> entries;
  for (const auto& [i, j, c] : brackets) {
    exact::Vector v(8);
    for (const auto& [k, x] : c) v[k] = x;
    entries.push_back({i, j, v});
  }
  const LieAlgebra g = LieAlgebra::from_brackets(8, entries);
  auto e = [](std::size_t k, const Rational& c) {
    exact::Vector v(8);
    v[k] = c;
    return v;
  };
  exact::Vector e7e8(8);
  e7e8[6] = Rational(1);
  e7e8[7] = Rational(1);
  const BilinearProduct p = BilinearProduct::from_entries(
      8, {{2, 0, e(6, Rational(1))}, {2, 1, e(3, Rational(-1))}, {2, 5, e(4, Rational(1))}, {2, 6, e(2, Rational(-2))},
          {2, 7, e(2, Rational(1))}, {4, 0, e(5, Rational(-1))}, {4, 1, e7e8}, {4, 3, e(2, Rational(1))},
          {4, 6, e(4, Rational(-1))}, {4, 7, e(4, Rational(-1))}});
  Matrix phi(8, 8);
  phi(2, 2) = Rational(-1);
  phi(4, 4) = Rational(-1);
  return {g, n, p, phi};
}

}  // namespace postlie::solver

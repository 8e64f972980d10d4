#include "postlie/lie/catalog.hpp"

#include <algorithm>

#include "postlie/error.hpp"
#include "postlie/lie/semidirect.hpp"

namespace postlie::lie {

namespace {

Vector vec(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> entries) {
  Vector v(n, Rational(0));
  for (auto [k, c] : entries) v[k - 1] = Rational(c);
  return v;
}

// 1-based bracket list helper.
LieAlgebra build(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, Vector>> list,
                 std::vector<std::string> names = {}) {
  std::vector<LieAlgebra::Bracket> b;
  for (const auto& [i, j, v] : list) b.push_back({i - 1, j - 1, v});
  return LieAlgebra::from_brackets(n, b, std::move(names));
}

LieAlgebra make_sl2() {
  return build(3, {{1, 2, vec(3, {{3, 1}})}, {1, 3, vec(3, {{1, -2}})}, {2, 3, vec(3, {{2, 2}})}}, {"e", "f", "h"});
}

LieAlgebra make_sl3() {
  auto E = [](std::size_t i, std::size_t j) {
    Matrix m(3, 3);
    m(i - 1, j - 1) = Rational(1);
    return m;
  };
  std::vector<Matrix> basis{E(1, 1) - E(2, 2), E(2, 2) - E(3, 3), E(1, 2), E(2, 3), E(1, 3), E(2, 1), E(3, 2), E(3, 1)};
  return LieAlgebra::from_matrices(basis, {"h1", "h2", "x1", "x2", "x3", "y1", "y2", "y3"});
}

std::size_t positive_integer(const Rational& r, const std::string& what) {
  if (!r.is_integer() || r.sign() <= 0 || r > Rational(64)) throw InputError(what + " must be a positive integer (at most 64)");
  return static_cast<std::size_t>(r.value().get_num().get_ui());
}

// Split "name(p1,p2)" into name and parameters.
std::pair<std::string, std::vector<Rational>> split_inline(const std::string& spec) {
  const auto open = spec.find('(');
  if (open == std::string::npos) return {spec, {}};
  if (spec.back() != ')') throw InputError("malformed catalog name: " + spec);
  std::vector<Rational> params;
  std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  std::size_t start = 0;
  while (start <= inner.size()) {
    const auto comma = inner.find(',', start);
    const std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty()) throw InputError("empty catalog parameter in " + spec);
    try {
      params.push_back(Rational::parse(tok));
    } catch (const std::exception&) {
      throw InputError("invalid catalog parameter '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {spec.substr(0, open), params};
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"abelian", 1, "abelian Lie algebra C^n"},
      {"r2", 0, "[e1,e2]=e1"},
      {"r3_diag", 1, "[e1,e2]=e2, [e1,e3]=l*e3"},
      {"r3_jordan", 0, "[e1,e2]=e2, [e1,e3]=e2+e3"},
      {"heisenberg", 0, "[e1,e2]=e3 (alias n3, h1)"},
      {"f23", 0, "free 3-step nilpotent on 2 generators: [e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e5"},
      {"sl2", 0, "basis e,f,h: [e,f]=h, [e,h]=-2e, [f,h]=2f"},
      {"sl3_chevalley", 0, "basis h1,h2,x1=E12,x2=E23,x3=E13,y1=E21,y2=E32,y3=E31"},
      {"sl2_ltimes_V", 1, "sl2 x| V(m), basis e,f,h,v0..v(m-1)"},
      {"h1_plus_C", 0, "heisenberg + C: [e1,e2]=e3"},
  };
  return entries;
}

Representation sl2_module(std::size_t m) {
  if (m == 0) throw InputError("V(m) needs m >= 1");
  Matrix e(m, m);
  Matrix f(m, m);
  Matrix h(m, m);
  const long top = static_cast<long>(m) - 1;
  for (std::size_t j = 0; j < m; ++j) {
    const long jj = static_cast<long>(j);
    if (j > 0) e(j - 1, j) = Rational(jj);
    if (j + 1 < m) f(j + 1, j) = Rational(top - jj);
    h(j, j) = Rational(top - 2 * jj);
  }
  return {make_sl2(), {e, f, h}};
}

LieAlgebra catalog(const std::string& spec, const std::vector<Rational>& extra) {
  auto [name, params] = split_inline(spec);
  params.insert(params.end(), extra.begin(), extra.end());
  if (name == "n3" || name == "h1") name = "heisenberg";
  if (name.rfind("sl2_ltimes_V", 0) == 0 && name.size() > 12) {
    params.insert(params.begin(), Rational::parse(name.substr(12)));
    name = "sl2_ltimes_V";
  }
  const auto& entries = catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw InputError("unknown catalog algebra '" + name + "'");
  if (params.size() != it->nparams) {
    throw InputError("catalog algebra '" + name + "' takes " + std::to_string(it->nparams) + " parameter(s)");
  }

  if (name == "abelian") return LieAlgebra::abelian(positive_integer(params[0], "abelian dimension"));
  if (name == "r2") return build(2, {{1, 2, vec(2, {{1, 1}})}});
  if (name == "r3_diag") {
    Vector v(3, Rational(0));
    v[2] = params[0];
    return build(3, {{1, 2, vec(3, {{2, 1}})}, {1, 3, v}});
  }
  if (name == "r3_jordan") return build(3, {{1, 2, vec(3, {{2, 1}})}, {1, 3, vec(3, {{2, 1}, {3, 1}})}});
  if (name == "heisenberg") return build(3, {{1, 2, vec(3, {{3, 1}})}});
  if (name == "f23") {
    return build(5, {{1, 2, vec(5, {{3, 1}})}, {1, 3, vec(5, {{4, 1}})}, {2, 3, vec(5, {{5, 1}})}});
  }
  if (name == "sl2") return make_sl2();
  if (name == "sl3_chevalley") return make_sl3();
  if (name == "h1_plus_C") return build(4, {{1, 2, vec(4, {{3, 1}})}});
  // sl2_ltimes_V
  const std::size_t m = positive_integer(params[0], "module dimension m");
  const Representation v = sl2_module(m);
  std::vector<std::string> vnames;
  for (std::size_t j = 0; j < m; ++j) vnames.push_back("v" + std::to_string(j));
  const LieAlgebra a(m, std::vector<Rational>(m * m * m, Rational(0)), vnames);
  const auto split = semidirect(a, make_sl2(), v);
  std::vector<std::size_t> perm{m, m + 1, m + 2};
  for (std::size_t j = 0; j < m; ++j) perm.push_back(j);
  return split.algebra.relabeled(perm);
}

std::vector<std::pair<std::string, LieAlgebra>> catalog_samples() {
  std::vector<std::pair<std::string, LieAlgebra>> out;
  for (const auto& name : {"abelian(1)", "abelian(2)", "abelian(3)", "r2", "r3_diag(1)", "r3_diag(-1)", "r3_diag(1/2)",
                           "r3_jordan", "heisenberg", "n3", "f23", "sl2", "sl3_chevalley", "sl2_ltimes_V(2)",
                           "sl2_ltimes_V(3)", "sl2_ltimes_V(4)", "h1_plus_C"}) {
    out.emplace_back(name, catalog(name));
  }
  return out;
}

}  // namespace postlie::lie

#include "postlie/solver/family.hpp"

#include <sstream>

#include "postlie/error.hpp"
#include "postlie/poly/groebner.hpp"

namespace postlie::solver {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

std::vector<Polynomial> parse_matrix_text(const std::string& text, std::size_t dim, const std::vector<std::string>& names) {
  std::vector<Polynomial> out(dim * dim, Polynomial(names.size()));
  if (text == "0") return out;
  const auto rows = split(text, ';');
  if (rows.size() != dim) throw InputError("matrix text has " + std::to_string(rows.size()) + " rows: " + text);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto cols = split(rows[r], ',');
    if (cols.size() != dim) throw InputError("matrix row has wrong length: " + rows[r]);
    for (std::size_t c = 0; c < dim; ++c) out[r * dim + c] = poly::parse_polynomial(cols[c], names);
  }
  return out;
}

ProductFamily ProductFamily::single(std::string name, const BilinearProduct& p) {
  ProductFamily f;
  f.name = std::move(name);
  f.dim = p.dim();
  for (const auto& x : p.raw()) f.a.push_back(Polynomial::constant(0, x));
  return f;
}

ProductFamily ProductFamily::from_left_text(std::string name, std::size_t dim, std::vector<std::string> params,
                                            const std::vector<std::string>& left) {
  if (left.size() != dim) throw InputError("need one left operator per basis vector");
  ProductFamily f;
  f.name = std::move(name);
  f.dim = dim;
  f.params = std::move(params);
  f.a.assign(dim * dim * dim, Polynomial(f.params.size()));
  for (std::size_t i = 0; i < dim; ++i) {
    const auto m = parse_matrix_text(left[i], dim, f.params);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) f.a[(i * dim + j) * dim + k] = m[k * dim + j];
    }
  }
  return f;
}

BilinearProduct ProductFamily::at(const std::vector<Rational>& values) const {
  if (values.size() != params.size()) throw InputError("family " + name + " needs " + std::to_string(params.size()) + " parameter values");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& p : a) out.push_back(p.evaluate(values));
  return {dim, std::move(out)};
}

AutGroupParam AutGroupParam::from_text(std::string algebra, std::size_t dim, std::vector<std::string> params,
                                       const std::string& matrix, const std::string& nonvanishing) {
  AutGroupParam g;
  g.algebra = std::move(algebra);
  g.dim = dim;
  g.params = std::move(params);
  g.entries = parse_matrix_text(matrix, dim, g.params);
  g.nonvanishing = poly::parse_polynomial(nonvanishing, g.params);
  return g;
}

Matrix AutGroupParam::at(const std::vector<Rational>& values) const {
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = entries[r * dim + c].evaluate(values);
  }
  return m;
}

namespace {

Polynomial det(const std::vector<Polynomial>& m, std::size_t n, std::size_t nvars) {
  if (n == 1) return m[0];
  Polynomial out(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].is_zero()) continue;
    std::vector<Polynomial> minor;
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) minor.push_back(m[r * n + k]);
      }
    }
    const Polynomial term = m[c] * det(minor, n - 1, nvars);
    if (c % 2) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out;
}

}  // namespace

bool validate_aut(const LieAlgebra& g, const AutGroupParam& aut) {
  const std::size_t n = g.dim();
  const std::size_t nv = aut.params.size();
  if (aut.dim != n) return false;
  auto P = [&](std::size_t r, std::size_t c) -> const Polynomial& { return aut.entries[r * n + c]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial lhs(nv);
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& c = g.constant(i, j, l);
          if (!c.is_zero()) lhs += c * P(k, l);
        }
        Polynomial rhs(nv);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            const Rational& c = g.constant(a, b, k);
            if (!c.is_zero()) rhs += c * (P(a, i) * P(b, j));
          }
        }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  // det vanishes exactly where the stated polynomial does: each divides a
  // power of the other, checked through radical membership both ways.
  const Polynomial d = det(aut.entries, n, nv);
  poly::Budget budget;
  const poly::Ideal by_det(nv, {d}, poly::TermOrder{poly::OrderKind::GrevLex, 0});
  const poly::Ideal by_nv(nv, {aut.nonvanishing}, poly::TermOrder{poly::OrderKind::GrevLex, 0});
  return poly::in_radical(by_det, aut.nonvanishing, budget) && poly::in_radical(by_nv, d, budget);
}

}  // namespace postlie::solver

#include "postlie/lie/semidirect.hpp"

#include "postlie/error.hpp"

namespace postlie::lie {

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d.apply(g.bracket(i, j));
      const Vector rhs = g.bracket(d.col(i), exact::unit_vector(n, j)) + g.bracket(exact::unit_vector(n, i), d.col(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

SemidirectSplit semidirect(const LieAlgebra& r, const LieAlgebra& s, const Representation& phi) {
  if (!(phi.algebra() == s) || phi.module_dim() != r.dim()) throw InputError("action does not match the algebras");
  for (std::size_t x = 0; x < s.dim(); ++x) {
    if (!is_derivation(r, phi.act(x))) {
      throw InputError("phi(" + s.names()[x] + ") is not a derivation of the ideal");
    }
  }
  const std::size_t a = r.dim();
  const std::size_t n = a + s.dim();
  std::vector<Rational> c(n * n * n, Rational(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    c[(i * n + j) * n + k] = v;
    c[(j * n + i) * n + k] = -v;
  };
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) {
      for (std::size_t k = 0; k < a; ++k) set(i, j, k, r.constant(i, j, k));
    }
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      for (std::size_t k = 0; k < s.dim(); ++k) set(a + i, a + j, a + k, s.constant(i, j, k));
    }
  }
  // [x, b] = phi(x) b for x in s, b in r.
  for (std::size_t x = 0; x < s.dim(); ++x) {
    for (std::size_t b = 0; b < a; ++b) {
      for (std::size_t k = 0; k < a; ++k) set(a + x, b, k, phi.act(x)(k, b));
    }
  }
  std::vector<std::string> names = r.names();
  names.insert(names.end(), s.names().begin(), s.names().end());
  return {LieAlgebra(n, std::move(c), std::move(names)), r, s, phi};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) c[(i * n + j) * n + k] = a.constant(i, j, k);
    }
  }
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) c[((o + i) * n + o + j) * n + o + k] = b.constant(i, j, k);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return {n, std::move(c), std::move(names)};
}

}  // namespace postlie::lie

#include "postlie/lie/structure.hpp"

#include "postlie/error.hpp"

namespace postlie::lie {

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) vs.push_back(g.bracket(x, y));
  }
  return Subspace::span(g.dim(), vs);
}

std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind) {
  const Subspace full = Subspace::full(g.dim());
  std::vector<Subspace> out{full};
  for (;;) {
    const Subspace& last = out.back();
    Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(g, full, last) : bracket_span(g, last, last);
    if (next == last) break;
    out.push_back(std::move(next));
    if (out.back().dim() == 0) break;
  }
  return out;
}

std::vector<std::size_t> series_dims(const LieAlgebra& g, SeriesKind kind) {
  std::vector<std::size_t> dims;
  for (const auto& s : series(g, kind)) dims.push_back(s.dim());
  return dims;
}

Subspace center(const LieAlgebra& g) {
  // x in the center iff ad(e_j) x = 0 for all j: stack the ad matrices.
  const std::size_t n = g.dim();
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix a = g.ad(j);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(j * n + r, c) = a(r, c);
    }
  }
  return exact::kernel_basis(m);
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  }
  return k;
}

Subspace killing_radical(const LieAlgebra& g) {
  const Subspace derived = bracket_span(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
  if (derived.dim() == 0) return Subspace::full(g.dim());
  const Matrix k = killing_form(g);
  std::vector<Vector> rows;
  for (const auto& y : derived.basis()) rows.push_back(k.apply(y));
  return exact::kernel_basis(Matrix::from_row_vectors(rows, g.dim()));
}

bool is_semisimple(const LieAlgebra& g) {
  return g.dim() > 0 && !exact::determinant(killing_form(g)).is_zero();
}

Predicates predicates(const LieAlgebra& g) {
  Predicates p;
  const auto lc = series(g, SeriesKind::LowerCentral);
  const auto der = series(g, SeriesKind::Derived);
  p.is_nilpotent = lc.back().dim() == 0;
  p.is_solvable = der.back().dim() == 0;
  p.is_perfect = der.size() == 1 || der[1].dim() == g.dim();
  p.is_semisimple = is_semisimple(g);
  p.is_unimodular = true;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!g.ad(i).trace().is_zero()) p.is_unimodular = false;
  }
  p.center_dim = center(g).dim();
  return p;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_span(g, s, s)); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::full(g.dim()), s));
}

LieAlgebra restrict(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) throw InputError("restriction to a subspace that is not a subalgebra");
  const std::size_t d = s.dim();
  std::vector<Rational> c(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector coords = s.coordinates(g.bracket(s.basis()[i], s.basis()[j]));
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = coords[k];
    }
  }
  return {d, std::move(c)};
}

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw InputError("quotient by a subspace that is not an ideal");
  const auto comp = ideal.complement_indices();
  const std::size_t d = comp.size();
  auto reduce = [&](Vector v) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Rational c = v[ideal.pivots()[r]];
      if (!c.is_zero()) v = v - c * ideal.basis()[r];
    }
    return v;
  };
  std::vector<Rational> c(d * d * d, Rational(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back(g.names()[comp[i]]);
    for (std::size_t j = 0; j < d; ++j) {
      const Vector v = reduce(g.bracket(comp[i], comp[j]));
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = v[comp[k]];
    }
  }
  return {d, std::move(c), std::move(names)};
}

}  // namespace postlie::lie

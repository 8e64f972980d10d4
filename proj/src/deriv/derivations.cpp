#include "postlie/deriv/derivations.hpp"

#include "postlie/error.hpp"

namespace postlie::deriv {

namespace {

Vector append(Vector a, const Vector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vector append(Vector a, const Matrix& m) { return append(std::move(a), m.flatten()); }

// D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] for i < j, stacked.
Vector derivation_defect(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  Vector out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = exact::unit_vector(n, i);
      const Vector ej = exact::unit_vector(n, j);
      out = append(std::move(out), d.apply(g.bracket(i, j)) - g.bracket(d.col(i), ej) - g.bracket(ei, d.col(j)));
    }
  }
  return out;
}

MatrixSpace square_space(std::size_t n, Subspace s) { return {n, n, std::move(s)}; }

}  // namespace

std::vector<Matrix> MatrixSpace::basis() const {
  std::vector<Matrix> out;
  for (const auto& v : space.basis()) out.push_back(Matrix::unflatten(v, rows, cols));
  return out;
}

Subspace linear_kernel(std::size_t unknowns, const std::function<Vector(const Vector&)>& f) {
  std::vector<Vector> columns;
  std::size_t rows = 0;
  for (std::size_t u = 0; u < unknowns; ++u) {
    columns.push_back(f(exact::unit_vector(unknowns, u)));
    rows = columns.back().size();
  }
  if (rows == 0) return Subspace::full(unknowns);
  return exact::kernel_basis(Matrix::from_columns(columns, rows));
}

MatrixSpace derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  return square_space(n, linear_kernel(n * n, [&](const Vector& x) { return derivation_defect(g, Matrix::unflatten(x, n, n)); }));
}

MatrixSpace inner_derivations(const LieAlgebra& g) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < g.dim(); ++i) v.push_back(g.ad(i).flatten());
  return square_space(g.dim(), Subspace::span(g.dim() * g.dim(), v));
}

MatrixSpace derivations_into(const LieAlgebra& g, const Subspace& target) {
  const std::size_t n = g.dim();
  // Functionals vanishing on target.
  const Subspace ann = exact::kernel_basis(Matrix::from_row_vectors(target.basis(), n));
  return square_space(n, linear_kernel(n * n, [&](const Vector& x) {
    const Matrix d = Matrix::unflatten(x, n, n);
    Vector out = derivation_defect(g, d);
    for (const auto& w : ann.basis()) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t k = 0; k < n; ++k) s += w[k] * d(k, j);
        out.push_back(s);
      }
    }
    return out;
  }));
}

InnerOuter inner_and_outer(const LieAlgebra& g) {
  InnerOuter r;
  r.dim_der = derivations(g).dim();
  r.dim_inner = inner_derivations(g).dim();
  r.dim_H1 = r.dim_der - r.dim_inner;
  return r;
}

MatrixSpace d011(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  return square_space(n, linear_kernel(n * n, [&](const Vector& x) {
    const Matrix p = Matrix::unflatten(x, n, n);
    Vector out;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        out = append(std::move(out), g.bracket(p.col(i), exact::unit_vector(n, j)) + g.bracket(exact::unit_vector(n, i), p.col(j)));
      }
    }
    return out;
  }));
}

MatrixSpace intertwiners(const Representation& rho) {
  const std::size_t m = rho.module_dim();
  return square_space(m, linear_kernel(m * m, [&](const Vector& x) {
    const Matrix t = Matrix::unflatten(x, m, m);
    Vector out;
    for (const auto& a : rho.action()) out = append(std::move(out), t * a - a * t);
    return out;
  }));
}

Cohomology1 cohomology_H1(const Representation& rho) {
  const auto& s = rho.algebra();
  const std::size_t m = rho.module_dim();
  const std::size_t k = s.dim();
  Subspace z = linear_kernel(m * k, [&](const Vector& x) {
    const Matrix f = Matrix::unflatten(x, m, k);
    Vector out;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        out = append(std::move(out), f.apply(s.bracket(i, j)) - rho.act(i).apply(f.col(j)) + rho.act(j).apply(f.col(i)));
      }
    }
    return out;
  });
  std::vector<Vector> cob;
  for (std::size_t b = 0; b < m; ++b) {
    Matrix f(m, k);
    for (std::size_t x = 0; x < k; ++x) {
      const Vector col = Rational(-1) * rho.act(x).col(b);
      for (std::size_t r = 0; r < m; ++r) f(r, x) = col[r];
    }
    cob.push_back(f.flatten());
  }
  return {{m, k, std::move(z)}, {m, k, Subspace::span(m * k, cob)}};
}

Matrix assemble(const lie::SemidirectSplit& split, const Triple& t) {
  const std::size_t a = split.r_dim();
  const std::size_t n = a + split.s_dim();
  Matrix d(n, n);
  for (std::size_t r = 0; r < a; ++r) {
    for (std::size_t c = 0; c < a; ++c) d(r, c) = t.d1(r, c);
    for (std::size_t c = 0; c < split.s_dim(); ++c) d(r, a + c) = t.f(r, c);
  }
  for (std::size_t r = 0; r < split.s_dim(); ++r) {
    for (std::size_t c = 0; c < split.s_dim(); ++c) d(a + r, a + c) = t.d2(r, c);
  }
  return d;
}

Triple disassemble(const lie::SemidirectSplit& split, const Matrix& d) {
  const std::size_t a = split.r_dim();
  const std::size_t s = split.s_dim();
  Triple t{Matrix(a, a), Matrix(a, s), Matrix(s, s)};
  for (std::size_t r = 0; r < a; ++r) {
    for (std::size_t c = 0; c < a; ++c) t.d1(r, c) = d(r, c);
    for (std::size_t c = 0; c < s; ++c) t.f(r, c) = d(r, a + c);
  }
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) t.d2(r, c) = d(a + r, a + c);
  }
  return t;
}

namespace {

Vector cocycle_defect(const lie::SemidirectSplit& split, const Matrix& f) {
  Vector out;
  const auto& s = split.s;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      out = append(std::move(out),
                   f.apply(s.bracket(i, j)) - split.action.act(i).apply(f.col(j)) + split.action.act(j).apply(f.col(i)));
    }
  }
  return out;
}

Vector compatibility_defect(const lie::SemidirectSplit& split, const Triple& t) {
  Vector out;
  for (std::size_t x = 0; x < split.s_dim(); ++x) {
    const Matrix lhs = exact::commutator(t.d1, split.action.act(x));
    const Matrix rhs = split.r.ad(t.f.col(x)) + split.action.act(t.d2.col(x));
    out = append(std::move(out), lhs - rhs);
  }
  return out;
}

}  // namespace

TripleReport verify_triple(const lie::SemidirectSplit& split, const Triple& t) {
  const std::size_t a = split.r_dim();
  const std::size_t s = split.s_dim();
  if (t.d1.rows() != a || t.d1.cols() != a || t.f.rows() != a || t.f.cols() != s || t.d2.rows() != s || t.d2.cols() != s) {
    throw InputError("triple shapes do not match the semidirect decomposition");
  }
  TripleReport rep;
  rep.a = exact::is_zero(derivation_defect(split.r, t.d1));
  rep.b = exact::is_zero(derivation_defect(split.s, t.d2));
  rep.c = exact::is_zero(cocycle_defect(split, t.f));
  rep.d = exact::is_zero(compatibility_defect(split, t));
  rep.is_derivation = lie::is_derivation(split.algebra, assemble(split, t));
  return rep;
}

MatrixSpace triple_space(const lie::SemidirectSplit& split, bool d2_zero) {
  const std::size_t a = split.r_dim();
  const std::size_t s = split.s_dim();
  const std::size_t n = a + s;
  const std::size_t unknowns = a * a + a * s + (d2_zero ? 0 : s * s);
  auto unpack = [&](const Vector& x) {
    auto block = [&](std::size_t from, std::size_t rows, std::size_t cols) {
      return Matrix(rows, cols, Vector(x.begin() + static_cast<long>(from), x.begin() + static_cast<long>(from + rows * cols)));
    };
    return Triple{block(0, a, a), block(a * a, a, s), d2_zero ? Matrix(s, s) : block(a * a + a * s, s, s)};
  };
  const Subspace k = linear_kernel(unknowns, [&](const Vector& x) {
    const Triple t = unpack(x);
    Vector out = derivation_defect(split.r, t.d1);
    out = append(std::move(out), derivation_defect(split.s, t.d2));
    out = append(std::move(out), cocycle_defect(split, t.f));
    return append(std::move(out), compatibility_defect(split, t));
  });
  std::vector<Vector> mats;
  for (const auto& v : k.basis()) mats.push_back(assemble(split, unpack(v)).flatten());
  return {n, n, Subspace::span(n * n, mats)};
}

std::size_t inner_intertwiner_dim(const lie::SemidirectSplit& split) {
  const std::size_t a = split.r_dim();
  const std::size_t s = split.s_dim();
  const auto comm = intertwiners(split.action);
  std::vector<Vector> embedded;
  for (const auto& d : comm.basis()) embedded.push_back(assemble(split, {d, Matrix(a, s), Matrix(s, s)}).flatten());
  const std::size_t n = a + s;
  const Subspace e = Subspace::span(n * n, embedded);
  return exact::intersection(e, inner_derivations(split.algebra).space).dim();
}

}  // namespace postlie::deriv

#include "postlie/lie/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "postlie/error.hpp"

namespace postlie::lie {

namespace {

std::vector<std::string> default_basis_names(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

Vector bracket_raw(std::size_t dim, const std::vector<Rational>& c, const Vector& x, const Vector& y) {
  Vector out(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational& v = c[(i * dim + j) * dim + k];
        if (!v.is_zero()) out[k] += s * v;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<JacobiViolation> jacobi_defect(std::size_t dim, const std::vector<Rational>& c) {
  std::vector<JacobiViolation> out;
  auto e = [&](std::size_t i) { return exact::unit_vector(dim, i); };
  auto br = [&](const Vector& x, const Vector& y) { return bracket_raw(dim, c, x, y); };
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vector s = br(e(i), br(e(j), e(k))) + br(e(j), br(e(k), e(i))) + br(e(k), br(e(i), e(j)));
        if (!exact::is_zero(s)) out.push_back({i, j, k, std::move(s)});
      }
    }
  }
  return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> constants, std::vector<std::string> names)
    : dim_(dim), c_(std::move(constants)), names_(std::move(names)) {
  if (c_.size() != dim_ * dim_ * dim_) throw InputError("structure constants have the wrong length");
  if (names_.empty()) names_ = default_basis_names(dim_);
  if (names_.size() != dim_) throw InputError("basis name count differs from the dimension");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (constant(i, j, k) != -constant(j, i, k)) {
          throw InputError("bracket is not antisymmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
      }
    }
  }
  const auto bad = jacobi_defect(dim_, c_);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "Jacobi identity fails on (" << bad[0].i + 1 << "," << bad[0].j + 1 << "," << bad[0].k + 1 << "): "
       << exact::to_string(bad[0].defect);
    throw InputError(os.str());
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return {dim, std::vector<Rational>(dim * dim * dim, Rational(0))}; }

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<Bracket>& brackets, std::vector<std::string> names) {
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim || b.value.size() != dim) throw InputError("bracket index out of range");
    if (b.i >= b.j) throw InputError("brackets must be given with i < j");
    for (std::size_t k = 0; k < dim; ++k) {
      c[(b.i * dim + b.j) * dim + k] = b.value[k];
      c[(b.j * dim + b.i) * dim + k] = -b.value[k];
    }
  }
  return {dim, std::move(c), std::move(names)};
}

LieAlgebra LieAlgebra::from_matrices(const std::vector<Matrix>& basis, std::vector<std::string> names) {
  const std::size_t dim = basis.size();
  std::vector<Vector> flat;
  for (const auto& m : basis) flat.push_back(m.flatten());
  // Coordinates via the column system [vec(b_1) ... vec(b_n)] x = vec(m).
  const Matrix a = Matrix::from_columns(flat, flat.empty() ? 0 : flat[0].size());
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto sol = exact::solve_affine(a, exact::commutator(basis[i], basis[j]).flatten());
      if (!sol || sol->homogeneous.dim() != 0) throw InputError("matrix basis is not closed or not independent");
      for (std::size_t k = 0; k < dim; ++k) c[(i * dim + j) * dim + k] = sol->particular[k];
    }
  }
  return {dim, std::move(c), std::move(names)};
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  return {c_.begin() + static_cast<long>((i * dim_ + j) * dim_), c_.begin() + static_cast<long>((i * dim_ + j + 1) * dim_)};
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return bracket_raw(dim_, c_, x, y); }

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(i, j, k);
  }
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i].is_zero()) m += x[i] * ad(i);
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

LieAlgebra LieAlgebra::negated() const {
  std::vector<Rational> c = c_;
  for (auto& v : c) v = -v;
  return {dim_, std::move(c), names_};
}

LieAlgebra LieAlgebra::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dim_) throw InputError("permutation has the wrong size");
  std::vector<Rational> c(c_.size(), Rational(0));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < dim_; ++a) {
    names.push_back(names_[perm[a]]);
    for (std::size_t b = 0; b < dim_; ++b) {
      for (std::size_t d = 0; d < dim_; ++d) c[(a * dim_ + b) * dim_ + d] = constant(perm[a], perm[b], perm[d]);
    }
  }
  return {dim_, std::move(c), std::move(names)};
}

std::vector<LieAlgebra::Bracket> LieAlgebra::brackets() const {
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vector v = bracket(i, j);
      if (!exact::is_zero(v)) out.push_back({i, j, std::move(v)});
    }
  }
  return out;
}

Representation::Representation(LieAlgebra algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
  if (action_.size() != algebra_.dim()) throw InputError("representation needs one matrix per basis element");
  module_dim_ = action_.empty() ? 0 : action_[0].rows();
  for (const auto& m : action_) {
    if (m.rows() != module_dim_ || m.cols() != module_dim_) throw InputError("representation matrices must be square");
  }
  for (std::size_t i = 0; i < action_.size(); ++i) {
    for (std::size_t j = i + 1; j < action_.size(); ++j) {
      if (act(algebra_.bracket(i, j)) != exact::commutator(action_[i], action_[j])) {
        throw InputError("not a representation: rho([e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                         "]) differs from the commutator");
      }
    }
  }
}

Representation Representation::adjoint(const LieAlgebra& g) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < g.dim(); ++i) act.push_back(g.ad(i));
  return {g, std::move(act)};
}

Representation Representation::trivial(const LieAlgebra& s, std::size_t module_dim) {
  return {s, std::vector<Matrix>(s.dim(), Matrix(module_dim, module_dim))};
}

Representation Representation::direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw InputError("direct sum of modules over different algebras");
  const std::size_t n = a.module_dim() + b.module_dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < a.module_dim(); ++r) {
      for (std::size_t c = 0; c < a.module_dim(); ++c) m(r, c) = a.act(i)(r, c);
    }
    for (std::size_t r = 0; r < b.module_dim(); ++r) {
      for (std::size_t c = 0; c < b.module_dim(); ++c) m(a.module_dim() + r, a.module_dim() + c) = b.act(i)(r, c);
    }
    act.push_back(std::move(m));
  }
  return {a.algebra(), std::move(act)};
}

Matrix Representation::act(const Vector& x) const {
  Matrix m(module_dim_, module_dim_);
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (!x[i].is_zero()) m += x[i] * action_[i];
  }
  return m;
}

PairOnSameSpace::PairOnSameSpace(LieAlgebra g_, LieAlgebra n_) : g(std::move(g_)), n(std::move(n_)) {
  if (g.dim() != n.dim()) throw InputError("the two brackets live on spaces of different dimension");
}

}  // namespace postlie::lie

#include "postlie/product/product.hpp"

#include <algorithm>
#include <sstream>

#include "postlie/error.hpp"
#include "postlie/lie/semidirect.hpp"
#include "postlie/lie/structure.hpp"

namespace postlie::product {

using poly::Polynomial;

std::vector<Residual<Rational>> axiom_skew(const LieAlgebra& g, const LieAlgebra& n, const Coefficients<Rational>& a) {
  std::vector<Residual<Rational>> out;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Rational> r(d, Rational(0));
      for (std::size_t m = 0; m < d; ++m) {
        r[m] = a.at(i, j, m) - a.at(j, i, m) - (g.constant(i, j, m) - n.constant(i, j, m));
      }
      if (!exact::is_zero(r)) out.push_back({i, j, 0, std::move(r)});
    }
  }
  return out;
}

BilinearProduct::BilinearProduct(std::size_t dim, std::vector<Rational> a) : dim_(dim), a_(std::move(a)) {
  if (a_.size() != dim_ * dim_ * dim_) throw InputError("product coefficients have the wrong length");
}

BilinearProduct BilinearProduct::zero(std::size_t dim) { return {dim, std::vector<Rational>(dim * dim * dim, Rational(0))}; }

BilinearProduct BilinearProduct::from_entries(std::size_t dim, const std::vector<Entry>& entries) {
  std::vector<Rational> a(dim * dim * dim, Rational(0));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.value.size() != dim) throw InputError("product entry out of range");
    for (std::size_t k = 0; k < dim; ++k) a[(e.i * dim + e.j) * dim + k] = e.value[k];
  }
  return {dim, std::move(a)};
}

BilinearProduct BilinearProduct::from_left_ops(const std::vector<Matrix>& ops) {
  const std::size_t n = ops.size();
  std::vector<Rational> a(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (ops[i].rows() != n || ops[i].cols() != n) throw InputError("left multiplication matrix has the wrong shape");
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) a[(i * n + j) * n + k] = ops[i](k, j);
    }
  }
  return {n, std::move(a)};
}

Vector BilinearProduct::mul(std::size_t i, std::size_t j) const {
  const auto b = a_.begin() + static_cast<long>((i * dim_ + j) * dim_);
  return {b, b + static_cast<long>(dim_)};
}

Vector BilinearProduct::mul(const Vector& x, const Vector& y) const {
  Vector out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!at(i, j, k).is_zero()) out[k] += s * at(i, j, k);
      }
    }
  }
  return out;
}

Matrix BilinearProduct::left(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = at(i, j, k);
  }
  return m;
}

Matrix BilinearProduct::left(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i].is_zero()) m += x[i] * left(i);
  }
  return m;
}

std::vector<Matrix> BilinearProduct::left_ops() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(left(i));
  return out;
}

std::vector<BilinearProduct::Entry> BilinearProduct::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Vector v = mul(i, j);
      if (!exact::is_zero(v)) out.push_back({i, j, std::move(v)});
    }
  }
  return out;
}

bool BilinearProduct::is_zero() const { return exact::is_zero(a_); }

BilinearProduct BilinearProduct::transported(const Matrix& p) const {
  const auto inv = exact::inverse(p);
  if (!inv) throw InputError("basis change is not invertible");
  std::vector<Rational> a(a_.size(), Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector v = p.apply(mul(inv->col(i), inv->col(j)));
      for (std::size_t k = 0; k < dim_; ++k) a[(i * dim_ + j) * dim_ + k] = v[k];
    }
  }
  return {dim_, std::move(a)};
}

bool AxiomReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass(); });
}

AxiomReport verify_pair(const PairOnSameSpace& pair, const BilinearProduct& p) {
  if (p.dim() != pair.dim()) throw InputError("product and algebras have different dimensions");
  const auto a = p.coefficients();
  const Rational zero(0);
  return {{{"x.y - y.x = [x,y] - {x,y}", axiom_skew(pair.g, pair.n, a)},
           {"[x,y].z = x.(y.z) - y.(x.z)", axiom_representation(pair.g, a, zero)},
           {"x.{y,z} = {x.y,z} + {y,x.z}", axiom_derivation(pair.n, a, zero)}}};
}

AxiomReport verify_commutative(const LieAlgebra& g, const BilinearProduct& p) {
  if (p.dim() != g.dim()) throw InputError("product and algebra have different dimensions");
  const auto a = p.coefficients();
  const Rational zero(0);
  return {{{"x.y = y.x", axiom_symmetry(a, zero)},
           {"[x,y].z = x.(y.z) - y.(x.z)", axiom_representation(g, a, zero)},
           {"x.[y,z] = [x.y,z] + [y,x.z]", axiom_derivation(g, a, zero)}}};
}

bool LeftOpsReport::pass() const {
  return homomorphism && std::all_of(in_der.begin(), in_der.end(), [](bool b) { return b; });
}

LeftOpsReport left_ops(const PairOnSameSpace& pair, const BilinearProduct& p) {
  LeftOpsReport r;
  r.ops = p.left_ops();
  for (const auto& m : r.ops) r.in_der.push_back(lie::is_derivation(pair.n, m));
  for (std::size_t i = 0; i < p.dim() && r.homomorphism; ++i) {
    for (std::size_t j = i + 1; j < p.dim(); ++j) {
      if (p.left(pair.g.bracket(i, j)) != exact::commutator(r.ops[i], r.ops[j])) {
        r.homomorphism = false;
        break;
      }
    }
  }
  return r;
}

PhiReport phi_to_product(const Matrix& phi, const PairOnSameSpace& pair) {
  if (!lie::is_semisimple(pair.n)) throw InputError("phi form needs a semisimple second bracket");
  const std::size_t d = pair.dim();
  if (phi.rows() != d || phi.cols() != d) throw InputError("phi has the wrong shape");
  std::vector<Rational> a(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector v = pair.n.bracket(phi.col(i), exact::unit_vector(d, j));
      for (std::size_t k = 0; k < d; ++k) a[(i * d + j) * d + k] = v[k];
    }
  }
  PhiReport r{BilinearProduct(d, std::move(a)), true, true};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Vector ei = exact::unit_vector(d, i);
      const Vector ej = exact::unit_vector(d, j);
      const Vector lhs = pair.n.bracket(phi.col(i), ej) + pair.n.bracket(ei, phi.col(j));
      if (lhs != pair.g.bracket(i, j) - pair.n.bracket(i, j)) r.linear_condition = false;
      if (phi.apply(pair.g.bracket(i, j)) != pair.n.bracket(phi.col(i), phi.col(j))) r.morphism_condition = false;
    }
  }
  return r;
}

namespace {

using PolyMatrix = std::vector<Polynomial>;  // row-major

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t n, std::size_t nvars) {
  PolyMatrix c(n * n, Polynomial(nvars));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Polynomial& x = a[i * n + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k * n + j].is_zero()) c[i * n + j] += x * b[k * n + j];
      }
    }
  }
  return c;
}

Polynomial trace(const PolyMatrix& m, std::size_t n, std::size_t nvars) {
  Polynomial t(nvars);
  for (std::size_t i = 0; i < n; ++i) t += m[i * n + i];
  return t;
}

std::vector<Polynomial> power_traces(const PolyMatrix& l, std::size_t n, std::size_t nvars) {
  std::vector<Polynomial> out;
  PolyMatrix p = l;
  for (std::size_t m = 1; m <= n; ++m) {
    out.push_back(trace(p, n, nvars));
    if (m < n) p = multiply(p, l, n, nvars);
  }
  return out;
}

// L(x) for x = sum x_i e_i with x_i the variables offset..offset+n-1.
PolyMatrix symbolic_left(std::size_t n, const std::vector<Polynomial>& a, std::size_t nvars, std::size_t offset) {
  PolyMatrix l(n * n, Polynomial(nvars));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial xi = Polynomial::variable(nvars, offset + i);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Polynomial& c = a[(i * n + j) * n + k];
        if (!c.is_zero()) l[k * n + j] += c * xi;
      }
    }
  }
  return l;
}

// A rational point where f does not vanish (f nonzero), chosen variable by
// variable from 0, 1, -1, 2, -2, ...
std::vector<Rational> nonvanishing_point(Polynomial f) {
  const std::size_t n = f.nvars();
  std::vector<Rational> pt(n, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    for (long step = 0;; ++step) {
      const long val = step == 0 ? 0 : (step % 2 ? (step + 1) / 2 : -(step / 2));
      const Polynomial g = f.substitute(v, Polynomial::constant(n, Rational(val)));
      if (!g.is_zero()) {
        pt[v] = Rational(val);
        f = g;
        break;
      }
    }
  }
  return pt;
}

}  // namespace

NilpotencyResult all_left_nilpotent(const BilinearProduct& p) {
  const std::size_t n = p.dim();
  std::vector<Polynomial> a;
  a.reserve(p.raw().size());
  for (const auto& c : p.raw()) a.push_back(Polynomial::constant(n, c));
  NilpotencyResult r;
  r.traces = power_traces(symbolic_left(n, a, n, 0), n, n);
  for (const auto& t : r.traces) {
    if (t.is_zero()) continue;
    r.nilpotent = false;
    for (std::size_t i = 0; i < n && !r.witness; ++i) {
      const Vector e = exact::unit_vector(n, i);
      if (!t.evaluate(e).is_zero()) r.witness = e;
    }
    if (!r.witness) r.witness = nonvanishing_point(t);
    break;
  }
  return r;
}

std::vector<Polynomial> left_power_traces(std::size_t dim, const std::vector<Polynomial>& a, std::size_t nparams) {
  const std::size_t nvars = nparams + dim;
  std::vector<std::size_t> map(nparams);
  for (std::size_t i = 0; i < nparams; ++i) map[i] = i;
  std::vector<Polynomial> lifted;
  lifted.reserve(a.size());
  for (const auto& c : a) lifted.push_back(c.is_zero() ? Polynomial(nvars) : c.remap(nvars, map));
  return power_traces(symbolic_left(dim, lifted, nvars, nparams), dim, nvars);
}

Subspace image_span(const BilinearProduct& p) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = 0; j < p.dim(); ++j) v.push_back(p.mul(i, j));
  }
  return Subspace::span(p.dim(), v);
}

Subspace annihilator(const BilinearProduct& p) {
  const std::size_t n = p.dim();
  // x with x.e_j = 0 and e_j.x = 0 for all j.
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector r1(n, Rational(0));
      Vector r2(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) {
        r1[i] = p.at(i, j, k);
        r2[i] = p.at(j, i, k);
      }
      rows.push_back(std::move(r1));
      rows.push_back(std::move(r2));
    }
  }
  return exact::kernel_basis(Matrix::from_row_vectors(rows, n));
}

bool image_in_radical(const LieAlgebra& g, const BilinearProduct& p) {
  return lie::killing_radical(g).contains(image_span(p));
}

namespace {

Polynomial determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                       std::size_t n, std::size_t nvars) {
  if (rows.size() == 1) return m[rows[0] * n + cols[0]];
  Polynomial det(nvars);
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial& e = m[rows[0] * n + cols[c]];
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k != c) sub.push_back(cols[k]);
    }
    const Polynomial minor = e * determinant(m, rest, sub, n, nvars);
    if (c % 2) {
      det -= minor;
    } else {
      det += minor;
    }
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::size_t generic_rank(const BilinearProduct& p) {
  const std::size_t n = p.dim();
  // Lower bound from a few deterministic points.
  std::size_t lower = 0;
  const auto& seq = std::vector<long>{1, 2, -1, 3, 5};
  for (std::size_t s = 0; s < seq.size(); ++s) {
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Rational(seq[(s + i) % seq.size()] * static_cast<long>(i + 1) + static_cast<long>(s));
    lower = std::max(lower, exact::rank(p.left(x)));
  }
  if (lower == n) return n;
  // Upper bound: every (lower+1)-minor vanishes identically.
  std::vector<Polynomial> a;
  for (const auto& c : p.raw()) a.push_back(Polynomial::constant(n, c));
  const PolyMatrix l = symbolic_left(n, a, n, 0);
  for (std::size_t r = lower + 1; r <= n; ++r) {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> cur;
    subsets(n, r, 0, cur, sets);
    bool found = false;
    for (const auto& rs : sets) {
      for (const auto& cs : sets) {
        if (!determinant(l, rs, cs, n, n).is_zero()) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return r - 1;
  }
  return n;
}

}  // namespace

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "image " << image_dim << ", annihilator " << annihilator_dim << ", span L " << left_map_rank << ", generic rank L(x) "
     << generic_left_rank << ", image in [g,g] " << image_in_derived_dim << ", nilpotent L " << (all_left_nilpotent ? "yes" : "no");
  return os.str();
}

Fingerprint invariants(const LieAlgebra& g, const BilinearProduct& p) {
  Fingerprint f;
  const Subspace img = image_span(p);
  f.image_dim = img.dim();
  f.annihilator_dim = annihilator(p).dim();
  std::vector<Vector> ls;
  for (const auto& m : p.left_ops()) ls.push_back(m.flatten());
  f.left_map_rank = Subspace::span(p.dim() * p.dim(), ls).dim();
  f.generic_left_rank = generic_rank(p);
  const Subspace full = Subspace::full(g.dim());
  f.image_in_derived_dim = exact::intersection(img, lie::bracket_span(g, full, full)).dim();
  f.all_left_nilpotent = all_left_nilpotent(p).nilpotent;
  return f;
}

}  // namespace postlie::product

#include "postlie/solver/system.hpp"

#include "postlie/error.hpp"
#include "postlie/exact/linalg.hpp"
#include "postlie/lie/structure.hpp"
#include "postlie/product/axioms.hpp"

namespace postlie::solver {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::General:
      return "pair";
    case Mode::Phi:
      return "phi";
    case Mode::Commutative:
      return "commutative";
  }
  return "?";
}

poly::Ideal System::ideal(TermOrder order) const {
  std::vector<Polynomial> gens;
  for (const auto& p : linear) {
    if (!p.is_zero()) gens.push_back(p);
  }
  for (const auto& p : nonlinear) {
    if (!p.is_zero()) gens.push_back(p);
  }
  return {nvars(), std::move(gens), order, names};
}

namespace {

std::string sym_name(std::size_t i, std::size_t j, std::size_t k) {
  return "s" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k + 1);
}

void add_nonzero(std::vector<Polynomial>& out, const std::vector<product::Residual<Polynomial>>& res) {
  for (const auto& r : res) {
    for (const auto& p : r.defect) {
      if (!p.is_zero()) out.push_back(p);
    }
  }
}

// Unknown index of s_{ij}^k with i <= j.
std::vector<std::size_t> symmetric_index(std::size_t d) {
  std::vector<std::size_t> idx(d * d * d, 0);
  std::size_t u = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        idx[(i * d + j) * d + k] = u;
        idx[(j * d + i) * d + k] = u;
        ++u;
      }
    }
  }
  return idx;
}

std::vector<std::string> symmetric_names(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) names.push_back(sym_name(i, j, k));
    }
  }
  return names;
}

}  // namespace

System setup_general(const PairOnSameSpace& pair) {
  const std::size_t d = pair.dim();
  System sys;
  sys.mode = Mode::General;
  sys.dim = d;
  sys.names = symmetric_names(d);
  const std::size_t nv = sys.names.size();
  const auto idx = symmetric_index(d);
  const Rational half(1, 2);
  sys.product.assign(d * d * d, Polynomial(nv));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Rational skew = half * (pair.g.constant(i, j, k) - pair.n.constant(i, j, k));
        sys.product[(i * d + j) * d + k] =
            Polynomial::variable(nv, idx[(i * d + j) * d + k]) + Polynomial::constant(nv, skew);
      }
    }
  }
  const product::Coefficients<Polynomial> a(d, sys.product);
  const Polynomial zero(nv);
  add_nonzero(sys.linear, product::axiom_derivation(pair.n, a, zero));
  add_nonzero(sys.nonlinear, product::axiom_representation(pair.g, a, zero));
  return sys;
}

System setup_commutative(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  System sys;
  sys.mode = Mode::Commutative;
  sys.dim = d;
  sys.names = symmetric_names(d);
  const std::size_t nv = sys.names.size();
  const auto idx = symmetric_index(d);
  sys.product.assign(d * d * d, Polynomial(nv));
  for (std::size_t p = 0; p < d * d * d; ++p) sys.product[p] = Polynomial::variable(nv, idx[p]);
  const product::Coefficients<Polynomial> a(d, sys.product);
  const Polynomial zero(nv);
  add_nonzero(sys.linear, product::axiom_derivation(g, a, zero));
  add_nonzero(sys.nonlinear, product::axiom_representation(g, a, zero));
  return sys;
}

System setup_phi(const PairOnSameSpace& pair) {
  if (!lie::is_semisimple(pair.n)) throw InputError("phi form needs a semisimple second bracket");
  const std::size_t d = pair.dim();
  System sys;
  sys.mode = Mode::Phi;
  sys.dim = d;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) sys.names.push_back("p" + std::to_string(r + 1) + std::to_string(c + 1));
  }
  const std::size_t nv = sys.names.size();
  sys.phi.reserve(d * d);
  for (std::size_t u = 0; u < nv; ++u) sys.phi.push_back(Polynomial::variable(nv, u));
  auto phi_col = [&](std::size_t c) {
    std::vector<Polynomial> v;
    for (std::size_t r = 0; r < d; ++r) v.push_back(sys.phi[r * d + c]);
    return v;
  };
  // {u, e_j} and {u, v} for polynomial coordinate vectors.
  auto bracket_pe = [&](const std::vector<Polynomial>& u, std::size_t j) {
    std::vector<Polynomial> out(d, Polynomial(nv));
    for (std::size_t l = 0; l < d; ++l) {
      if (u[l].is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = pair.n.constant(l, j, k);
        if (!c.is_zero()) out[k] += c * u[l];
      }
    }
    return out;
  };
  auto bracket_pp = [&](const std::vector<Polynomial>& u, const std::vector<Polynomial>& v) {
    std::vector<Polynomial> out(d, Polynomial(nv));
    for (std::size_t l = 0; l < d; ++l) {
      if (u[l].is_zero()) continue;
      for (std::size_t m = 0; m < d; ++m) {
        if (v[m].is_zero()) continue;
        const Polynomial uv = u[l] * v[m];
        for (std::size_t k = 0; k < d; ++k) {
          const Rational& c = pair.n.constant(l, m, k);
          if (!c.is_zero()) out[k] += c * uv;
        }
      }
    }
    return out;
  };
  sys.product.assign(d * d * d, Polynomial(nv));
  for (std::size_t i = 0; i < d; ++i) {
    const auto col = phi_col(i);
    for (std::size_t j = 0; j < d; ++j) {
      const auto v = bracket_pe(col, j);
      for (std::size_t k = 0; k < d; ++k) sys.product[(i * d + j) * d + k] = v[k];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      // {phi e_i, e_j} + {e_i, phi e_j} - [e_i,e_j] + {e_i,e_j}
      const auto a = bracket_pe(phi_col(i), j);
      const auto b = bracket_pe(phi_col(j), i);
      for (std::size_t k = 0; k < d; ++k) {
        Polynomial p = a[k] - b[k] - Polynomial::constant(nv, pair.g.constant(i, j, k) - pair.n.constant(i, j, k));
        if (!p.is_zero()) sys.linear.push_back(std::move(p));
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      // phi [e_i,e_j] - {phi e_i, phi e_j}
      const auto rhs = bracket_pp(phi_col(i), phi_col(j));
      for (std::size_t k = 0; k < d; ++k) {
        Polynomial p(nv);
        for (std::size_t l = 0; l < d; ++l) {
          const Rational& c = pair.g.constant(i, j, l);
          if (!c.is_zero()) p += c * sys.phi[k * d + l];
        }
        p -= rhs[k];
        if (!p.is_zero()) sys.nonlinear.push_back(std::move(p));
      }
    }
  }
  return sys;
}

namespace {

// Substitute unknowns by polynomials in a new ring.
void rewrite(System& sys, const std::vector<Polynomial>& values, std::vector<std::string> names) {
  auto map = [&](std::vector<Polynomial>& v) {
    for (auto& p : v) p = p.compose(values);
  };
  map(sys.product);
  map(sys.phi);
  map(sys.linear);
  map(sys.nonlinear);
  sys.names = std::move(names);
  std::vector<Polynomial> kept;
  for (auto& p : sys.nonlinear) {
    if (!p.is_zero()) kept.push_back(std::move(p));
  }
  sys.nonlinear = std::move(kept);
}

std::size_t linear_var(const poly::Monomial& m) {
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v]) return v;
  }
  throw std::logic_error("constant monomial has no variable");
}

}  // namespace

bool linear_stage(System& sys) {
  const std::size_t nv = sys.nvars();
  std::vector<Polynomial> lin;
  std::vector<Polynomial> rest;
  for (const auto& p : sys.linear) {
    if (!p.is_zero()) lin.push_back(p);
  }
  for (const auto& p : sys.nonlinear) {
    if (p.total_degree() <= 1) {
      if (!p.is_zero()) lin.push_back(p);
    } else {
      rest.push_back(p);
    }
  }
  sys.nonlinear = std::move(rest);
  if (lin.empty()) {
    sys.linear.clear();
    return true;
  }
  Matrix a(lin.size(), nv);
  exact::Vector b(lin.size(), Rational(0));
  for (std::size_t r = 0; r < lin.size(); ++r) {
    if (lin[r].total_degree() > 1) throw std::logic_error("nonlinear polynomial in the linear stage");
    for (const auto& t : lin[r].terms()) {
      if (t.mono.is_one()) {
        b[r] = -t.coeff;
      } else {
        a(r, linear_var(t.mono)) = t.coeff;
      }
    }
  }
  const auto param = exact::parametrize_affine(a, b);
  if (!param) return false;
  const std::size_t nf = param->free_columns.size();
  std::vector<std::string> names;
  for (auto f : param->free_columns) names.push_back(sys.names[f]);
  std::vector<Polynomial> values;
  for (std::size_t u = 0; u < nv; ++u) {
    Polynomial v = Polynomial::constant(nf, param->particular[u]);
    for (std::size_t f = 0; f < nf; ++f) {
      const Rational& c = param->directions[f][u];
      if (!c.is_zero()) v += c * Polynomial::variable(nf, f);
    }
    values.push_back(std::move(v));
  }
  sys.linear.clear();
  rewrite(sys, values, std::move(names));
  return true;
}

Reduction reduce_stage(System& sys, TermOrder order, Budget& budget) {
  Reduction red;
  for (;;) {
    const poly::Ideal ideal(sys.nvars(), sys.nonlinear, order, sys.names);
    red.gb = poly::groebner(ideal, budget);
    if (red.gb.contains_one()) {
      red.empty = true;
      return red;
    }
    std::vector<Polynomial> lin;
    for (const auto& g : red.gb.polys()) {
      if (g.total_degree() <= 1) {
        lin.push_back(g);
        ++red.eliminated_linear;
      } else if (g.size() == 1 && g.variables().size() == 1) {
        lin.push_back(Polynomial::variable(sys.nvars(), g.variables().front()));
        ++red.collapsed_powers;
      }
    }
    if (lin.empty()) {
      sys.nonlinear = red.gb.polys();
      return red;
    }
    sys.nonlinear = red.gb.polys();
    sys.linear = std::move(lin);
    if (!linear_stage(sys)) {
      red.empty = true;
      return red;
    }
  }
}

}  // namespace postlie::solver

#include "postlie/solver/solve.hpp"

#include <algorithm>
#include <numeric>

#include "postlie/lie/structure.hpp"

namespace postlie::solver {

const char* to_string(Status s) {
  switch (s) {
    case Status::Witness:
      return "witness";
    case Status::Families:
      return "families";
    case Status::Empty:
      return "empty";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

BilinearProduct SolutionFamily::product_at(const std::vector<Rational>& point) const {
  const std::size_t n3 = product.size();
  std::size_t d = 0;
  while (d * d * d < n3) ++d;
  std::vector<Rational> a;
  a.reserve(n3);
  for (const auto& f : product) a.push_back(f.evaluate(point));
  return {d, std::move(a)};
}

Matrix SolutionFamily::phi_at(const std::vector<Rational>& point) const {
  std::size_t d = 0;
  while (d * d < phi.size()) ++d;
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = phi[r * d + c].evaluate(point);
  }
  return m;
}

std::optional<std::vector<Polynomial>> SolutionFamily::polynomial_product() const {
  std::vector<Polynomial> out;
  for (const auto& f : product) {
    if (!f.is_polynomial()) return std::nullopt;
    out.push_back(f.as_polynomial());
  }
  return out;
}

namespace {

std::vector<poly::RationalFunction> compose_all(const std::vector<Polynomial>& polys,
                                                const std::vector<poly::RationalFunction>& values) {
  std::vector<poly::RationalFunction> out;
  out.reserve(polys.size());
  const std::size_t n = values.size();
  for (const auto& p : polys) {
    if (p.is_constant() || p.is_zero()) {
      out.push_back({Polynomial::constant(n, p.constant_term()), Polynomial::constant(n, Rational(1))});
      continue;
    }
    // Common denominator over the substituted variables.
    Polynomial den = Polynomial::constant(n, Rational(1));
    for (auto v : p.variables()) den = den * values[v].den.pow(p.degree_in(v));
    Polynomial num(n);
    for (const auto& t : p.terms()) {
      Polynomial term = Polynomial::constant(n, t.coeff);
      for (auto v : p.variables()) {
        const unsigned e = t.mono[v];
        const unsigned deg = p.degree_in(v);
        if (e) term = term * values[v].num.pow(e);
        if (deg > e) term = term * values[v].den.pow(deg - e);
      }
      num += term;
    }
    if (den.is_constant()) {
      out.push_back({num * den.constant_term().inverse(), Polynomial::constant(n, Rational(1))});
    } else {
      out.push_back({num, den});
    }
  }
  return out;
}

bool verify_member(const System& sys, const PairOnSameSpace& pair, const BilinearProduct& p, const Matrix* phi) {
  if (sys.mode == Mode::Commutative) return product::verify_commutative(pair.g, p).pass();
  if (phi) {
    const auto rep = product::phi_to_product(*phi, pair);
    if (!rep.pass() || !(rep.product == p)) return false;
  }
  return product::verify_pair(pair, p).pass();
}

std::vector<std::string> strings(const std::vector<Polynomial>& polys, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.str(names));
  return out;
}

}  // namespace

SolveReport solve(const System& original, const PairOnSameSpace& pair, const SolveOptions& opt) {
  SolveReport rep;
  rep.mode = original.mode;
  rep.unknowns = original.nvars();
  rep.identification.resize(original.dim);
  std::iota(rep.identification.begin(), rep.identification.end(), 0);
  Budget budget(opt.budget);
  System sys = original;
  try {
    if (!linear_stage(sys)) {
      rep.status = Status::Empty;
      rep.certificate = {"1"};
      rep.note = "linear constraints are inconsistent";
      rep.reduced = sys;
      rep.budget_used = budget.used();
      return rep;
    }
    rep.kernel_params = sys.nvars();
    const Reduction red = reduce_stage(sys, opt.order, budget);
    rep.collapsed_powers = red.collapsed_powers;
    rep.reduced = sys;
    if (red.empty) {
      rep.status = Status::Empty;
      rep.certificate = strings(red.gb.polys(), sys.names);
      rep.budget_used = budget.used();
      return rep;
    }
    const poly::Ideal ideal(sys.nvars(), sys.nonlinear, opt.order, sys.names);
    const auto comps = poly::case_split(ideal, opt.split_depth, budget);
    for (const auto& c : comps) {
      SolutionFamily fam;
      fam.component = c;
      fam.resolved = c.resolved;
      fam.param_vars = c.free_vars();
      for (auto v : fam.param_vars) fam.params.push_back(sys.names[v]);
      const auto values = c.parametric();
      fam.product = compose_all(sys.product, values);
      if (!sys.phi.empty()) fam.phi = compose_all(sys.phi, values);
      fam.constraints = c.residual;
      fam.nonvanishing = c.nonvanishing;
      fam.samples = poly::sample_points(c, opt.samples);
      fam.verified = !fam.samples.empty();
      for (const auto& pt : fam.samples) {
        const BilinearProduct p = fam.product_at(pt);
        Matrix phi;
        if (!fam.phi.empty()) phi = fam.phi_at(pt);
        if (!verify_member(sys, pair, p, fam.phi.empty() ? nullptr : &phi)) fam.verified = false;
        fam.sample_products.push_back(p);
      }
      rep.families.push_back(std::move(fam));
    }
    rep.budget_used = budget.used();
  } catch (const poly::BudgetExhausted& e) {
    rep.status = Status::Inconclusive;
    rep.note = e.what();
    rep.budget_used = budget.used();
    rep.families.clear();
    return rep;
  }
  if (rep.families.empty()) {
    // Saturation emptied every branch.
    rep.status = Status::Empty;
    rep.certificate = {"1"};
    rep.note = "every case-split branch is inconsistent";
    return rep;
  }
  const bool all_verified = std::all_of(rep.families.begin(), rep.families.end(),
                                        [](const SolutionFamily& f) { return f.samples.empty() || f.verified; });
  if (!all_verified) rep.note = "a sampled family member failed verification";
  if (original.mode == Mode::Commutative) {
    rep.status = Status::Families;
    return rep;
  }
  for (const auto& f : rep.families) {
    if (f.verified && !f.sample_products.empty()) {
      rep.witness = f.sample_products.front();
      if (!f.phi.empty()) rep.witness_phi = f.phi_at(f.samples.front());
      break;
    }
  }
  rep.status = rep.witness ? Status::Witness : Status::Families;
  return rep;
}

SolveReport solve_pair(const PairOnSameSpace& pair, const SolveOptions& opt) {
  const bool phi = lie::is_semisimple(pair.n);
  auto run = [&](const PairOnSameSpace& p) { return solve(phi ? setup_phi(p) : setup_general(p), p, opt); };
  SolveReport first = run(pair);
  if (first.status != Status::Empty || !opt.search_identifications || pair.dim() > 4) return first;
  std::vector<std::size_t> perm(pair.dim());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t tried = 1;
  while (std::next_permutation(perm.begin(), perm.end())) {
    ++tried;
    const PairOnSameSpace alt(pair.g.relabeled(perm), pair.n);
    SolveReport r = run(alt);
    if (r.status == Status::Empty) continue;
    r.identification = perm;
    r.note = "identity identification is empty; found after trying " + std::to_string(tried) + " identifications";
    return r;
  }
  first.note = "empty for all " + std::to_string(tried) + " basis identifications of g";
  return first;
}

SolveReport solve_commutative(const LieAlgebra& g, const SolveOptions& opt) {
  return solve(setup_commutative(g), PairOnSameSpace(g, g), opt);
}

bool recheck_empty(const System& original, TermOrder order, Budget& budget) {
  return poly::groebner(original.ideal(order), budget).contains_one();
}

}  // namespace postlie::solver

#include "postlie/solver/classify.hpp"

#include <algorithm>
#include <numeric>

#include "postlie/exact/linalg.hpp"

namespace postlie::solver {

using poly::BudgetExhausted;
using poly::OrderKind;

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

Polynomial embed(const Polynomial& p, std::size_t nvars, std::size_t offset) {
  std::vector<std::size_t> map(p.nvars());
  std::iota(map.begin(), map.end(), offset);
  return p.remap(nvars, map);
}

std::vector<std::string> strings(const std::vector<Polynomial>& polys, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.str(names));
  return out;
}

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

// Emptiness over C under grevlex; fills the certificate when empty.
bool empty_variety(const poly::Ideal& ideal, Budget& budget, IsoResult& out) {
  poly::Ideal g = ideal;
  g.order = poly::TermOrder{OrderKind::GrevLex, 0};
  const auto gb = poly::groebner(g, budget);
  if (!gb.contains_one()) return false;
  out.answer = Answer::No;
  out.evidence = "certificate";
  out.certificate = strings(gb.polys(), ideal.names);
  return true;
}

}  // namespace

poly::Ideal isomorphism_system(const LieAlgebra& g, const ProductFamily& p, const ProductFamily& q,
                               const AutGroupParam& aut, const std::vector<std::string>& extra) {
  const std::size_t n = g.dim();
  const std::size_t k = aut.params.size();
  const std::size_t kp = p.nparams();
  const std::size_t kq = q.nparams();
  const std::size_t nv = k + kp + kq + extra.size() + 1;
  std::vector<std::string> names = aut.params;
  for (const auto& s : p.params) names.push_back(s + "_p");
  for (const auto& s : q.params) names.push_back(s + "_q");
  names.insert(names.end(), extra.begin(), extra.end());
  names.push_back("t");

  std::vector<Polynomial> P;
  for (const auto& e : aut.entries) P.push_back(embed(e, nv, 0));
  std::vector<Polynomial> pa, qa;
  for (const auto& c : p.a) pa.push_back(embed(c, nv, k));
  for (const auto& c : q.a) qa.push_back(embed(c, nv, k + kp));
  auto at = [n](const std::vector<Polynomial>& a, std::size_t i, std::size_t j, std::size_t l) -> const Polynomial& {
    return a[(i * n + j) * n + l];
  };

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        Polynomial f(nv);
        for (std::size_t l = 0; l < n; ++l) {
          if (!at(pa, i, j, l).is_zero() && !P[r * n + l].is_zero()) f += P[r * n + l] * at(pa, i, j, l);
        }
        for (std::size_t a = 0; a < n; ++a) {
          if (P[a * n + i].is_zero()) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (P[b * n + j].is_zero() || at(qa, a, b, r).is_zero()) continue;
            f -= P[a * n + i] * P[b * n + j] * at(qa, a, b, r);
          }
        }
        if (!f.is_zero()) gens.push_back(f);
      }
    }
  }
  for (const auto& c : p.constraints) gens.push_back(embed(c, nv, k));
  for (const auto& c : q.constraints) gens.push_back(embed(c, nv, k + kp));
  gens.push_back(Polynomial::variable(nv, nv - 1) * embed(aut.nonvanishing, nv, 0) - Polynomial::constant(nv, Rational(1)));
  return {nv, std::move(gens), poly::TermOrder{}, std::move(names)};
}

IsoResult isomorphic(const LieAlgebra& g, const BilinearProduct& p, const BilinearProduct& q, const AutGroupParam& aut,
                     Budget& budget) {
  IsoResult out;
  if (p == q) {
    out.answer = Answer::Yes;
    out.evidence = "witness";
    out.witness = identity(p.dim());
    return out;
  }
  const auto fp = product::invariants(g, p);
  const auto fq = product::invariants(g, q);
  if (!(fp == fq)) {
    out.answer = Answer::No;
    out.evidence = "fingerprint";
    out.detail = fp.str() + " vs " + fq.str();
    return out;
  }
  try {
    const auto ideal = isomorphism_system(g, ProductFamily::single("p", p), ProductFamily::single("q", q), aut);
    if (empty_variety(ideal, budget, out)) return out;
    out.answer = Answer::Yes;
    out.evidence = "variety";
    out.detail = "isomorphic over C; no rational witness among the samples";
    const std::size_t k = aut.params.size();
    for (const auto& c : poly::case_split(ideal, 6, budget)) {
      for (const auto& pt : poly::sample_points(c, 5)) {
        const Matrix P = aut.at(std::vector<Rational>(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(k)));
        if (exact::determinant(P).is_zero() || !(p.transported(P) == q)) continue;
        out.evidence = "witness";
        out.detail.clear();
        out.witness = P;
        return out;
      }
    }
  } catch (const BudgetExhausted& e) {
    out = {};
    out.evidence = "budget";
    out.detail = e.what();
  }
  return out;
}

IsoResult isomorphic_families(const LieAlgebra& g, const ProductFamily& p, const ProductFamily& q,
                              const AutGroupParam& aut, Budget& budget) {
  IsoResult out;
  try {
    if (empty_variety(isomorphism_system(g, p, q, aut), budget, out)) return out;
    out.answer = Answer::Yes;
    out.evidence = "variety";
  } catch (const BudgetExhausted& e) {
    out.evidence = "budget";
    out.detail = e.what();
  }
  return out;
}

IsoResult parameter_distinct(const LieAlgebra& g, const ProductFamily& p, const AutGroupParam& aut, Budget& budget) {
  IsoResult out;
  if (p.nparams() != 1) {
    out.evidence = "unsupported";
    out.detail = "parameter separation is only decided for one-parameter families";
    return out;
  }
  try {
    poly::Ideal ideal = isomorphism_system(g, p, p, aut, {"s"});
    const std::size_t nv = ideal.nvars;
    const std::size_t k = aut.params.size();
    // s (mu_p - mu_q) = 1
    ideal.generators.push_back(Polynomial::variable(nv, nv - 2) *
                                   (Polynomial::variable(nv, k) - Polynomial::variable(nv, k + 1)) -
                               Polynomial::constant(nv, Rational(1)));
    if (empty_variety(ideal, budget, out)) return out;
    out.answer = Answer::Yes;
    out.evidence = "variety";
    out.detail = "members at different parameter values can be isomorphic";
  } catch (const BudgetExhausted& e) {
    out.evidence = "budget";
    out.detail = e.what();
  }
  return out;
}

bool ClassificationResult::complete() const {
  if (solve.status != Status::Families || !missing.empty()) return false;
  for (const auto& f : solve.families) {
    if (!f.verified) return false;
  }
  for (const auto& c : coverage) {
    if (c.unmatched || c.points == 0) return false;
  }
  for (const auto& d : distinct) {
    if (d.result.answer != Answer::No) return false;
  }
  return true;
}

std::vector<std::string> ClassificationResult::class_names() const {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(c.representative.name);
  return out;
}

namespace {

// Standard samples plus one point per coordinate stratum: each subset of
// the free parameters set to zero, the rest to fixed nonzero values.
std::vector<std::vector<Rational>> strata_points(const SolutionFamily& f) {
  auto out = f.samples;
  const auto free = f.component.free_vars();
  const std::size_t k = free.size();
  if (k > 8) return out;
  const auto& seq = poly::sample_sequence();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Rational> vals(k);
    for (std::size_t i = 0; i < k; ++i) vals[i] = (mask >> i) & 1U ? Rational(0) : seq[1 + i % 4];
    auto pt = f.component.point(vals);
    if (pt && std::find(out.begin(), out.end(), *pt) == out.end()) out.push_back(std::move(*pt));
  }
  return out;
}

}  // namespace

ClassificationResult classify_commutative(const LieAlgebra& g, const AutGroupParam& aut,
                                          const std::vector<ProductFamily>& seeds, const SolveOptions& opt) {
  ClassificationResult res;
  res.solve = solve_commutative(g, opt);
  if (res.solve.status != Status::Families) {
    res.note = "solver returned " + std::string(to_string(res.solve.status));
    return res;
  }
  std::vector<ClassEntry> classes;
  for (const auto& s : seeds) {
    ClassEntry e;
    e.representative = s;
    e.from_table = true;
    if (s.nparams() == 0) e.fingerprint = product::invariants(g, s.product());
    classes.push_back(std::move(e));
  }
  std::vector<std::pair<BilinearProduct, std::size_t>> known;
  std::size_t inconclusive = 0;

  auto match = [&](const BilinearProduct& p) -> std::optional<std::size_t> {
    for (const auto& [prod, cls] : known) {
      if (prod == p) return cls;
    }
    const auto fp = product::invariants(g, p);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Budget budget(opt.budget);
      const auto& rep = classes[c].representative;
      IsoResult r;
      if (rep.nparams() == 0) {
        if (!(*classes[c].fingerprint == fp)) continue;
        r = isomorphic(g, rep.product(), p, aut, budget);
      } else {
        r = isomorphic_families(g, rep, ProductFamily::single("p", p), aut, budget);
      }
      if (r.answer == Answer::Yes) return c;
      if (r.answer == Answer::Inconclusive) ++inconclusive;
    }
    return std::nullopt;
  };

  for (std::size_t fi = 0; fi < res.solve.families.size(); ++fi) {
    const auto& fam = res.solve.families[fi];
    FamilyCoverage cov;
    cov.family = fi;
    for (const auto& pt : strata_points(fam)) {
      const BilinearProduct p = fam.product_at(pt);
      ++cov.points;
      if (!product::verify_commutative(g, p).pass()) {
        ++cov.unmatched;
        continue;
      }
      auto cls = match(p);
      if (!cls) {
        ClassEntry e;
        e.representative = ProductFamily::single("N" + std::to_string(classes.size() - seeds.size() + 1), p);
        e.fingerprint = product::invariants(g, p);
        classes.push_back(std::move(e));
        cls = classes.size() - 1;
      }
      known.emplace_back(p, *cls);
      ++classes[*cls].members;
      const auto& name = classes[*cls].representative.name;
      if (std::find(cov.classes.begin(), cov.classes.end(), name) == cov.classes.end()) cov.classes.push_back(name);
    }
    res.coverage.push_back(std::move(cov));
  }
  if (inconclusive) res.note = std::to_string(inconclusive) + " isomorphism tests ran out of budget";

  for (auto& c : classes) {
    if (c.members) {
      res.classes.push_back(std::move(c));
    } else {
      res.missing.push_back(c.representative.name);
    }
  }
  for (std::size_t a = 0; a < res.classes.size(); ++a) {
    const auto& ca = res.classes[a];
    if (ca.representative.nparams() > 0) {
      Budget budget(opt.budget);
      res.distinct.push_back({a, a, parameter_distinct(g, ca.representative, aut, budget)});
    }
    for (std::size_t b = a + 1; b < res.classes.size(); ++b) {
      const auto& cb = res.classes[b];
      Budget budget(opt.budget);
      PairEvidence ev{a, b, {}};
      if (ca.fingerprint && cb.fingerprint) {
        ev.result = isomorphic(g, ca.representative.product(), cb.representative.product(), aut, budget);
      } else {
        ev.result = isomorphic_families(g, ca.representative, cb.representative, aut, budget);
      }
      res.distinct.push_back(std::move(ev));
    }
  }
  return res;
}

LinearMatch match_linear_family(const System& reduced, const ProductFamily& theirs, Budget& budget) {
  LinearMatch out;
  const std::size_t nv = reduced.nvars();
  const std::size_t nq = theirs.nparams();
  const std::size_t rows = reduced.product.size();
  if (theirs.a.size() != rows) return out;
  auto split = [rows](const std::vector<Polynomial>& polys, std::size_t n, Matrix& lin, exact::Vector& c0) {
    lin = Matrix(rows, n);
    c0.assign(rows, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
      if (polys[r].total_degree() > 1) return false;
      for (const auto& t : polys[r].terms()) {
        if (t.mono.is_one()) {
          c0[r] = t.coeff;
          continue;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (t.mono[v]) lin(r, v) = t.coeff;
        }
      }
    }
    return true;
  };
  Matrix C, D;
  exact::Vector c0, d0;
  if (!split(reduced.product, nv, C, c0) || !split(theirs.a, nq, D, d0)) return out;
  Matrix A(nv, nq);
  for (std::size_t j = 0; j < nq; ++j) {
    exact::Vector col(rows);
    for (std::size_t r = 0; r < rows; ++r) col[r] = D(r, j);
    const auto sol = exact::solve_affine(C, col);
    if (!sol) return out;
    for (std::size_t i = 0; i < nv; ++i) A(i, j) = sol->particular[i];
  }
  const auto b = exact::solve_affine(C, d0 - c0);
  if (!b) return out;
  out.shape = true;
  out.change = A;
  out.offset = b->particular;
  out.invertible = nv == nq && !exact::determinant(A).is_zero();
  if (!out.invertible) return out;
  std::vector<Polynomial> values;
  for (std::size_t i = 0; i < nv; ++i) {
    Polynomial v = Polynomial::constant(nq, out.offset[i]);
    for (std::size_t j = 0; j < nq; ++j) {
      if (!A(i, j).is_zero()) v += A(i, j) * Polynomial::variable(nq, j);
    }
    values.push_back(v);
  }
  for (const auto& f : reduced.nonlinear) out.transported.push_back(f.compose(values));
  const poly::TermOrder order{OrderKind::GrevLex, 0};
  out.constraints_equal = poly::ideal_equal(poly::Ideal(nq, out.transported, order), poly::Ideal(nq, theirs.constraints, order), budget);
  return out;
}

FamilyNilpotency family_left_nilpotent(const SolutionFamily& f, std::size_t dim, Budget& budget) {
  FamilyNilpotency out;
  for (const auto& p : f.sample_products) {
    ++out.samples;
    if (!product::all_left_nilpotent(p).nilpotent) out.samples_nilpotent = false;
  }
  // Scale by a common multiple D of the denominators; the traces of (D L)^m
  // must vanish wherever D does not.
  const std::size_t np = f.component.nvars;
  std::vector<Polynomial> dens;
  for (const auto& e : f.product) {
    if (!e.den.is_constant() && std::find(dens.begin(), dens.end(), e.den) == dens.end()) dens.push_back(e.den);
  }
  std::vector<Polynomial> a;
  Polynomial D = Polynomial::constant(np, Rational(1));
  for (const auto& d : dens) D = D * d;
  for (const auto& e : f.product) {
    if (e.den.is_constant()) {
      a.push_back(e.num * (D * e.den.constant_term().inverse()));
      continue;
    }
    Polynomial v = e.num;
    for (const auto& d : dens) {
      if (!(d == e.den)) v = v * d;
    }
    a.push_back(v);
  }
  out.symbolic_checked = true;
  const auto traces = product::left_power_traces(dim, a, np);
  const std::size_t nv = np + dim + 1;
  std::vector<Polynomial> gens;
  for (const auto& r : f.component.residual) gens.push_back(embed(r, nv, 0));
  if (!dens.empty()) gens.push_back(Polynomial::variable(nv, nv - 1) * embed(D, nv, 0) - Polynomial::constant(nv, Rational(1)));
  out.symbolic = true;
  if (gens.empty()) {
    out.symbolic = std::all_of(traces.begin(), traces.end(), [](const Polynomial& t) { return t.is_zero(); });
    return out;
  }
  const poly::Ideal ideal(nv, gens, poly::TermOrder{OrderKind::GrevLex, 0});
  for (const auto& t : traces) {
    if (!t.is_zero() && !poly::in_radical(ideal, embed(t, nv, 0), budget)) {
      out.symbolic = false;
      break;
    }
  }
  return out;
}

}  // namespace postlie::solver

#include "postlie/poly/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace postlie::poly {

Ideal::Ideal(std::size_t n, std::vector<Polynomial> gens, TermOrder ord, std::vector<std::string> var_names)
    : nvars(n), generators(std::move(gens)), order(ord), names(std::move(var_names)) {
  if (names.empty()) names = default_names(n);
  for (const auto& g : generators) {
    if (!g.is_zero() && g.nvars() != n) throw std::invalid_argument("ideal generator over a different ring");
  }
}

namespace {

// Terms sorted ascending under the working order; the leading term is back().
using OPoly = std::vector<Term>;

struct Engine {
  TermOrder order;
  std::size_t nvars;

  [[nodiscard]] OPoly convert(const Polynomial& p) const {
    OPoly f = p.terms();
    std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) < 0; });
    return f;
  }

  [[nodiscard]] Polynomial back(const OPoly& f) const { return {nvars, f}; }

  static void make_monic(OPoly& f) {
    if (f.empty() || f.back().coeff.is_one()) return;
    const Rational inv = f.back().coeff.inverse();
    for (auto& t : f) t.coeff *= inv;
  }

  // f - c * m * g, all ascending.
  [[nodiscard]] OPoly sub_mul(const OPoly& f, const Rational& c, const Monomial& m, const OPoly& g) const {
    OPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(f[i++]);
        continue;
      }
      Monomial gm = g[j].mono * m;
      if (i == f.size()) {
        out.push_back({std::move(gm), -(c * g[j].coeff)});
        ++j;
        continue;
      }
      const int cmp = order.compare(f[i].mono, gm);
      if (cmp < 0) {
        out.push_back(f[i++]);
      } else if (cmp > 0) {
        out.push_back({std::move(gm), -(c * g[j].coeff)});
        ++j;
      } else {
        Rational v = f[i].coeff - c * g[j].coeff;
        if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full normal form of f modulo the basis elements whose index is in `use`.
  OPoly normal_form(OPoly f, const std::vector<OPoly>& basis, const std::vector<std::size_t>& use,
                    Budget& budget) const {
    OPoly rem;
    while (!f.empty()) {
      const Term& lt = f.back();
      const OPoly* div = nullptr;
      for (auto idx : use) {
        if (basis[idx].back().mono.divides(lt.mono)) {
          div = &basis[idx];
          break;
        }
      }
      if (div) {
        budget.charge();
        const Rational c = lt.coeff / div->back().coeff;
        const Monomial m = lt.mono / div->back().mono;
        f = sub_mul(f, c, m, *div);
      } else {
        rem.push_back(lt);
        f.pop_back();
      }
    }
    std::reverse(rem.begin(), rem.end());
    return rem;
  }

  [[nodiscard]] OPoly spoly(const OPoly& f, const OPoly& g) const {
    const Monomial l = lcm(f.back().mono, g.back().mono);
    OPoly a;
    a.reserve(f.size());
    const Monomial mf = l / f.back().mono;
    for (const auto& t : f) a.push_back({t.mono * mf, t.coeff / f.back().coeff});
    return sub_mul(a, g.back().coeff.inverse(), l / g.back().mono, g);
  }
};

GroebnerBasis unit_basis(std::size_t nvars, TermOrder order) {
  return {nvars, order, {Polynomial::constant(nvars, Rational(1))}};
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t nvars, TermOrder order, std::vector<Polynomial> polys)
    : nvars_(nvars), order_(order), polys_(std::move(polys)) {}

bool GroebnerBasis::contains_one() const {
  return std::any_of(polys_.begin(), polys_.end(), [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

Monomial GroebnerBasis::leading_monomial(const Polynomial& p) const {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order_.compare(t.mono, best->mono) > 0) best = &t;
  }
  return best->mono;
}

Polynomial GroebnerBasis::reduce(const Polynomial& p, Budget& budget) const {
  if (p.is_zero()) return p;
  if (p.nvars() != nvars_) throw std::invalid_argument("reduce: ring mismatch");
  Engine eng{order_, nvars_};
  std::vector<OPoly> basis;
  std::vector<std::size_t> use;
  for (const auto& g : polys_) {
    basis.push_back(eng.convert(g));
    use.push_back(use.size());
  }
  return eng.back(eng.normal_form(eng.convert(p), basis, use, budget));
}

GroebnerBasis groebner(const Ideal& ideal, Budget& budget) {
  const std::size_t n = ideal.nvars;
  Engine eng{ideal.order, n};
  std::vector<OPoly> basis;
  std::vector<std::size_t> active;
  // (lcm degree, i, j) drives selection; `pending` answers membership queries.
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](OPoly h) -> bool {
    Engine::make_monic(h);
    if (h.back().mono.is_one()) return false;
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      const unsigned d = lcm(basis[i].back().mono, h.back().mono).degree();
      queue.emplace(d, i, k);
      pending.emplace(i, k);
    }
    basis.push_back(std::move(h));
    active.push_back(k);
    return true;
  };

  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    OPoly h = eng.normal_form(eng.convert(g), basis, active, budget);
    if (h.empty()) continue;
    if (!add(std::move(h))) return unit_basis(n, ideal.order);
  }

  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Monomial& li = basis[i].back().mono;
    const Monomial& lj = basis[j].back().mono;
    if (li.coprime(lj)) continue;
    const Monomial l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].back().mono.divides(l)) continue;
      const auto ik = std::minmax(i, k);
      const auto jk = std::minmax(j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) chain = true;
    }
    if (chain) continue;
    OPoly h = eng.normal_form(eng.spoly(basis[i], basis[j]), basis, active, budget);
    if (h.empty()) continue;
    if (!add(std::move(h))) return unit_basis(n, ideal.order);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = basis[a].back().mono;
      const Monomial& lb = basis[b].back().mono;
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(a);
  }
  // Interreduce tails.
  std::vector<OPoly> reduced;
  for (auto a : minimal) {
    std::vector<std::size_t> others;
    for (auto b : minimal) {
      if (b != a) others.push_back(b);
    }
    OPoly lead{basis[a].back()};
    OPoly tail(basis[a].begin(), basis[a].end() - 1);
    OPoly r = eng.normal_form(std::move(tail), basis, others, budget);
    r.push_back(lead.back());
    Engine::make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OPoly& a, const OPoly& b) { return ideal.order.compare(a.back().mono, b.back().mono) < 0; });
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const auto& r : reduced) out.push_back(eng.back(r));
  return {n, ideal.order, std::move(out)};
}

bool ideal_equal(const Ideal& a, const Ideal& b, Budget& budget) {
  if (a.nvars != b.nvars) throw std::invalid_argument("ideal_equal: different variable sets");
  const auto ga = groebner(a, budget);
  const auto gb = groebner(b, budget);
  for (const auto& g : a.generators) {
    if (!gb.member(g, budget)) return false;
  }
  for (const auto& g : b.generators) {
    if (!ga.member(g, budget)) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

std::vector<Polynomial> drop_tail_variable(const std::vector<Polynomial>& polys, std::size_t n) {
  std::vector<std::size_t> back = identity_map(n + 1);
  back[n] = 0;
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    if (p.degree_in(n) == 0) out.push_back(p.remap(n, back));
  }
  return out;
}

}  // namespace

GroebnerBasis saturate(const Ideal& ideal, const std::vector<Polynomial>& nonvanishing, Budget& budget) {
  if (nonvanishing.empty()) return groebner(ideal, budget);
  const std::size_t n = ideal.nvars;
  const auto up = identity_map(n);
  Polynomial prod = Polynomial::constant(n + 1, Rational(1));
  for (const auto& u : nonvanishing) prod = prod * u.remap(n + 1, up);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.remap(n + 1, up));
  gens.push_back(Polynomial::variable(n + 1, n) * prod - Polynomial::constant(n + 1, Rational(1)));
  const TermOrder elim{ideal.order.kind, 1};
  const auto gb = groebner(Ideal(n + 1, std::move(gens), elim), budget);
  if (gb.contains_one()) return unit_basis(n, TermOrder{ideal.order.kind, 0});
  return {n, TermOrder{ideal.order.kind, 0}, drop_tail_variable(gb.polys(), n)};
}

bool in_radical(const Ideal& ideal, const Polynomial& p, Budget& budget) {
  if (p.is_zero()) return true;
  const std::size_t n = ideal.nvars;
  const auto up = identity_map(n);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.remap(n + 1, up));
  gens.push_back(Polynomial::constant(n + 1, Rational(1)) - Polynomial::variable(n + 1, n) * p.remap(n + 1, up));
  return groebner(Ideal(n + 1, std::move(gens), TermOrder{OrderKind::GrevLex, 0}), budget).contains_one();
}

Ideal intersect(const Ideal& a, const Ideal& b, Budget& budget) {
  const std::size_t n = a.nvars;
  const auto up = identity_map(n);
  const Polynomial t = Polynomial::variable(n + 1, n);
  const Polynomial one_minus_t = Polynomial::constant(n + 1, Rational(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators) gens.push_back(t * g.remap(n + 1, up));
  for (const auto& g : b.generators) gens.push_back(one_minus_t * g.remap(n + 1, up));
  const auto gb = groebner(Ideal(n + 1, std::move(gens), TermOrder{a.order.kind, 1}), budget);
  return {n, drop_tail_variable(gb.polys(), n), TermOrder{a.order.kind, 0}, a.names};
}

}  // namespace postlie::poly

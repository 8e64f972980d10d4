#include "postlie/poly/case_split.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace postlie::poly {

Polynomial RationalFunction::as_polynomial() const {
  if (!den.is_constant() || den.is_zero()) throw std::invalid_argument("rational function is not a polynomial");
  return num * den.constant_term().inverse();
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den.evaluate(point);
  if (d.is_zero()) throw std::domain_error("denominator vanishes");
  return num.evaluate(point) / d;
}

namespace {

Polynomial one(std::size_t n) { return Polynomial::constant(n, Rational(1)); }

// p evaluated at rational-function values, over a common denominator.
RationalFunction compose(const Polynomial& p, const std::vector<RationalFunction>& values) {
  const std::size_t n = p.nvars();
  std::vector<unsigned> deg(n, 0);
  for (std::size_t v = 0; v < n; ++v) deg[v] = p.degree_in(v);
  Polynomial den = one(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v]) den = den * values[v].den.pow(deg[v]);
  }
  Polynomial num(n);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(n, t.coeff);
    for (std::size_t v = 0; v < n; ++v) {
      if (!deg[v]) continue;
      const unsigned e = t.mono[v];
      if (e) term = term * values[v].num.pow(e);
      if (deg[v] > e) term = term * values[v].den.pow(deg[v] - e);
    }
    num += term;
  }
  if (den.is_constant()) {
    const Rational inv = den.constant_term().inverse();
    return {num * inv, one(n)};
  }
  return {num, den};
}

struct State {
  std::vector<Polynomial> gens;
  std::vector<Polynomial> nonvanishing;
  std::vector<Substitution> subs;
};

std::vector<std::size_t> invertible_vars(const std::vector<Polynomial>& nonvanishing) {
  std::vector<std::size_t> out;
  for (const auto& u : nonvanishing) {
    if (u.size() == 1 && u.total_degree() == 1) out.push_back(u.variables().front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_pure_power(const Polynomial& g, std::size_t& var) {
  if (g.size() != 1) return false;
  const auto vars = g.variables();
  if (vars.size() != 1) return false;
  var = vars.front();
  return true;
}

// Can `c` be assumed nonzero on the current branch?
bool invertible_coefficient(const Polynomial& c, const std::vector<Polynomial>& nonvanishing,
                            const std::vector<std::size_t>& inv) {
  if (c.is_zero()) return false;
  if (c.is_constant()) return true;
  if (c.size() == 1) {
    for (auto v : c.variables()) {
      if (!std::binary_search(inv.begin(), inv.end(), v)) return false;
    }
    return true;
  }
  const Polynomial m = c.monic();
  return std::any_of(nonvanishing.begin(), nonvanishing.end(), [&](const Polynomial& u) { return u.monic() == m; });
}

// Apply var = num/den to every polynomial, clearing denominators.
std::vector<Polynomial> apply(const std::vector<Polynomial>& polys, const Substitution& s,
                              const std::vector<std::size_t>& inv) {
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    Polynomial q = p.substitute_fraction(s.var, s.numerator, s.denominator).strip_variable_factors(inv);
    if (!q.is_zero()) out.push_back(q.primitive());
  }
  return out;
}

// Returns false when a nonvanishing condition became identically zero.
bool apply_state(State& st, const Substitution& s) {
  const auto inv = invertible_vars(st.nonvanishing);
  st.gens = apply(st.gens, s, inv);
  std::vector<Polynomial> nv;
  for (const auto& u : st.nonvanishing) {
    Polynomial q = u.substitute_fraction(s.var, s.numerator, s.denominator);
    if (q.is_zero()) return false;
    if (q.is_constant()) continue;
    q = q.primitive();
    if (std::find(nv.begin(), nv.end(), q) == nv.end()) nv.push_back(q);
  }
  st.nonvanishing = std::move(nv);
  st.subs.push_back(s);
  return true;
}

std::optional<Substitution> find_solvable(const std::vector<Polynomial>& gb, const std::vector<Polynomial>& nonvanishing) {
  const auto inv = invertible_vars(nonvanishing);
  // Constant coefficients first, then coefficients known to be nonzero.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& g : gb) {
      for (auto v : g.variables()) {
        if (g.degree_in(v) != 1) continue;
        const Polynomial c = g.coefficient_of(v, 1);
        const bool ok = pass == 0 ? c.is_constant() : invertible_coefficient(c, nonvanishing, inv);
        if (!ok) continue;
        const Polynomial rest = g.coefficient_of(v, 0);
        if (c.is_constant()) {
          const Rational ci = c.constant_term().inverse();
          return Substitution{v, -(rest * ci), one(g.nvars())};
        }
        return Substitution{v, -rest, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> split_variable(const std::vector<Polynomial>& gb, const std::vector<Polynomial>& nonvanishing) {
  const auto inv = invertible_vars(nonvanishing);
  auto usable = [&](std::size_t v) { return !std::binary_search(inv.begin(), inv.end(), v); };
  auto first_usable = [&](const std::vector<std::size_t>& vars) -> std::optional<std::size_t> {
    for (auto v : vars) {
      if (usable(v)) return v;
    }
    return std::nullopt;
  };
  for (const auto& g : gb) {
    if (g.size() == 1) {
      if (auto v = first_usable(g.variables())) return v;
    }
  }
  for (const auto& g : gb) {
    const Monomial m = g.monomial_content();
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m[v]) vars.push_back(v);
    }
    if (auto v = first_usable(vars)) return v;
  }
  for (const auto& g : gb) {
    for (auto v : g.variables()) {
      if (g.degree_in(v) != 1) continue;
      if (auto w = first_usable(g.coefficient_of(v, 1).variables())) return w;
    }
  }
  std::set<std::size_t> all;
  for (const auto& g : gb) {
    for (auto v : g.variables()) all.insert(v);
  }
  return first_usable(std::vector<std::size_t>(all.begin(), all.end()));
}

void explore(const Ideal& base, State st, std::size_t depth, Budget& budget, std::vector<CaseComponent>& out) {
  const std::size_t n = base.nvars;
  for (;;) {
    const auto gb = saturate(Ideal(n, st.gens, base.order, base.names), st.nonvanishing, budget);
    if (gb.contains_one()) return;
    st.gens = gb.polys();
    std::size_t var = 0;
    const auto power = std::find_if(st.gens.begin(), st.gens.end(), [&](const Polynomial& g) { return is_pure_power(g, var); });
    if (power != st.gens.end()) {
      if (!apply_state(st, Substitution{var, Polynomial(n), one(n)})) return;
      continue;
    }
    if (auto s = find_solvable(st.gens, st.nonvanishing)) {
      if (!apply_state(st, *s)) return;
      continue;
    }
    if (st.gens.empty() || depth == 0) {
      CaseComponent c;
      c.nvars = n;
      c.substitutions = st.subs;
      c.residual = st.gens;
      c.nonvanishing = st.nonvanishing;
      c.resolved = st.gens.empty();
      out.push_back(std::move(c));
      return;
    }
    const auto x = split_variable(st.gens, st.nonvanishing);
    if (!x) {
      CaseComponent c{n, st.subs, st.gens, st.nonvanishing, false};
      out.push_back(std::move(c));
      return;
    }
    State zero = st;
    zero.gens.push_back(Polynomial::variable(n, *x));
    explore(base, std::move(zero), depth - 1, budget, out);
    State nonzero = std::move(st);
    nonzero.nonvanishing.push_back(Polynomial::variable(n, *x));
    explore(base, std::move(nonzero), depth - 1, budget, out);
    return;
  }
}

}  // namespace

std::vector<std::size_t> CaseComponent::free_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!is_substituted(v)) out.push_back(v);
  }
  return out;
}

bool CaseComponent::is_substituted(std::size_t var) const {
  return std::any_of(substitutions.begin(), substitutions.end(), [&](const Substitution& s) { return s.var == var; });
}

std::optional<std::vector<Rational>> CaseComponent::point(std::span<const Rational> free_values) const {
  const auto fv = free_vars();
  if (free_values.size() != fv.size()) throw std::invalid_argument("wrong number of free values");
  std::vector<Rational> pt(nvars, Rational(0));
  for (std::size_t i = 0; i < fv.size(); ++i) pt[fv[i]] = free_values[i];
  for (const auto& r : residual) {
    if (!r.evaluate(pt).is_zero()) return std::nullopt;
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    const Rational d = it->denominator.evaluate(pt);
    if (d.is_zero()) return std::nullopt;
    pt[it->var] = it->numerator.evaluate(pt) / d;
  }
  for (const auto& u : nonvanishing) {
    if (u.evaluate(pt).is_zero()) return std::nullopt;
  }
  return pt;
}

std::vector<RationalFunction> CaseComponent::parametric() const {
  std::vector<RationalFunction> vals;
  vals.reserve(nvars);
  for (std::size_t v = 0; v < nvars; ++v) vals.push_back({Polynomial::variable(nvars, v), one(nvars)});
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    const RationalFunction a = compose(it->numerator, vals);
    const RationalFunction b = compose(it->denominator, vals);
    RationalFunction r{a.num * b.den, a.den * b.num};
    if (r.den.is_constant()) r = {r.num * r.den.constant_term().inverse(), one(nvars)};
    vals[it->var] = std::move(r);
  }
  return vals;
}

std::vector<Polynomial> CaseComponent::closure_generators() const {
  std::vector<Polynomial> out = residual;
  for (const auto& s : substitutions) {
    out.push_back(s.denominator * Polynomial::variable(nvars, s.var) - s.numerator);
  }
  return out;
}

std::vector<CaseComponent> case_split(const Ideal& ideal, std::size_t depth, Budget& budget) {
  std::vector<CaseComponent> out;
  State st;
  for (const auto& g : ideal.generators) {
    if (!g.is_zero()) st.gens.push_back(g);
  }
  explore(ideal, std::move(st), depth, budget, out);
  return out;
}

const std::vector<Rational>& sample_sequence() {
  static const std::vector<Rational> seq{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  return seq;
}

std::vector<std::vector<Rational>> sample_points(const CaseComponent& c, std::size_t count) {
  const auto& seq = sample_sequence();
  const std::size_t k = c.free_vars().size();
  std::vector<std::vector<Rational>> out;
  auto consider = [&](const std::vector<Rational>& values) {
    if (out.size() >= count) return;
    auto pt = c.point(values);
    if (pt && std::find(out.begin(), out.end(), *pt) == out.end()) out.push_back(std::move(*pt));
  };
  for (std::size_t s = 0; s < seq.size(); ++s) {
    std::vector<Rational> values(k);
    for (std::size_t m = 0; m < k; ++m) values[m] = seq[(s + m) % seq.size()];
    consider(values);
  }
  for (std::size_t s = 0; s < 4; ++s) {
    std::vector<Rational> values(k);
    for (std::size_t m = 0; m < k; ++m) values[m] = seq[1 + (s + m) % 4];
    consider(values);
  }
  return out;
}

bool covers(const Ideal& ideal, const std::vector<CaseComponent>& components, Budget& budget) {
  const std::size_t n = ideal.nvars;
  if (components.empty()) return groebner(ideal, budget).contains_one();
  Ideal acc(n, components.front().closure_generators(), ideal.order, ideal.names);
  for (std::size_t i = 1; i < components.size(); ++i) {
    acc = intersect(acc, Ideal(n, components[i].closure_generators(), ideal.order, ideal.names), budget);
  }
  return std::all_of(acc.generators.begin(), acc.generators.end(),
                     [&](const Polynomial& g) { return in_radical(ideal, g, budget); });
}

bool sound(const Ideal& ideal, const std::vector<CaseComponent>& components, Budget& budget) {
  for (const auto& c : components) {
    const auto vals = c.parametric();
    const auto rgb = groebner(Ideal(c.nvars, c.residual, ideal.order), budget);
    for (const auto& g : ideal.generators) {
      const Polynomial num = compose(g, vals).num;
      if (!rgb.member(num, budget)) {
        // Over a nontrivial residual, vanishing may hold only on the radical.
        if (!in_radical(Ideal(c.nvars, c.residual, ideal.order), num, budget)) return false;
      }
    }
  }
  return true;
}

}  // namespace postlie::poly

#include "postlie/suite/suite.hpp"

#include <chrono>
#include <sstream>

#include "postlie/deriv/derivations.hpp"
#include "postlie/lie/catalog.hpp"
#include "postlie/lie/semidirect.hpp"
#include "postlie/lie/structure.hpp"
#include "postlie/solver/classify.hpp"
#include "postlie/solver/tables.hpp"

namespace postlie::suite {

using exact::Matrix;
using exact::Rational;
using exact::Subspace;
using lie::catalog;
using lie::LieAlgebra;
using lie::PairOnSameSpace;
using namespace solver;

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "catalog integrity; f23 lower central series 5,3,2,0", 1, false},
      {2, "Der(f23) has dim 10 and equals the 10-parameter pattern", 1, false},
      {3, "D(0,1,1)(sl2) = 0", 1, false},
      {4, "H1(sl2, V(m)) = 0 for m = 2,3,4", 1, false},
      {5, "dim H1(g,g) = dim End_s(a) = 1 for sl2 x| V(m), m = 2,3,4", 5, false},
      {6, "triple conditions (a)-(d) span Der(g,a) = Z1 + End_s(a) on sl2 x| V(2)", 5, false},
      {7, "commutative structures on sl2: only the zero product", 30, false},
      {8, "classification on r2: A1, A2, A3", 30, false},
      {9, "classification on r3_jordan: B1..B4; B(alpha,beta,gamma) with gamma(gamma-1)", 120, false},
      {10, "heisenberg: reduced system = five conditions; classes C1, C2(mu), C3, C4", 300, false},
      {11, "no structure on (heisenberg, sl2) and (C^3, sl2), certified", 120, false},
      {12, "witness on (r3_diag(1), sl2) through phi", 120, false},
      {13, "all L(x) nilpotent on every family over heisenberg and f23", 300, false},
      {14, "h1 + C example: commutative structure with L(e1) not nilpotent", 1, false},
      {15, "(sl2, sl2): phi = 0 and, for the negated bracket, phi = -id", 60, false},
      {16, "sl3 example: products and phi = diag(0,0,-1,0,-1,0,0,0)", 60, true},
      {17, "suite output is byte-identical across reruns", 600, false},
  };
  return c;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Budget:
      return "budget";
    case Outcome::Contingent:
      return "contingent";
  }
  return "?";
}

namespace {

struct Inconclusive {
  std::string what;
};

class Check {
 public:
  explicit Check(const SuiteOptions& o) : opt(o) {}
  void expect(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
    ok = ok && cond;
  }
  void note(const std::string& s) { lines.push_back("note: " + s); }
  // Abort the criterion as out of budget when a solve came back inconclusive.
  void require_conclusive(const SolveReport& r, const std::string& what) const {
    if (r.status == Status::Inconclusive) throw Inconclusive{what + ": " + r.note};
  }
  [[nodiscard]] SolveOptions solve_options() const {
    SolveOptions s;
    s.budget = opt.budget;
    return s;
  }
  [[nodiscard]] Budget budget() const { return Budget(opt.budget); }

  const SuiteOptions& opt;
  std::vector<std::string> lines;
  bool ok = true;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

Subspace unit_span(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<exact::Vector> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(exact::unit_vector(n, i));
  return Subspace::span(n, v);
}

void c1(Check& c) {
  for (const auto& [name, g] : lie::catalog_samples()) {
    c.expect(lie::jacobi_defect(g.dim(), g.constants()).empty(), "Jacobi holds on " + name);
  }
  const auto dims = lie::series_dims(catalog("f23"), lie::SeriesKind::LowerCentral);
  c.expect(dims == std::vector<std::size_t>{5, 3, 2, 0}, "f23 lower central dims " + join(dims));
}

void c2(Check& c) {
  const auto der = deriv::derivations(catalog("f23"));
  c.expect(der.dim() == 10, "dim Der(f23) = " + std::to_string(der.dim()));
  const std::vector<std::string> names = {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "e1", "e2"};
  const auto pattern = parse_matrix_text(
      "a1,a2,0,0,0;b1,b2,0,0,0;c1,c2,a1 + b2,0,0;d1,d2,c2,2*a1 + b2,a2;e1,e2,-c1,b1,a1 + 2*b2", 5, names);
  std::vector<exact::Vector> gens;
  for (std::size_t p = 0; p < names.size(); ++p) {
    std::vector<Rational> pt(names.size());
    pt[p] = Rational(1);
    exact::Vector v;
    for (const auto& e : pattern) v.push_back(e.evaluate(pt));
    gens.push_back(v);
  }
  const auto displayed = Subspace::span(25, gens);
  c.expect(displayed.dim() == 10, "displayed pattern has 10 independent parameters");
  c.expect(displayed == der.space, "computed basis spans exactly the displayed pattern");
}

void c3(Check& c) {
  const auto d = deriv::d011(catalog("sl2"));
  c.expect(d.dim() == 0, "dim D(0,1,1)(sl2) = " + std::to_string(d.dim()));
}

void c4(Check& c) {
  for (std::size_t m : {2, 3, 4}) {
    const auto h = deriv::cohomology_H1(lie::sl2_module(m));
    c.expect(h.dim_H1() == 0, "m=" + std::to_string(m) + ": dim Z1 " + std::to_string(h.dim_Z1()) + ", dim B1 " +
                                  std::to_string(h.dim_B1()) + ", dim H1 " + std::to_string(h.dim_H1()));
  }
}

void c5(Check& c) {
  for (std::size_t m : {2, 3, 4}) {
    const auto io = deriv::inner_and_outer(catalog("sl2_ltimes_V(" + std::to_string(m) + ")"));
    const auto end = deriv::intertwiners(lie::sl2_module(m)).dim();
    c.expect(io.dim_H1 == end && end == 1, "m=" + std::to_string(m) + ": dim Der " + std::to_string(io.dim_der) +
                                               ", dim ad " + std::to_string(io.dim_inner) + ", dim H1 " +
                                               std::to_string(io.dim_H1) + ", dim End_s(a) " + std::to_string(end));
  }
}

void c6(Check& c) {
  const auto split = lie::semidirect(LieAlgebra::abelian(2), catalog("sl2"), lie::sl2_module(2));
  const auto direct = deriv::derivations_into(split.algebra, unit_span(5, 0, 2));
  const auto triples = deriv::triple_space(split, true);
  const auto z1 = deriv::cohomology_H1(split.action).dim_Z1();
  const auto end = deriv::intertwiners(split.action).dim();
  c.expect(direct.space == triples.space, "triple subspace equals Der(g,a), dim " + std::to_string(direct.dim()));
  c.expect(direct.dim() == z1 + end, "dim Der(g,a) = dim Z1 (" + std::to_string(z1) + ") + dim End_s(a) (" +
                                         std::to_string(end) + ")");
  c.expect(split.algebra == catalog("sl2_ltimes_V(2)").relabeled({3, 4, 0, 1, 2}),
           "semidirect construction equals catalog sl2_ltimes_V(2) after reordering");
}

void c7(Check& c) {
  const auto r = solve_commutative(catalog("sl2"), c.solve_options());
  c.require_conclusive(r, "sl2");
  c.expect(r.status == Status::Families && r.families.size() == 1, "one solution component");
  if (r.families.size() != 1) return;
  const auto& f = r.families[0];
  c.expect(f.params.empty() && f.resolved, "no free parameters");
  c.expect(f.verified && !f.sample_products.empty() && f.sample_products[0].is_zero(), "the point is the zero product");
}

bool same_left_ops(const ProductFamily& a, const ProductFamily& b) { return a.product() == b.product(); }

ClassificationResult classification(Check& c, const std::string& alg, const std::vector<std::string>& expected) {
  const auto g = catalog(alg);
  const auto aut = automorphisms(alg);
  c.expect(validate_aut(g, aut), "automorphism parametrization of " + alg + " validated");
  const auto res = classify_commutative(g, aut, class_representatives(alg), c.solve_options());
  c.require_conclusive(res.solve, alg);
  const auto names = res.class_names();
  c.expect(names == expected, "classes found: " + join(names));
  if (!res.missing.empty()) c.note("table classes not met: " + join(res.missing));
  bool reps_ok = true;
  for (const auto& cl : res.classes) {
    if (!cl.from_table) continue;
    const auto& rep = cl.representative;
    const auto shown = table(rep.name);
    if (!(rep.a == shown.a)) reps_ok = false;
    if (rep.nparams() == 0 && !product::verify_commutative(g, rep.product()).pass()) reps_ok = false;
    if (rep.nparams() == 0 && !same_left_ops(rep, shown)) reps_ok = false;
  }
  c.expect(reps_ok, "representatives verify and equal the displayed matrices");
  std::size_t fp = 0, cert = 0, other = 0;
  for (const auto& d : res.distinct) {
    if (d.result.answer != Answer::No) {
      ++other;
    } else if (d.result.evidence == "fingerprint") {
      ++fp;
    } else {
      ++cert;
    }
  }
  c.expect(other == 0, "pairwise distinct: " + std::to_string(fp) + " by invariants, " + std::to_string(cert) +
                           " by certificate, " + std::to_string(other) + " undecided");
  std::size_t points = 0, unmatched = 0;
  for (const auto& cov : res.coverage) {
    points += cov.points;
    unmatched += cov.unmatched;
  }
  c.expect(unmatched == 0 && points > 0, "coverage: " + std::to_string(res.coverage.size()) + " families, " +
                                             std::to_string(points) + " sampled members, all matched");
  return res;
}

void c8(Check& c) { classification(c, "r2", {"A1", "A2", "A3"}); }

void reduced_match(Check& c, const std::string& alg, const std::string& family, const std::string& label) {
  auto sys = setup_commutative(catalog(alg));
  c.expect(linear_stage(sys), alg + ": linear stage consistent");
  Budget b = c.budget();
  reduce_stage(sys, TermOrder{}, b);
  const auto m = match_linear_family(sys, table(family), b);
  c.expect(m.shape && m.invertible, alg + ": reduced family is an invertible linear reparametrization of " + label +
                                        " (" + std::to_string(sys.nvars()) + " parameters)");
  c.expect(m.constraints_equal, alg + ": residual constraints ideal-equal to the displayed conditions");
}

void c9(Check& c) {
  reduced_match(c, "r3_jordan", "B", "B(alpha,beta,gamma)");
  classification(c, "r3_jordan", {"B1", "B2", "B3", "B4"});
}

void c10(Check& c) {
  reduced_match(c, "heisenberg", "h1_family", "the seven-parameter family");
  const auto g = catalog("heisenberg");
  const auto aut = automorphisms("heisenberg");
  const auto c2 = table("C2");
  Budget b = c.budget();
  const auto r12 = isomorphic(g, c2.at({Rational(1)}), c2.at({Rational(2)}), aut, b);
  if (r12.answer == Answer::Inconclusive) throw Inconclusive{"C2(1) vs C2(2)"};
  c.expect(r12.answer == Answer::No, std::string("C2(1) vs C2(2): ") + solver::to_string(r12.answer) + " by " + r12.evidence);
  bool self = true;
  for (const auto& mu : poly::sample_sequence()) {
    Budget bb = c.budget();
    const auto r = isomorphic(g, c2.at({mu}), c2.at({mu}), aut, bb);
    self = self && r.answer == Answer::Yes && r.witness && c2.at({mu}).transported(*r.witness) == c2.at({mu});
  }
  c.expect(self, "C2(mu) vs C2(mu): yes with witness for mu in 0,1,-1,2,1/2");
  Budget bd = c.budget();
  const auto sep = parameter_distinct(g, c2, aut, bd);
  c.expect(sep.answer == Answer::No, std::string("C2(mu) vs C2(nu), mu != nu: ") + solver::to_string(sep.answer));
  const auto res = classification(c, "heisenberg", {"C1", "C2", "C3", "C4"});
  // Extra classes of the form x.y = B(x,y) e3: det B is preserved by every
  // automorphism, so each value is its own class.
  for (const auto& cl : res.classes) {
    if (cl.from_table) continue;
    const auto p = cl.representative.product();
    bool central = true;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        central = central && p.at(i, j, 0).is_zero() && p.at(i, j, 1).is_zero() && ((i < 2 && j < 2) || p.at(i, j, 2).is_zero());
      }
    }
    if (!central) {
      c.note(cl.representative.name + ": not of the form B(x,y) e3");
      continue;
    }
    const Rational det = p.at(0, 0, 2) * p.at(1, 1, 2) - p.at(0, 1, 2) * p.at(1, 0, 2);
    c.note(cl.representative.name + ": e1.e1 = " + p.at(0, 0, 2).str() + " e3, e1.e2 = " + p.at(0, 1, 2).str() +
           " e3, e2.e2 = " + p.at(1, 1, 2).str() + " e3; det B = " + det.str() + " (C4 has det B = 1)");
  }
}

void empty_pair(Check& c, const std::string& gname) {
  const PairOnSameSpace pair(catalog(gname), catalog("sl2"));
  const auto r = solve_pair(pair, c.solve_options());
  c.require_conclusive(r, gname);
  c.expect(r.status == Status::Empty, "(" + gname + ", sl2): " + solver::to_string(r.status) + ", certificate " +
                                          join(r.certificate));
  Budget b = c.budget();
  c.expect(recheck_empty(setup_phi(pair), TermOrder{poly::OrderKind::GrevLex, 0}, b),
           "(" + gname + ", sl2): recomputed basis of the full phi system is {1}");
}

void c11(Check& c) {
  empty_pair(c, "heisenberg");
  empty_pair(c, "abelian(3)");
}

void c12(Check& c) {
  const PairOnSameSpace pair(catalog("r3_diag(1)"), catalog("sl2"));
  const auto r = solve_pair(pair, c.solve_options());
  c.require_conclusive(r, "r3_diag(1)");
  c.expect(r.status == Status::Witness && r.mode == Mode::Phi, std::string("status ") + solver::to_string(r.status) +
                                                                   " in " + solver::to_string(r.mode) + " mode");
  if (!r.witness || !r.witness_phi) return;
  std::vector<std::size_t> ident;
  for (auto x : r.identification) ident.push_back(x + 1);
  c.note("identification of V with g: " + join(ident));
  const PairOnSameSpace used(pair.g.relabeled(r.identification), pair.n);
  c.expect(product::verify_pair(used, *r.witness).pass(), "witness passes the full axiom check");
  const auto phi = product::phi_to_product(*r.witness_phi, used);
  c.expect(phi.pass() && phi.product == *r.witness, "phi " + r.witness_phi->str() + " satisfies both phi conditions");
}

void c13(Check& c) {
  for (const char* alg : {"heisenberg", "f23"}) {
    const auto g = catalog(alg);
    const auto r = solve_commutative(g, c.solve_options());
    c.require_conclusive(r, alg);
    c.expect(r.status == Status::Families && !r.families.empty(), std::string(alg) + ": " +
                                                                     std::to_string(r.families.size()) + " families");
    for (std::size_t i = 0; i < r.families.size(); ++i) {
      Budget b = c.budget();
      const auto nil = family_left_nilpotent(r.families[i], g.dim(), b);
      const bool radical = std::all_of(r.families[i].sample_products.begin(), r.families[i].sample_products.end(),
                                       [&](const BilinearProduct& p) { return product::image_in_radical(g, p); });
      c.expect(nil.pass() && nil.symbolic_checked && nil.samples == 5 && radical,
               std::string(alg) + " family " + std::to_string(i + 1) + ": " + std::to_string(nil.samples) +
                   " samples nilpotent, symbolic " + (nil.symbolic ? "yes" : "no"));
    }
  }
}

void c14(Check& c) {
  const auto g = catalog("h1_plus_C");
  const auto p = table("h1_plus_C").product();
  c.expect(product::verify_commutative(g, p).pass(), "product passes the commutative axioms");
  const auto nil = product::all_left_nilpotent(p);
  c.expect(!nil.nilpotent, "not all L(x) nilpotent");
  c.expect(nil.witness && *nil.witness == exact::unit_vector(4, 0), "witness x = e1");
}

void c15(Check& c) {
  SolveOptions o = c.solve_options();
  o.search_identifications = false;
  const auto sl2 = catalog("sl2");
  struct Case {
    LieAlgebra g;
    std::string label;
    Rational scalar;
  };
  std::size_t points = 0;
  for (const Case& k : {Case{sl2, "(sl2, sl2)", Rational(0)}, Case{sl2.negated(), "(sl2 negated, sl2)", Rational(-1)}}) {
    const PairOnSameSpace pair(k.g, sl2);
    const auto r = solve_pair(pair, o);
    c.require_conclusive(r, k.label);
    const bool single = r.families.size() == 1 && r.families[0].params.empty() && r.families[0].resolved;
    c.expect(r.mode == Mode::Phi && single, k.label + ": phi variety is a single point");
    if (!single || !r.witness_phi) continue;
    points += 1;
    Matrix expect(3, 3);
    for (std::size_t i = 0; i < 3; ++i) expect(i, i) = k.scalar;
    c.expect(*r.witness_phi == expect, k.label + ": phi = " + r.witness_phi->str());
    c.expect(product::verify_pair(pair, *r.witness).pass(), k.label + ": structure verified");
    if (k.scalar != Rational(0)) {
      bool bracket = true;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) bracket = bracket && r.witness->mul(i, j) == k.g.bracket(i, j);
      }
      c.expect(bracket, k.label + ": x.y = [x,y] = -{x,y}");
    }
  }
  c.expect(points == 2, "two structures in total");
}

// true when the example verifies; false means a basis mismatch
bool c16(Check& c) {
  const auto ex = sl3_example();
  const PairOnSameSpace pair(ex.g, ex.n);
  const bool axioms = product::verify_pair(pair, ex.product).pass();
  const auto phi = product::phi_to_product(ex.phi, pair);
  c.expect(axioms, "listed products pass the three axioms");
  c.expect(phi.pass() && phi.product == ex.product, "phi conditions hold and phi induces the listed products");
  return axioms && phi.pass();
}

std::string dump_without(const SuiteOptions& opt) {
  std::vector<int> ids;
  for (const auto& cr : criteria()) {
    if (cr.id != 17) ids.push_back(cr.id);
  }
  return to_json(run_suite(opt, ids), opt).dump(2);
}

void c17(Check& c) {
  const std::string a = dump_without(c.opt);
  const std::string b = dump_without(c.opt);
  c.expect(a == b, "two runs of criteria 1-16 produce identical reports (" + std::to_string(a.size()) + " bytes, digest " +
                       io::digest(a) + ")");
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  CriterionResult res;
  res.id = id;
  Check c(opt);
  const auto start = std::chrono::steady_clock::now();
  bool contingent_ok = true;
  try {
    switch (id) {
      case 1: c1(c); break;
      case 2: c2(c); break;
      case 3: c3(c); break;
      case 4: c4(c); break;
      case 5: c5(c); break;
      case 6: c6(c); break;
      case 7: c7(c); break;
      case 8: c8(c); break;
      case 9: c9(c); break;
      case 10: c10(c); break;
      case 11: c11(c); break;
      case 12: c12(c); break;
      case 13: c13(c); break;
      case 14: c14(c); break;
      case 15: c15(c); break;
      case 16: contingent_ok = c16(c); break;
      case 17: c17(c); break;
      default: throw std::out_of_range("no criterion " + std::to_string(id));
    }
    res.outcome = c.ok ? Outcome::Pass : Outcome::Fail;
    if (id == 16 && !contingent_ok) {
      res.outcome = Outcome::Contingent;
      c.note("contingent: external basis reference needed");
    }
  } catch (const Inconclusive& e) {
    res.outcome = Outcome::Budget;
    c.note("inconclusive within budget: " + e.what);
  } catch (const poly::BudgetExhausted& e) {
    res.outcome = Outcome::Budget;
    c.note(std::string("inconclusive within budget: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& cr : criteria()) {
    if (cr.id == id && res.seconds > cr.limit_seconds) {
      res.over_time = true;
      if (res.outcome == Outcome::Pass) res.outcome = Outcome::Fail;
    }
  }
  res.details = std::move(c.lines);
  return res;
}

bool SuiteReport::ok() const {
  return std::none_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.outcome == Outcome::Fail; });
}

SuiteReport run_suite(const SuiteOptions& opt, const std::vector<int>& ids,
                      const std::function<void(const CriterionResult&)>& progress) {
  SuiteReport rep;
  for (const auto& c : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    rep.results.push_back(run_criterion(c.id, opt));
    if (progress) progress(rep.results.back());
  }
  return rep;
}

io::Json to_json(const SuiteReport& r, const SuiteOptions& opt) {
  io::Json j;
  j["command"] = "paper-suite";
  j["budget"] = opt.budget;
  io::Json items = io::Json::array();
  for (const auto& x : r.results) {
    std::string title;
    for (const auto& c : criteria()) {
      if (c.id == x.id) title = c.title;
    }
    items.push_back({{"id", x.id}, {"title", title}, {"outcome", to_string(x.outcome)}, {"over_time", x.over_time}, {"details", x.details}});
  }
  j["criteria"] = items;
  j["ok"] = r.ok();
  return j;
}

}  // namespace postlie::suite

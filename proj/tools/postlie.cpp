// postlie command-line front end.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "postlie/deriv/derivations.hpp"
#include "postlie/error.hpp"
#include "postlie/io/io.hpp"
#include "postlie/lie/catalog.hpp"
#include "postlie/lie/structure.hpp"
#include "postlie/solver/classify.hpp"
#include "postlie/solver/tables.hpp"
#include "postlie/suite/suite.hpp"

using namespace postlie;
using io::Json;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kInput = 2, kEmpty = 3, kInconclusive = 4 };

struct Config {
  std::string order = "lex";
  std::size_t split_depth = 6;
  std::size_t budget = 0;  // 0: default or POSTLIE_BUDGET
  std::string format = "text";
  bool show_basis = false;
  std::vector<std::string> param_text;

  std::vector<exact::Rational> params() const {
    std::vector<exact::Rational> out;
    for (const auto& p : param_text) {
      try {
        out.push_back(exact::Rational::parse(p));
      } catch (const std::exception&) {
        throw InputError("--param expects a rational, got '" + p + "'");
      }
    }
    return out;
  }
  std::size_t effective_budget() const {
    if (budget) return budget;
    if (const char* env = std::getenv("POSTLIE_BUDGET")) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (!*env || *end || v == 0) throw InputError("POSTLIE_BUDGET must be a positive integer");
      return v;
    }
    return poly::kDefaultBudget;
  }
  solver::SolveOptions solve_options() const {
    if (split_depth > 12) throw InputError("--split-depth must be at most 12");
    solver::SolveOptions o;
    o.order = poly::TermOrder{poly::parse_order(order), 0};
    o.split_depth = split_depth;
    o.budget = effective_budget();
    return o;
  }
  bool json() const { return format == "json"; }
};

// --param fills a parameterized catalog entry given without inline values.
lie::LieAlgebra load_algebra(const std::string& arg, const Config& cfg) {
  const auto params = cfg.params();
  if (params.empty() || arg.find('(') != std::string::npos) return io::resolve_algebra(arg);
  try {
    return io::resolve_algebra(arg, params);
  } catch (const InputError&) {
    return io::resolve_algebra(arg);
  }
}

std::string matrix_text(const exact::Matrix& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(m(r, c).str());
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = cells[r * m.cols() + c];
      s << (c ? " " : "") << std::string(width - x.size(), ' ') << x;
    }
    s << "]\n";
  }
  return s.str();
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

Json envelope(const std::string& command, const std::vector<std::string>& inputs, const std::vector<Json>& canon,
              Json result) {
  std::string all;
  for (const auto& c : canon) all += c.dump();
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["inputs_digest"] = io::digest(all);
  j["result"] = std::move(result);
  return j;
}

void emit(const Config& cfg, const Json& report, const std::string& text,
          std::chrono::steady_clock::time_point start) {
  if (cfg.json()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << text;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("time: %.3fs\n", secs);
}

// ---- analyze ----

int cmd_analyze(const std::string& arg, const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = load_algebra(arg, cfg);
  const auto pr = lie::predicates(g);
  const auto lcs = lie::series_dims(g, lie::SeriesKind::LowerCentral);
  const auto ds = lie::series_dims(g, lie::SeriesKind::Derived);
  const auto rad = lie::killing_radical(g);
  const auto io_dims = deriv::inner_and_outer(g);
  const auto der = deriv::derivations(g);
  Json r;
  r["dim"] = g.dim();
  r["predicates"] = {{"is_nilpotent", pr.is_nilpotent}, {"is_solvable", pr.is_solvable}, {"is_perfect", pr.is_perfect},
                     {"is_semisimple", pr.is_semisimple}, {"is_unimodular", pr.is_unimodular},
                     {"center_dim", pr.center_dim}};
  r["lower_central_dims"] = lcs;
  r["derived_dims"] = ds;
  r["radical_dim"] = rad.dim();
  r["dim_der"] = io_dims.dim_der;
  r["dim_inner"] = io_dims.dim_inner;
  r["dim_H1"] = io_dims.dim_H1;
  if (cfg.show_basis) r["derivations"] = io::to_json(der, true);
  std::ostringstream t;
  t << "algebra " << arg << " (dim " << g.dim() << ")\n";
  t << "  nilpotent " << pr.is_nilpotent << ", solvable " << pr.is_solvable << ", perfect " << pr.is_perfect
    << ", semisimple " << pr.is_semisimple << ", unimodular " << pr.is_unimodular << "\n";
  t << "  center dim " << pr.center_dim << ", radical dim " << rad.dim() << "\n";
  t << "  lower central series dims " << join(lcs) << "\n";
  t << "  derived series dims " << join(ds) << "\n";
  t << "  dim Der " << io_dims.dim_der << ", dim ad " << io_dims.dim_inner << ", dim H1(g,g) " << io_dims.dim_H1 << "\n";
  if (cfg.show_basis) {
    std::size_t i = 0;
    for (const auto& m : der.basis()) t << "  D" << ++i << ":\n" << matrix_text(m, "    ");
  }
  emit(cfg, envelope("analyze", {arg}, {io::to_json(g)}, r), t.str(), start);
  return kOk;
}

// ---- derivations ----

int cmd_derivations(const std::string& arg, const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = load_algebra(arg, cfg);
  const auto der = deriv::derivations(g);
  const auto inner = deriv::inner_derivations(g);
  const auto d = deriv::d011(g);
  Json r;
  r["der"] = io::to_json(der, cfg.show_basis);
  r["inner"] = io::to_json(inner, cfg.show_basis);
  r["dim_H1"] = der.dim() - inner.dim();
  r["d011"] = io::to_json(d, cfg.show_basis);
  std::ostringstream t;
  t << "dim Der " << der.dim() << ", dim ad " << inner.dim() << ", dim H1(g,g) " << der.dim() - inner.dim()
    << ", dim D(0,1,1) " << d.dim() << "\n";
  if (cfg.show_basis) {
    std::size_t i = 0;
    for (const auto& m : der.basis()) t << "D" << ++i << ":\n" << matrix_text(m, "  ");
    i = 0;
    for (const auto& m : d.basis()) t << "D011_" << ++i << ":\n" << matrix_text(m, "  ");
  }
  emit(cfg, envelope("derivations", {arg}, {io::to_json(g)}, r), t.str(), start);
  return kOk;
}

// ---- verify-product ----

int cmd_verify(const std::vector<std::string>& args, const std::string& mode, const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const bool pair_mode = mode == "pair";
  if (args.size() != (pair_mode ? 3U : 2U)) {
    throw InputError(pair_mode ? "pair mode needs G N PRODUCT" : "commutative mode needs G PRODUCT");
  }
  const auto g = load_algebra(args[0], cfg);
  const auto n = pair_mode ? load_algebra(args[1], cfg) : g;
  const auto p = io::resolve_product(args.back());
  if (p.dim() != g.dim() || n.dim() != g.dim()) throw InputError("dimension mismatch between algebras and product");
  const lie::PairOnSameSpace pair(g, n);
  const auto rep = pair_mode ? product::verify_pair(pair, p) : product::verify_commutative(g, p);
  const auto nil = product::all_left_nilpotent(p);
  Json r;
  r["mode"] = mode;
  r["axioms"] = io::to_json(rep);
  r["all_left_nilpotent"] = nil.nilpotent;
  if (nil.witness) r["nilpotency_witness"] = io::to_json(*nil.witness);
  if (rep.pass()) {
    const auto ops = product::left_ops(pair, p);
    r["left_ops_in_der"] = ops.pass();
    if (!pair_mode) {
      r["fingerprint"] = io::to_json(product::invariants(g, p));
      r["image_in_radical"] = product::image_in_radical(g, p);
    }
  }
  std::ostringstream t;
  t << (rep.pass() ? "PASS" : "FAIL") << " (" << mode << ")\n";
  for (const auto& c : rep.checks) {
    t << "  " << c.name << ": " << (c.pass() ? "ok" : std::to_string(c.residuals.size()) + " violations") << "\n";
    std::size_t shown = 0;
    for (const auto& x : c.residuals) {
      if (++shown > 10) {
        t << "    ...\n";
        break;
      }
      t << "    (e" << x.i + 1 << ", e" << x.j + 1 << ", e" << x.k + 1 << "): defect " << exact::to_string(x.defect) << "\n";
    }
  }
  for (std::size_t i = 0; i < p.dim(); ++i) t << "  L(e" << i + 1 << "):\n" << matrix_text(p.left(i), "    ");
  if (!nil.nilpotent) {
    t << "  warning: not all L(x) are nilpotent";
    if (nil.witness) t << ", e.g. x = " << exact::to_string(*nil.witness);
    t << "\n";
  }
  std::vector<Json> canon = {io::to_json(g)};
  if (pair_mode) canon.push_back(io::to_json(n));
  canon.push_back(io::to_json(p));
  emit(cfg, envelope("verify-product", args, canon, r), t.str(), start);
  return rep.pass() ? kOk : kVerifyFail;
}

// ---- solve ----

std::string solve_text(const solver::SolveReport& r) {
  std::ostringstream t;
  t << "status: " << solver::to_string(r.status) << " (" << solver::to_string(r.mode) << " system, " << r.unknowns
    << " unknowns, " << r.kernel_params << " after the linear stage)\n";
  if (!r.note.empty()) t << "note: " << r.note << "\n";
  if (r.status == solver::Status::Empty) t << "certificate: Groebner basis {" << join(r.certificate) << "}\n";
  const auto& names = r.reduced.names;
  if (!r.reduced.nonlinear.empty() && r.status != solver::Status::Empty) {
    t << "reduced constraints in " << join(names) << ":\n";
    for (const auto& p : r.reduced.nonlinear) t << "  " << p.str(names) << " = 0\n";
  }
  std::size_t i = 0;
  for (const auto& f : r.families) {
    t << "family " << ++i << ": params [" << join(f.params) << "]" << (f.resolved ? "" : " (unresolved)")
      << ", " << f.samples.size() << " samples " << (f.verified ? "verified" : "NOT verified") << "\n";
    for (const auto& c : f.constraints) t << "  constraint " << c.str(names) << " = 0\n";
    for (const auto& c : f.nonvanishing) t << "  assume " << c.str(names) << " != 0\n";
    const std::size_t n = r.reduced.dim;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::string> terms;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& e = f.product[(a * n + b) * n + k];
          if (e.num.is_zero()) continue;
          const std::string v = e.den.is_constant() ? (e.num * e.den.constant_term().inverse()).str(names)
                                                     : "(" + e.num.str(names) + ")/(" + e.den.str(names) + ")";
          terms.push_back("(" + v + ") e" + std::to_string(k + 1));
        }
        if (!terms.empty()) t << "  e" << a + 1 << ".e" << b + 1 << " = " << join(terms, " + ") << "\n";
      }
    }
  }
  if (r.witness) {
    t << "witness:\n";
    for (std::size_t a = 0; a < r.witness->dim(); ++a) t << "  L(e" << a + 1 << "):\n" << matrix_text(r.witness->left(a), "    ");
  }
  if (r.witness_phi) t << "phi:\n" << matrix_text(*r.witness_phi, "  ");
  t << "budget used: " << r.budget_used << "\n";
  return t.str();
}

int solve_exit(const solver::SolveReport& r) {
  if (r.status == solver::Status::Empty) return kEmpty;
  if (r.status == solver::Status::Inconclusive) return kInconclusive;
  return kOk;
}

int cmd_solve(const std::vector<std::string>& pair_args, const std::string& comm_arg, bool no_search, const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  auto opt = cfg.solve_options();
  opt.search_identifications = !no_search;
  if (!pair_args.empty() == !comm_arg.empty()) throw InputError("give exactly one of --pair G N or --commutative G");
  solver::SolveReport r;
  std::vector<std::string> inputs;
  std::vector<Json> canon;
  if (!pair_args.empty()) {
    const auto g = load_algebra(pair_args[0], cfg);
    const auto n = load_algebra(pair_args[1], cfg);
    if (g.dim() != n.dim()) throw InputError("g and n must have the same dimension");
    r = solver::solve_pair(lie::PairOnSameSpace(g, n), opt);
    inputs = pair_args;
    canon = {io::to_json(g), io::to_json(n)};
  } else {
    const auto g = load_algebra(comm_arg, cfg);
    r = solver::solve_commutative(g, opt);
    inputs = {comm_arg};
    canon = {io::to_json(g)};
  }
  emit(cfg, envelope("solve", inputs, canon, io::to_json(r)), solve_text(r), start);
  return solve_exit(r);
}

// ---- classify ----

int cmd_classify(const std::string& arg, const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::string prefix = "catalog:";
  if (arg.rfind(prefix, 0) != 0) throw InputError("classify works on catalog:r2, catalog:r3_jordan, catalog:heisenberg");
  const std::string name = arg.substr(prefix.size());
  const auto g = lie::catalog(name);
  const auto aut = solver::automorphisms(name);
  if (!solver::validate_aut(g, aut)) throw InputError("automorphism parametrization failed validation");
  const auto res = solver::classify_commutative(g, aut, solver::class_representatives(name), cfg.solve_options());
  std::ostringstream t;
  t << "classes on " << name << ": " << join(res.class_names()) << (res.complete() ? "" : "  (incomplete evidence)") << "\n";
  for (const auto& c : res.classes) {
    t << c.representative.name << (c.from_table ? "" : " (new)") << ", " << c.members << " sampled members";
    if (c.representative.nparams()) t << ", parameters " << join(c.representative.params);
    t << "\n";
    if (c.representative.nparams() == 0) {
      const auto p = c.representative.product();
      for (std::size_t i = 0; i < p.dim(); ++i) t << "  L(e" << i + 1 << "):\n" << matrix_text(p.left(i), "    ");
    }
  }
  if (!res.missing.empty()) t << "table classes not met: " << join(res.missing) << "\n";
  t << "distinctness:\n";
  for (const auto& d : res.distinct) {
    t << "  " << res.classes[d.a].representative.name;
    if (d.a == d.b) {
      t << " at different parameters";
    } else {
      t << " vs " << res.classes[d.b].representative.name;
    }
    t << ": " << (d.result.answer == solver::Answer::No ? "distinct" : solver::to_string(d.result.answer)) << " ("
      << d.result.evidence << ")\n";
  }
  t << "coverage:\n";
  for (const auto& c : res.coverage) {
    t << "  family " << c.family + 1 << ": " << c.points << " members -> " << join(c.classes);
    if (c.unmatched) t << ", " << c.unmatched << " unmatched";
    t << "\n";
  }
  if (!res.note.empty()) t << "note: " << res.note << "\n";
  emit(cfg, envelope("classify", {arg}, {io::to_json(g)}, io::to_json(res)), t.str(), start);
  if (res.solve.status == solver::Status::Inconclusive) return kInconclusive;
  return kOk;
}

// ---- paper-suite ----

int cmd_suite(bool list, const std::vector<int>& only, const Config& cfg) {
  if (list) {
    for (const auto& c : suite::criteria()) {
      std::printf("%2d  %s%s\n", c.id, c.title.c_str(), c.contingent ? "  [contingent]" : "");
    }
    return kOk;
  }
  suite::SuiteOptions opt;
  opt.budget = cfg.effective_budget();
  const auto rep = suite::run_suite(opt, only, [&](const suite::CriterionResult& r) {
    if (cfg.json()) return;
    std::printf("%2d  %-10s (%.2fs)\n", r.id, suite::to_string(r.outcome), r.seconds);
    for (const auto& d : r.details) std::printf("      %s\n", d.c_str());
    std::fflush(stdout);
  });
  if (cfg.json()) std::cout << suite::to_json(rep, opt).dump(2) << "\n";
  return rep.ok() ? kOk : kVerifyFail;
}

// ---- catalog ----

int cmd_catalog(const std::string& name, const Config& cfg) {
  if (name.empty()) {
    for (const auto& e : lie::catalog_entries()) {
      std::printf("%-16s %zu param%s  %s\n", e.name.c_str(), e.nparams, e.nparams == 1 ? " " : "s", e.description.c_str());
    }
    std::printf("tables:");
    for (const auto& t : solver::table_names()) std::printf(" %s", t.c_str());
    std::printf("\n");
    return kOk;
  }
  const auto g = load_algebra(name.rfind("catalog:", 0) == 0 ? name : "catalog:" + name, cfg);
  std::cout << io::to_json(g).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"post-Lie algebra structures: verification, solving and classification"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "term order")->check(CLI::IsMember({"lex", "grevlex"}));
    sub->add_option("--split-depth", cfg.split_depth, "case split depth (<= 12)");
    sub->add_option("--budget", cfg.budget, "reduction step budget")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--show-basis", cfg.show_basis, "print basis matrices");
    sub->add_option("--param", cfg.param_text, "parameter for a parameterized catalog algebra");
  };

  std::string alg;
  auto* analyze = app.add_subcommand("analyze", "predicates, series, radical, derivation dimensions");
  analyze->add_option("algebra", alg, "catalog:NAME or JSON file")->required();
  common(analyze);

  std::string deriv_alg;
  auto* derivs = app.add_subcommand("derivations", "Der, ad, H1 and D(0,1,1)");
  derivs->add_option("algebra", deriv_alg)->required();
  common(derivs);

  std::vector<std::string> vargs;
  std::string mode = "commutative";
  auto* verify = app.add_subcommand("verify-product", "check the axioms for a product");
  verify->add_option("inputs", vargs, "G [N] PRODUCT (table:NAME or JSON file)")->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"pair", "commutative"}));
  common(verify);

  std::vector<std::string> pair_args;
  std::string comm_arg;
  bool no_search = false;
  auto* solve = app.add_subcommand("solve", "solve for all structures");
  solve->add_option("--pair", pair_args, "G N")->expected(2);
  solve->add_option("--commutative", comm_arg, "G");
  solve->add_flag("--no-identification-search", no_search, "keep V's basis identification fixed");
  common(solve);

  std::string cls_alg;
  auto* classify = app.add_subcommand("classify", "classify commutative structures up to isomorphism");
  classify->add_option("algebra", cls_alg)->required();
  common(classify);

  bool list = false;
  std::vector<int> only;
  auto* suite_cmd = app.add_subcommand("paper-suite", "run the reproduction criteria");
  suite_cmd->add_flag("--list", list, "list criteria without running");
  suite_cmd->add_option("--only", only, "criterion ids");
  common(suite_cmd);

  std::string cat_name;
  auto* cat = app.add_subcommand("catalog", "list algebras or export one as JSON");
  cat->add_option("name", cat_name);
  common(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    if (*analyze) return cmd_analyze(alg, cfg);
    if (*derivs) return cmd_derivations(deriv_alg, cfg);
    if (*verify) return cmd_verify(vargs, mode, cfg);
    if (*solve) return cmd_solve(pair_args, comm_arg, no_search, cfg);
    if (*classify) return cmd_classify(cls_alg, cfg);
    if (*suite_cmd) return cmd_suite(list, only, cfg);
    if (*cat) return cmd_catalog(cat_name, cfg);
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInput;
  }
  return kOk;
}

#include "postlie/io/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "postlie/error.hpp"
#include "postlie/lie/catalog.hpp"
#include "postlie/solver/tables.hpp"

namespace postlie::io {

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const exact::Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

namespace {

Json coeffs(const exact::Vector& v) {
  Json c = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) c[std::to_string(k + 1)] = v[k].str();
  }
  return c;
}

std::size_t get_index(const Json& e, const char* key, std::size_t dim) {
  if (!e.contains(key) || !e[key].is_number_integer()) throw InputError(std::string("entry needs integer \"") + key + "\"");
  const auto v = e[key].get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) throw InputError(std::string("index \"") + key + "\" out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

Rational get_rational(const Json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  throw InputError("coefficients must be strings \"p/q\" or integers");
}

exact::Vector read_coeffs(const Json& e, std::size_t dim) {
  exact::Vector v(dim);
  if (!e.contains("coeffs")) return v;
  if (!e["coeffs"].is_object()) throw InputError("\"coeffs\" must be an object");
  for (const auto& [key, val] : e["coeffs"].items()) {
    std::size_t k = 0;
    try {
      k = std::stoul(key);
    } catch (const std::exception&) {
      throw InputError("bad coefficient index '" + key + "'");
    }
    if (k < 1 || k > dim) throw InputError("coefficient index " + key + " out of range");
    try {
      v[k - 1] = get_rational(val);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("bad rational in coefficient " + key);
    }
  }
  return v;
}

std::size_t get_dim(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) throw InputError("missing integer \"dim\"");
  const auto d = j["dim"].get<long long>();
  if (d < 1 || d > 64) throw InputError("\"dim\" must be between 1 and 64");
  return static_cast<std::size_t>(d);
}

std::string rf_str(const poly::RationalFunction& f, const std::vector<std::string>& names) {
  if (f.den.is_constant()) return (f.num * f.den.constant_term().inverse()).str(names);
  return "(" + f.num.str(names) + ")/(" + f.den.str(names) + ")";
}

Json strings(const std::vector<poly::Polynomial>& polys, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.str(names));
  return out;
}

}  // namespace

Json to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  j["basis"] = g.names();
  Json br = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      const auto v = g.bracket(i, k);
      if (exact::is_zero(v)) continue;
      br.push_back({{"i", i + 1}, {"j", k + 1}, {"coeffs", coeffs(v)}});
    }
  }
  j["brackets"] = br;
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::size_t dim = get_dim(j);
  std::vector<std::string> names;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != dim) throw InputError("\"basis\" must list dim names");
    for (const auto& n : j["basis"]) {
      if (!n.is_string()) throw InputError("basis names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  std::vector<LieAlgebra::Bracket> brackets;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw InputError("\"brackets\" must be an array");
    for (const auto& e : j["brackets"]) {
      const std::size_t i = get_index(e, "i", dim);
      const std::size_t k = get_index(e, "j", dim);
      if (i >= k) throw InputError("brackets need i < j");
      for (const auto& b : brackets) {
        if (b.i == i && b.j == k) throw InputError("bracket listed twice");
      }
      brackets.push_back({i, k, read_coeffs(e, dim)});
    }
  }
  return LieAlgebra::from_brackets(dim, brackets, names);
}

Json to_json(const BilinearProduct& p) {
  Json j;
  j["dim"] = p.dim();
  Json pr = Json::array();
  for (const auto& e : p.entries()) pr.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"coeffs", coeffs(e.value)}});
  j["products"] = pr;
  return j;
}

BilinearProduct product_from_json(const Json& j) {
  const std::size_t dim = get_dim(j);
  std::vector<BilinearProduct::Entry> entries;
  if (j.contains("products")) {
    if (!j["products"].is_array()) throw InputError("\"products\" must be an array");
    for (const auto& e : j["products"]) {
      const std::size_t i = get_index(e, "i", dim);
      const std::size_t k = get_index(e, "j", dim);
      for (const auto& b : entries) {
        if (b.i == i && b.j == k) throw InputError("product listed twice");
      }
      entries.push_back({i, k, read_coeffs(e, dim)});
    }
  }
  return BilinearProduct::from_entries(dim, entries);
}

Json to_json(const product::AxiomReport& r) {
  Json j;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json res = Json::array();
    for (const auto& x : c.residuals) {
      res.push_back({{"i", x.i + 1}, {"j", x.j + 1}, {"k", x.k + 1}, {"defect", to_json(x.defect)}});
    }
    checks.push_back({{"identity", c.name}, {"pass", c.pass()}, {"residuals", res}});
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const product::Fingerprint& f) {
  return {{"image_dim", f.image_dim},
          {"annihilator_dim", f.annihilator_dim},
          {"left_map_rank", f.left_map_rank},
          {"generic_left_rank", f.generic_left_rank},
          {"image_in_derived_dim", f.image_in_derived_dim},
          {"all_left_nilpotent", f.all_left_nilpotent}};
}

Json to_json(const solver::SolveReport& r) {
  const auto& names = r.reduced.names;
  Json j;
  j["status"] = solver::to_string(r.status);
  j["mode"] = solver::to_string(r.mode);
  j["unknowns"] = r.unknowns;
  j["kernel_params"] = r.kernel_params;
  j["certificate"] = r.certificate;
  Json ident = Json::array();
  for (auto x : r.identification) ident.push_back(x + 1);
  j["identification"] = ident;
  if (r.status != solver::Status::Inconclusive && r.status != solver::Status::Empty) {
    j["reduced_params"] = names;
    j["reduced_constraints"] = strings(r.reduced.nonlinear, names);
  }
  Json fams = Json::array();
  for (const auto& f : r.families) {
    Json fj;
    fj["params"] = f.params;
    const std::size_t n = r.reduced.dim;
    Json prods = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        Json c = Json::object();
        for (std::size_t l = 0; l < n; ++l) {
          const auto& e = f.product[(i * n + k) * n + l];
          if (!e.num.is_zero()) c[std::to_string(l + 1)] = rf_str(e, names);
        }
        if (!c.empty()) prods.push_back({{"i", i + 1}, {"j", k + 1}, {"coeffs", c}});
      }
    }
    fj["product"] = {{"dim", n}, {"products", prods}};
    if (!f.phi.empty()) {
      Json phi = Json::array();
      for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(rf_str(f.phi[a * n + b], names));
        phi.push_back(row);
      }
      fj["phi"] = phi;
    }
    fj["constraints"] = strings(f.constraints, names);
    fj["nonvanishing"] = strings(f.nonvanishing, names);
    fj["resolved"] = f.resolved;
    fj["samples"] = f.samples.size();
    fj["verified"] = f.verified;
    fams.push_back(fj);
  }
  j["families"] = fams;
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.witness_phi) j["witness_phi"] = to_json(*r.witness_phi);
  j["budget_used"] = r.budget_used;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const solver::IsoResult& r) {
  Json j;
  j["answer"] = solver::to_string(r.answer);
  j["evidence"] = r.evidence;
  if (!r.certificate.empty()) j["certificate"] = r.certificate;
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json to_json(const solver::ClassificationResult& r) {
  Json j;
  j["complete"] = r.complete();
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json cj;
    cj["name"] = c.representative.name;
    cj["from_table"] = c.from_table;
    cj["params"] = c.representative.params;
    cj["members"] = c.members;
    if (c.fingerprint) {
      cj["fingerprint"] = to_json(*c.fingerprint);
      cj["product"] = to_json(c.representative.product());
    } else {
      Json coeffs = Json::array();
      for (const auto& p : c.representative.a) coeffs.push_back(p.str(c.representative.params));
      cj["coefficients"] = coeffs;
    }
    classes.push_back(cj);
  }
  j["classes"] = classes;
  j["missing"] = r.missing;
  Json dist = Json::array();
  for (const auto& d : r.distinct) {
    Json dj = to_json(d.result);
    dj["a"] = r.classes[d.a].representative.name;
    dj["b"] = r.classes[d.b].representative.name;
    dist.push_back(dj);
  }
  j["distinctness"] = dist;
  Json cov = Json::array();
  for (const auto& c : r.coverage) {
    cov.push_back({{"family", c.family + 1}, {"points", c.points}, {"classes", c.classes}, {"unmatched", c.unmatched}});
  }
  j["coverage"] = cov;
  j["solve"] = to_json(r.solve);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const deriv::MatrixSpace& s, bool show_basis) {
  Json j;
  j["dim"] = s.dim();
  if (show_basis) {
    Json b = Json::array();
    for (const auto& m : s.basis()) b.push_back(to_json(m));
    j["basis"] = b;
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

LieAlgebra resolve_algebra(const std::string& arg, const std::vector<Rational>& params) {
  static const std::string prefix = "catalog:";
  if (arg.rfind(prefix, 0) == 0) return lie::catalog(arg.substr(prefix.size()), params);
  return algebra_from_json(read_json_file(arg));
}

BilinearProduct resolve_product(const std::string& arg) {
  static const std::string prefix = "table:";
  if (arg.rfind(prefix, 0) == 0) {
    const auto f = solver::table(arg.substr(prefix.size()));
    if (f.nparams()) throw InputError("table " + f.name + " needs parameter values, e.g. table:" + f.name + "(1)");
    return f.product();
  }
  return product_from_json(read_json_file(arg));
}

}  // namespace postlie::io

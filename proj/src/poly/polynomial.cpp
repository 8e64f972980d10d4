#include "postlie/poly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace postlie::poly {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] && other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = static_cast<Monomial::Exponent>(r.exps_[i] + b.exps_[i]);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    if (b.exps_[i] > r.exps_[i]) throw std::logic_error("monomial division is not exact");
    r.exps_[i] = static_cast<Monomial::Exponent>(r.exps_[i] - b.exps_[i]);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], b.exps_[i]);
  return r;
}

bool lex_less(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  const std::size_t head = n - std::min(eliminate_tail, n);
  if (head < n) {
    if (const int c = cmp_grevlex(a, b, head, n); c != 0) return c;
  }
  return kind == OrderKind::Lex ? cmp_lex(a, b, 0, head) : cmp_grevlex(a, b, 0, head);
}

const char* to_string(OrderKind kind) { return kind == OrderKind::Lex ? "lex" : "grevlex"; }

OrderKind parse_order(const std::string& text) {
  if (text == "lex") return OrderKind::Lex;
  if (text == "grevlex") return OrderKind::GrevLex;
  throw std::invalid_argument("unknown term order '" + text + "'");
}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mono.nvars() != nvars_) throw std::invalid_argument("term over a different variable set");
  }
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return lex_less(b.mono, a.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, var), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (involves(v)) out.push_back(v);
  }
  return out;
}

Polynomial Polynomial::coefficient_of(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] != k) continue;
    auto e = t.mono.exponents();
    e[var] = 0;
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return {nvars_, std::move(out)};
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && !v.is_zero(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(nvars_, Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  return substitute_fraction(var, value, constant(nvars_, Rational(1)));
}

Polynomial Polynomial::substitute_fraction(std::size_t var, const Polynomial& num, const Polynomial& den) const {
  const unsigned d = degree_in(var);
  if (d == 0) return *this;
  std::vector<Polynomial> num_pows{constant(nvars_, Rational(1))};
  std::vector<Polynomial> den_pows{constant(nvars_, Rational(1))};
  for (unsigned k = 1; k <= d; ++k) {
    num_pows.push_back(num_pows.back() * num);
    den_pows.push_back(den_pows.back() * den);
  }
  Polynomial out(nvars_);
  for (unsigned k = 0; k <= d; ++k) {
    Polynomial c = coefficient_of(var, k);
    if (c.is_zero()) continue;
    out += c * num_pows[k] * den_pows[d - k];
  }
  return out;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("compose: wrong number of values");
  const std::size_t target = values.empty() ? 0 : values[0].nvars();
  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i]) term = term * values[i].pow(t.mono[i]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::remap(std::size_t nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw std::invalid_argument("remap: map size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> e(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i]) e.at(map[i]) = static_cast<Monomial::Exponent>(e.at(map[i]) + t.mono[i]);
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return {nvars, std::move(out)};
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_);
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) g = gcd(g, t.mono);
  return g;
}

Polynomial Polynomial::strip_variable_factors(std::span<const std::size_t> vars) const {
  if (terms_.empty()) return *this;
  const Monomial content = monomial_content();
  std::vector<Monomial::Exponent> e(nvars_, 0);
  bool any = false;
  for (auto v : vars) {
    if (content[v]) {
      e[v] = content[v];
      any = true;
    }
  }
  if (!any) return *this;
  const Monomial div(std::move(e));
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.mono / div, t.coeff});
  return {nvars_, std::move(out)};
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return terms_.front().coeff.inverse() * *this;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class den = 1;
  for (const auto& t : terms_) {
    mpz_class d = t.coeff.value().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_class n = t.coeff.value().get_num() * (den / t.coeff.value().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(mpq_class(den, g));
  if (terms_.front().coeff.sign() < 0) scale = -scale;
  return scale * *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && lex_less(o.terms_[j].mono, terms_[i].mono))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || lex_less(terms_[i].mono, o.terms_[j].mono)) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({std::move(terms_[i].mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r(a);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial(std::max(a.nvars_, b.nvars_));
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return {a.nvars_, std::move(out)};
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.nvars_ != b.nvars_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  if (names.size() < nvars_) throw std::invalid_argument("not enough variable names");
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  const TermOrder graded{OrderKind::GrevLex, 0};
  std::stable_sort(order.begin(), order.end(),
                   [&](const Term* a, const Term* b) { return graded.compare(a->mono, b->mono) > 0; });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coeff;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    c = c.abs();
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t->mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t->mono[i] > 1) mono += "^" + std::to_string(t->mono[i]);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  Polynomial out(n);
  std::string body = strip(text);
  if (body == "0") return out;
  // Split into signed terms at top-level '+' / '-' (a sign right after '^'
  // or at the very start belongs to the term).
  std::vector<std::pair<int, std::string>> pieces;
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    if ((ch == '+' || ch == '-') && !strip(cur).empty() && strip(cur).back() != '^' && strip(cur).back() != '*') {
      pieces.emplace_back(sign, strip(cur));
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else if ((ch == '+' || ch == '-') && strip(cur).empty()) {
      if (ch == '-') sign = -sign;
    } else {
      cur += ch;
    }
  }
  if (!strip(cur).empty()) pieces.emplace_back(sign, strip(cur));
  if (pieces.empty()) throw std::invalid_argument("empty polynomial text");
  for (const auto& [sg, term] : pieces) {
    Rational coeff(sg);
    std::vector<Monomial::Exponent> e(n, 0);
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      if (star == std::string::npos) star = term.size();
      const std::string factor = strip(term.substr(start, star - start));
      if (factor.empty()) throw std::invalid_argument("malformed term '" + term + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coeff *= Rational::parse(factor);
      } else {
        const auto caret = factor.find('^');
        const std::string name = strip(factor.substr(0, caret));
        const unsigned power = caret == std::string::npos ? 1 : static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw std::invalid_argument("unknown variable '" + name + "'");
        auto& slot = e[static_cast<std::size_t>(it - names.begin())];
        slot = static_cast<Monomial::Exponent>(slot + power);
      }
      start = star + 1;
    }
    out += Polynomial::monomial(Monomial(std::move(e)), coeff);
  }
  return out;
}

std::vector<std::string> default_names(std::size_t nvars, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace postlie::poly

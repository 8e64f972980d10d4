#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "postlie/exact/rational.hpp"

namespace postlie::poly {

using exact::Rational;

/// Exponent vector over a fixed ambient variable set.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  static Monomial variable(std::size_t nvars, std::size_t var, Exponent power = 1);

  [[nodiscard]] std::size_t nvars() const { return exps_.size(); }
  [[nodiscard]] Exponent operator[](std::size_t i) const { return exps_[i]; }
  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] bool coprime(const Monomial& other) const;
  [[nodiscard]] const std::vector<Exponent>& exponents() const { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; the divisor must divide.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic comparison of exponent vectors (variable 0 largest).
  friend bool lex_less(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
};

enum class OrderKind { Lex, GrevLex };

/// Term order. When `eliminate_tail` > 0 the last that many variables form an
/// elimination block: monomials are compared first by their total degree in
/// the tail block (higher wins), then by grevlex on the tail block, then by
/// `kind` on the remaining leading variables.
struct TermOrder {
  OrderKind kind = OrderKind::Lex;
  std::size_t eliminate_tail = 0;

  /// Negative, zero, positive as a <, =, > b.
  [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

const char* to_string(OrderKind kind);
OrderKind parse_order(const std::string& text);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Multivariate polynomial with rational coefficients. Terms are kept in a
/// canonical order (descending lex) with no zero coefficients, so structural
/// equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant coefficient (zero if absent).
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] unsigned degree_in(std::size_t var) const;
  [[nodiscard]] bool involves(std::size_t var) const { return degree_in(var) > 0; }
  [[nodiscard]] std::vector<std::size_t> variables() const;

  /// Coefficient of var^k, as a polynomial not involving var.
  [[nodiscard]] Polynomial coefficient_of(std::size_t var, unsigned k) const;
  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
  /// Replace var by `value` (a polynomial over the same variables).
  [[nodiscard]] Polynomial substitute(std::size_t var, const Polynomial& value) const;
  /// Replace var by num/den and multiply through by den^deg_var.
  [[nodiscard]] Polynomial substitute_fraction(std::size_t var, const Polynomial& num, const Polynomial& den) const;
  /// Replace every variable i by values[i]; values may live in another ring.
  [[nodiscard]] Polynomial compose(const std::vector<Polynomial>& values) const;
  /// Re-embed into a ring with `nvars` variables; variable i maps to map[i].
  [[nodiscard]] Polynomial remap(std::size_t nvars, std::span<const std::size_t> map) const;
  /// Divide by the largest power of each listed variable dividing every term.
  [[nodiscard]] Polynomial strip_variable_factors(std::span<const std::size_t> vars) const;
  /// Greatest monomial dividing every term.
  [[nodiscard]] Monomial monomial_content() const;
  /// Scaled so the lex-leading coefficient is 1.
  [[nodiscard]] Polynomial monic() const;
  /// Scaled to primitive integer coefficients with positive lex-leading term.
  [[nodiscard]] Polynomial primitive() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  [[nodiscard]] Polynomial pow(unsigned k) const;

  /// Canonical text such as "3/2*a1^2*b3 - c2". Terms appear in descending
  /// graded order so the text reads highest degree first.
  [[nodiscard]] std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Parses the canonical text format back into a polynomial over `names`.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t nvars, const std::string& prefix = "x");

}  // namespace postlie::poly

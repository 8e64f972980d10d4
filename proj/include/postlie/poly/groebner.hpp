#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "postlie/poly/polynomial.hpp"

namespace postlie::poly {

inline constexpr std::size_t kDefaultBudget = 200000;

/// Thrown when a computation runs out of reduction steps. Callers report the
/// result as inconclusive; it never stands for a mathematical answer.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::size_t used)
      : std::runtime_error("reduction budget exhausted after " + std::to_string(used) + " steps"), used_(used) {}
  [[nodiscard]] std::size_t used() const { return used_; }

 private:
  std::size_t used_;
};

/// Shared reduction-step counter. One step is one leading-term cancellation.
class Budget {
 public:
  explicit Budget(std::size_t limit = kDefaultBudget) : limit_(limit) {}
  void charge(std::size_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw BudgetExhausted(used_);
  }
  [[nodiscard]] std::size_t limit() const { return limit_; }
  [[nodiscard]] std::size_t used() const { return used_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct Ideal {
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;
  TermOrder order{};
  std::vector<std::string> names;

  Ideal() = default;
  Ideal(std::size_t n, std::vector<Polynomial> gens, TermOrder ord = {}, std::vector<std::string> var_names = {});
  [[nodiscard]] const std::vector<std::string>& var_names() const { return names; }
};

/// Reduced Groebner basis: monic, interreduced, sorted by ascending leading
/// monomial under `order`.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, TermOrder order, std::vector<Polynomial> polys);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const TermOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<Polynomial>& polys() const { return polys_; }
  [[nodiscard]] bool contains_one() const;
  [[nodiscard]] bool is_zero_ideal() const { return polys_.empty(); }
  /// Normal form of p modulo the basis.
  [[nodiscard]] Polynomial reduce(const Polynomial& p, Budget& budget) const;
  [[nodiscard]] bool member(const Polynomial& p, Budget& budget) const { return reduce(p, budget).is_zero(); }
  /// Leading monomial of p under this basis' order.
  [[nodiscard]] Monomial leading_monomial(const Polynomial& p) const;

 private:
  std::size_t nvars_ = 0;
  TermOrder order_{};
  std::vector<Polynomial> polys_;
};

/// Buchberger's algorithm with the normal selection strategy (least lcm
/// degree, ties by pair index) and the product and chain criteria.
/// Deterministic for a fixed input and order. Throws BudgetExhausted.
GroebnerBasis groebner(const Ideal& ideal, Budget& budget);

inline bool contains_one(const GroebnerBasis& gb) { return gb.contains_one(); }

/// True iff every generator of a reduces to zero modulo GB(b) and vice versa.
bool ideal_equal(const Ideal& a, const Ideal& b, Budget& budget);

/// Groebner basis of (I : (prod nonvanishing)^inf), computed with one extra
/// variable t appended last, the generator t * prod - 1, and an elimination
/// block order on t. The result lives in the original ring.
GroebnerBasis saturate(const Ideal& ideal, const std::vector<Polynomial>& nonvanishing, Budget& budget);

/// True iff p vanishes on the whole variety of `ideal` over C (p in the
/// radical), decided by 1 in I + <1 - t p>.
bool in_radical(const Ideal& ideal, const Polynomial& p, Budget& budget);

/// Generators of I intersect J via t I + (1 - t) J with t eliminated.
Ideal intersect(const Ideal& a, const Ideal& b, Budget& budget);

}  // namespace postlie::poly

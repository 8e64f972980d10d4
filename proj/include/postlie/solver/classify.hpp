#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postlie/product/product.hpp"
#include "postlie/solver/family.hpp"
#include "postlie/solver/solve.hpp"

namespace postlie::solver {

enum class Answer { Yes, No, Inconclusive };
const char* to_string(Answer a);

struct IsoResult {
  Answer answer = Answer::Inconclusive;
  std::string evidence;  // fingerprint, certificate, witness, variety, budget
  std::vector<std::string> certificate;
  std::optional<Matrix> witness;  // P with q(Px,Py) = P p(x,y)
  std::string detail;
};

/// Equations P p(e_i,e_j) = q(P e_i, P e_j) with P from `aut`. Variables:
/// aut parameters, p's parameters, q's parameters, then `extra` more, then a
/// last variable t carrying t * nonvanishing(P) - 1. Family constraints of p
/// and q are included.
poly::Ideal isomorphism_system(const LieAlgebra& g, const ProductFamily& p, const ProductFamily& q,
                               const AutGroupParam& aut, const std::vector<std::string>& extra = {});

/// Structures (g,p) and (g,q) up to the automorphisms in `aut`.
IsoResult isomorphic(const LieAlgebra& g, const BilinearProduct& p, const BilinearProduct& q, const AutGroupParam& aut,
                     Budget& budget);
/// Yes when some member of p is isomorphic to some member of q, No with a
/// certificate when none is.
IsoResult isomorphic_families(const LieAlgebra& g, const ProductFamily& p, const ProductFamily& q,
                              const AutGroupParam& aut, Budget& budget);
/// One-parameter family: No when members at different parameter values are
/// never isomorphic.
IsoResult parameter_distinct(const LieAlgebra& g, const ProductFamily& p, const AutGroupParam& aut, Budget& budget);

struct ClassEntry {
  ProductFamily representative;
  bool from_table = false;
  std::size_t members = 0;  // sampled solutions matched to this class
  std::optional<product::Fingerprint> fingerprint;
};

struct PairEvidence {
  std::size_t a = 0, b = 0;  // a == b: distinct parameter values
  IsoResult result;
};

struct FamilyCoverage {
  std::size_t family = 0;
  std::size_t points = 0;
  std::vector<std::string> classes;  // matched class names, in order of first match
  std::size_t unmatched = 0;
};

struct ClassificationResult {
  SolveReport solve;
  std::vector<ClassEntry> classes;
  std::vector<std::string> missing;  // table classes no solution matched
  std::vector<PairEvidence> distinct;
  std::vector<FamilyCoverage> coverage;
  std::string note;
  [[nodiscard]] bool complete() const;
  [[nodiscard]] std::vector<std::string> class_names() const;
};

/// Solve, sample every family (including coordinate strata where subsets of
/// parameters vanish), sort samples into classes seeded by `seeds`, and
/// collect pairwise distinctness evidence.
ClassificationResult classify_commutative(const LieAlgebra& g, const AutGroupParam& aut,
                                          const std::vector<ProductFamily>& seeds, const SolveOptions& opt);

/// Reduced system product c0 + C p against a linear family d0 + D q: finds
/// p = A q + b and compares the transported constraints with `theirs`.
struct LinearMatch {
  bool shape = false;
  bool invertible = false;
  bool constraints_equal = false;
  Matrix change;
  exact::Vector offset;
  std::vector<Polynomial> transported;  // reduced constraints in q
  [[nodiscard]] bool pass() const { return shape && invertible && constraints_equal; }
};
LinearMatch match_linear_family(const System& reduced, const ProductFamily& theirs, Budget& budget);

struct FamilyNilpotency {
  bool symbolic_checked = false;  // coefficients polynomial in the parameters
  bool symbolic = false;
  std::size_t samples = 0;
  bool samples_nilpotent = true;
  [[nodiscard]] bool pass() const { return samples_nilpotent && (!symbolic_checked || symbolic); }
};
/// Traces of L(x)^m vanish on the family (modulo its residual constraints) and
/// at every sample.
FamilyNilpotency family_left_nilpotent(const SolutionFamily& f, std::size_t dim, Budget& budget);

}  // namespace postlie::solver

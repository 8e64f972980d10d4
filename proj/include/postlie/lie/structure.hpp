#pragma once

#include <vector>

#include "postlie/lie/algebra.hpp"

namespace postlie::lie {

enum class SeriesKind { LowerCentral, Derived };

/// Span of all [a, b] with a in A, b in B.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// g = g^0, then [g, g^(i-1)] or [g^(i-1), g^(i-1)], listed until the first
/// repeat (the stable term appears once).
std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind);
std::vector<std::size_t> series_dims(const LieAlgebra& g, SeriesKind kind);

Subspace center(const LieAlgebra& g);
Matrix killing_form(const LieAlgebra& g);
/// Killing-orthogonal complement of [g, g] (the solvable radical in
/// characteristic 0).
Subspace killing_radical(const LieAlgebra& g);

struct Predicates {
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_perfect = false;
  bool is_semisimple = false;
  bool is_unimodular = false;
  std::size_t center_dim = 0;
};
Predicates predicates(const LieAlgebra& g);

bool is_semisimple(const LieAlgebra& g);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// Bracket restricted to a subalgebra, in the coordinates of its echelon basis.
LieAlgebra restrict(const LieAlgebra& g, const Subspace& s);

/// g / I on the canonical complement: the standard basis vectors outside
/// the pivot columns of I.
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);

}  // namespace postlie::lie

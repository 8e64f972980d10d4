#pragma once

#include "postlie/lie/algebra.hpp"

namespace postlie::lie {

/// r x| s with r's basis first, then s's. r is an ideal.
struct SemidirectSplit {
  LieAlgebra algebra;
  LieAlgebra r;
  LieAlgebra s;
  Representation action;  // s acting on r by derivations

  [[nodiscard]] std::size_t r_dim() const { return r.dim(); }
  [[nodiscard]] std::size_t s_dim() const { return s.dim(); }
};

/// [(a,x),(b,y)] = ([a,b] + phi(x)b - phi(y)a, [x,y]). Throws InputError if
/// some phi(x) is not a derivation of r.
SemidirectSplit semidirect(const LieAlgebra& r, const LieAlgebra& s, const Representation& phi);

/// Direct sum with a's basis first.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// True iff d[x,y] = [dx,y] + [x,dy] on all basis pairs.
bool is_derivation(const LieAlgebra& g, const Matrix& d);

}  // namespace postlie::lie

#pragma once

#include <vector>

#include "polydiag/core.hpp"
#include "polydiag/solver.hpp"

namespace polydiag {

/// (D^T D)^{-1} D^T; D^T D is diagonal with the column supports on the diagonal.
RationalMatrix pseudoinverse(const BasisMatrix& d);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix to_rational(const IntegerMatrix& m);
RationalMatrix to_rational(const BasisMatrix& d);

/// Quotient matrix D_c^+ M D_c of an invariant coloring. The identity
/// M D_c = D_c M_c is checked before returning.
RationalMatrix quotient_matrix(const IntegerMatrix& m, const ColoringVector& c);

/// Integer matrix proportional to `r` (denominators cleared by their LCM).
/// `factor` receives the multiplier when non-null.
IntegerMatrix clear_denominators(const RationalMatrix& r, Int* factor = nullptr);

/// Maps a coloring e of the quotient (length dim c) to the coloring of the
/// corresponding subspace of R^n nested inside V_c.
ColoringVector lift(const ColoringVector& c, const ColoringVector& e);

/// Invariant polydiagonal colorings of the quotient matrix of c. Each
/// corresponds, via lift(), to an invariant subspace of m nested inside V_c.
std::vector<ColoringVector> nested_invariants(const IntegerMatrix& m, const ColoringVector& c,
                                              EnumerationMode mode = EnumerationMode::polydiagonal);

}  // namespace polydiag

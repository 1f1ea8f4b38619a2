#pragma once

#include "gnk/qpoly.hpp"

namespace gnk {

/// Size-1 restricted sum in closed form: (1 - q^(nk+1))/(1 - q).
QPoly g1_explicit(int n, int k);

/// Size-2 restricted sum in closed form, evaluated by exact polynomial
/// division; for n = 0 the value is 1. A NonzeroRemainder escaping from here
/// falsifies the closed form.
QPoly g2_explicit(int n, int k);

/// Size-3 restricted sum in closed form for n >= 2; for n < 2 it coincides
/// with the size-2 value.
QPoly g3_explicit(int n, int k);

/// Telescoped form of the size-2 partition sum:
///   sum_{i=1..D} q^(2i) (1-q^((k-i)n-2i+1))(1-q^(in-2i+1)) / (1-q)^2
///     = q^2 (1+q^(nk-2D))(1-q^(2D)) / ((1-q)^2 (1-q^2))
///     - q^(n+1) (1+q^(nk-nD-n))(1-q^(nD)) / ((1-q)^2 (1-q^n)).
/// Both sides are compared after clearing denominators; intermediate
/// exponents may be negative for n = 1, which the comparison handles.
/// Requires n >= 1 and 0 <= 2D <= k.
bool useful_gem_check(int n, int k, int D);

/// Residual of the conjectured size-s recurrence
///   q^n (q^(k+s) - 1) G_s(n+1,k) - q^(k+1) (q^n - q^(s-2)) G_s(n,k+1)
///     + (q^n - q^(k+s-1)) G_s(n+1,k+1),
/// multiplied through by q^(2-s) when s < 2 so the q^(s-2) factor stays
/// polynomial (exponent bookkeeping only; the zero test is unaffected).
/// Zero iff the conjecture holds at (s, n, k).
QPoly conjecture_residual(int s, int n, int k);

/// Forward iteration of the conjectured recurrence from the base row/column
/// G_s(n,0) = G_s(0,k) = 1:
///   G_s(n,k) = (q^k (q^n - q^(s-1)) G_s(n-1,k)
///               - q^n (q^(k+s-1) - 1) G_s(n,k-1)) / (q^n - q^(k+s-1)).
/// Throws SingularLine once the iteration path needs a cell on n = k+s-1,
/// which happens exactly when n >= s and k >= 1.
QPoly gs_forward(int s, int n, int k);

/// Relation along the singular line:
///   G_s(k+s, k) (1 - q^(k+s)) = (1 - q^(k+1)) G_s(k+s-1, k+1).
bool singular_line_check(int s, int k);

}  // namespace gnk

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gnk/qpoly.hpp"

namespace gnk {

/// q -> 1 limits of the diagonal G_s(n,n) for n = 0..n_max.
std::vector<Int> gs_diagonal_sequence(int s, int n_max);

/// Compares the q -> 1 limit of G_s(n,k) against its integer closed form:
/// nk+1 for s = 1, the degree-2 expression over 12 for s = 2, the degree-3
/// expression over 720 for s = 3 (with the same small-n branches as the
/// explicit polynomials). Throws NonIntegerValue if an exact division fails.
bool limit_formula_check(int s, int n, int k);

/// Compares the diagonal limit for s = 4 or 5 against the conjectured
/// degree-11/14 polynomials (exact division by 120960 / 43545600). The
/// fitted polynomials take their index at n+1 to land on the nth diagonal
/// term.
bool conjectured_diagonal_check(int s, int n);

/// For n <= s every partition of n has size <= s, so the diagonal limit is
/// the central binomial coefficient C(2n, n) exactly.
bool central_binomial_convergence(int s, int n);

/// OEIS identifiers of the diagonal sequences for s = 1..5.
const std::map<int, std::string>& oeis_ids();

}  // namespace gnk

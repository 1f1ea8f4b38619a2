#pragma once

#include "gnk/qpoly.hpp"

namespace gnk {

/// [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1); [0]_q = 0.
QPoly q_bracket(int n);

/// [n]_q! = product of [i]_q for i = 1..n; [0]_q! = 1.
QPoly q_factorial(int n);

/// G(n,k) = prod_{i=1..k} (1 - q^(n+i)) / (1 - q^i) via exact division,
/// memoized with G(n,k) = G(k,n) normalization. Negative arguments give the
/// canonical zero; n = 0 or k = 0 gives 1.
QPoly gnk_product(int n, int k);

/// Same value computed independently through the Pascal-type recurrence
/// G(n,k) = q^k G(n-1,k) + G(n,k-1) with its own memo table; kept separate
/// from gnk_product so the two routes stay independent oracles.
QPoly gnk_pascal(int n, int k);

/// Ordinary binomial coefficient, exact.
Int binomial(long long n, long long k);

namespace detail {
/// In-place multiply by (1 - q^e) and exact divide by (1 - q^e); both linear
/// in the coefficient count. The division throws NonzeroRemainder if the
/// dividend was not divisible.
void mul_one_minus_q(std::vector<Int>& c, long long e);
void div_one_minus_q(std::vector<Int>& c, long long e);
}  // namespace detail

}  // namespace gnk

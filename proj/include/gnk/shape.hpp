#pragma once

#include <utility>
#include <vector>

#include "gnk/qpoly.hpp"

namespace gnk {

/// Certificate that a polynomial is symmetric and unimodal of darga m: a sum
/// of atoms c*(q^r + q^(r+1) + ... + q^(m-r)) with c > 0 and 0 <= r <= m/2.
struct AtomicDecomposition {
  long long m = 0;
  std::vector<std::pair<Int, long long>> atoms;  // (c, r)
  QPoly reconstruct() const;
};

/// Expansion of a symmetric polynomial of darga m in the basis
/// q^j (1+q)^(m-2j); nonnegativity of the entries certifies symmetric
/// unimodality.
struct GammaVector {
  long long m = 0;
  std::vector<Int> gamma;  // gamma_0 .. gamma_floor(m/2)
  QPoly reconstruct() const;
  bool nonnegative() const;
};

/// Sum of the lowest and highest powers; throws ZeroPolynomial on zero.
long long darga(const QPoly& p);

/// Palindromic coefficients over the support span; zero counts as symmetric.
bool is_symmetric(const QPoly& p);

/// Coefficients weakly rise then weakly fall over the dense range between
/// least and greatest exponent (internal zeros count as values).
bool is_unimodal(const QPoly& p);

/// a_i^2 >= a_(i-1) * a_(i+1) over the dense range between least and greatest
/// exponent.
bool is_log_concave(const QPoly& p);

/// Symmetric and unimodal of darga m; the zero polynomial passes for every m,
/// matching the convention that vanished recurrence terms keep their nominal
/// darga.
bool is_sym_uni(const QPoly& p, long long m);

/// Unique atomic decomposition of a nonnegative symmetric unimodal polynomial
/// of darga m; throws NotSymmetricUnimodal when none exists.
AtomicDecomposition atomic_decomposition(const QPoly& p, long long m);

/// Gamma expansion of a polynomial symmetric of darga m; entries may be
/// negative. Throws NotSymmetric when p is not symmetric with respect to m.
GammaVector gamma_vector(const QPoly& p, long long m);

}  // namespace gnk

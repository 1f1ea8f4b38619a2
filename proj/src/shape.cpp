#include "gnk/shape.hpp"

#include "gnk/errors.hpp"

namespace gnk {

namespace {

QPoly one_plus_q_power(long long e) {
  QPoly base({1, 1});
  QPoly out = QPoly::one();
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// Symmetric with respect to darga m: coeff(e) == coeff(m - e) everywhere.
bool symmetric_wrt(const QPoly& p, long long m) {
  if (p.is_zero()) return true;
  if (m < 0 || p.degree() > m) return false;
  for (long long e = 0; 2 * e <= m; ++e)
    if (p.coeff(e) != p.coeff(m - e)) return false;
  return true;
}

}  // namespace

long long darga(const QPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("darga of zero polynomial");
  return p.least_exponent() + p.degree();
}

bool is_symmetric(const QPoly& p) {
  if (p.is_zero()) return true;
  const long long lo = p.least_exponent(), hi = p.degree();
  for (long long e = lo; 2 * e <= lo + hi; ++e)
    if (p.coeff(e) != p.coeff(lo + hi - e)) return false;
  return true;
}

bool is_unimodal(const QPoly& p) {
  if (p.is_zero()) return true;
  const long long lo = p.least_exponent(), hi = p.degree();
  bool falling = false;
  for (long long e = lo + 1; e <= hi; ++e) {
    const Int& prev = p.coeff(e - 1);
    const Int& cur = p.coeff(e);
    if (cur > prev && falling) return false;
    if (cur < prev) falling = true;
  }
  return true;
}

bool is_log_concave(const QPoly& p) {
  if (p.is_zero()) return true;
  const long long lo = p.least_exponent(), hi = p.degree();
  for (long long e = lo + 1; e < hi; ++e)
    if (p.coeff(e) * p.coeff(e) < p.coeff(e - 1) * p.coeff(e + 1)) return false;
  return true;
}

bool is_sym_uni(const QPoly& p, long long m) {
  if (p.is_zero()) return true;
  return symmetric_wrt(p, m) && is_unimodal(p);
}

QPoly AtomicDecomposition::reconstruct() const {
  QPoly out;
  for (const auto& [c, r] : atoms) out += shift(QPoly::geometric(m - 2 * r + 1), r) * c;
  return out;
}

AtomicDecomposition atomic_decomposition(const QPoly& p, long long m) {
  if (m < 0) throw NotSymmetricUnimodal("negative darga");
  AtomicDecomposition dec;
  dec.m = m;
  if (p.is_zero()) return dec;
  if (!symmetric_wrt(p, m)) throw NotSymmetricUnimodal("not symmetric of the requested darga");
  // Rising-half increments are the atom weights; unimodality and coefficient
  // nonnegativity are exactly what keeps them nonnegative.
  Int prev = 0;
  for (long long r = 0; 2 * r <= m; ++r) {
    const Int& cur = p.coeff(r);
    if (cur < prev) throw NotSymmetricUnimodal("coefficients are not unimodal");
    if (cur > prev) dec.atoms.emplace_back(cur - prev, r);
    prev = cur;
  }
  if (prev < 0) throw NotSymmetricUnimodal("negative coefficients");
  return dec;
}

QPoly GammaVector::reconstruct() const {
  QPoly out;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (gamma[j] == 0) continue;
    out += shift(one_plus_q_power(m - 2 * static_cast<long long>(j)), static_cast<long long>(j)) *
           gamma[j];
  }
  return out;
}

bool GammaVector::nonnegative() const {
  for (const auto& g : gamma)
    if (g < 0) return false;
  return true;
}

GammaVector gamma_vector(const QPoly& p, long long m) {
  if (m < 0) throw NotSymmetric("negative darga");
  GammaVector gv;
  gv.m = m;
  gv.gamma.assign(static_cast<std::size_t>(m / 2) + 1, Int(0));
  if (p.is_zero()) return gv;
  if (!symmetric_wrt(p, m)) throw NotSymmetric("not symmetric of the requested darga");
  // Eliminate from the lowest exponent up: the basis element q^j (1+q)^(m-2j)
  // is the unique one whose support starts at j. Exact and division-free.
  QPoly work = p;
  for (long long j = 0; 2 * j <= m; ++j) {
    const Int g = work.coeff(j);
    gv.gamma[static_cast<std::size_t>(j)] = g;
    if (g != 0) work -= shift(one_plus_q_power(m - 2 * j), j) * g;
  }
  if (!work.is_zero()) throw NotSymmetric("gamma elimination left a residue");
  return gv;
}

}  // namespace gnk

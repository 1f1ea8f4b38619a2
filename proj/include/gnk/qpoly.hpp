#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace gnk {

using Int = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, indexed by exponent starting at 0. The zero polynomial is
/// the empty coefficient vector; nonzero polynomials never carry trailing
/// zero coefficients, so equality is plain coefficient-wise comparison.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Int> coeffs);
  QPoly(std::initializer_list<long long> coeffs);

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly({1}); }
  static QPoly constant(const Int& c);
  static QPoly monomial(const Int& c, long long exponent);
  /// 1 + q + ... + q^(len-1); len <= 0 gives zero.
  static QPoly geometric(long long len);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  /// Least exponent with nonzero coefficient; throws ZeroPolynomial on zero.
  long long least_exponent() const;
  /// Coefficient of q^exponent (zero outside the stored range).
  const Int& coeff(long long exponent) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& r);
  QPoly& operator-=(const QPoly& r);
  QPoly& operator*=(const QPoly& r);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Int& c);
  friend QPoly operator*(const Int& c, QPoly a) { return std::move(a) * c; }
  bool operator==(const QPoly&) const = default;

  /// Ascending human-readable form, e.g. "1 + q + 2q^2"; "0" for zero.
  std::string str() const;
  /// JSON array of decimal coefficient strings, index = exponent.
  std::string json() const;
  static QPoly from_json(const std::string& text);

 private:
  std::vector<Int> coeffs_;
  void canonicalize();
};

/// p * q^alpha for alpha >= 0.
QPoly shift(const QPoly& p, long long alpha);

/// Exact quotient p / d. Throws ZeroPolynomial when d == 0 and
/// NonzeroRemainder when the division does not come out exact.
QPoly exact_div(const QPoly& p, const QPoly& d);

/// Exact quotient p / c for a nonzero scalar.
QPoly exact_div(const QPoly& p, const Int& c);

/// Sum of coefficients: the q -> 1 limit of the polynomial.
Int eval_at_one(const QPoly& p);

}  // namespace gnk

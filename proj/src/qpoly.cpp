#include "gnk/qpoly.hpp"

#include <json.hpp>
#include <sstream>

#include "gnk/errors.hpp"

namespace gnk {

namespace {
const Int kZero = 0;
}

QPoly::QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.assign(coeffs.begin(), coeffs.end());
  canonicalize();
}

void QPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::constant(const Int& c) {
  QPoly p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

QPoly QPoly::monomial(const Int& c, long long exponent) {
  if (exponent < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, kZero);
    p.coeffs_.back() = c;
  }
  return p;
}

QPoly QPoly::geometric(long long len) {
  QPoly p;
  if (len > 0) p.coeffs_.assign(static_cast<std::size_t>(len), Int(1));
  return p;
}

long long QPoly::least_exponent() const {
  if (is_zero()) throw ZeroPolynomial("least_exponent of zero polynomial");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<long long>(i);
  throw ZeroPolynomial("least_exponent of zero polynomial");
}

const Int& QPoly::coeff(long long exponent) const {
  if (exponent < 0 || exponent >= static_cast<long long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.canonicalize();
  return out;
}

QPoly& QPoly::operator*=(const QPoly& r) {
  *this = *this * r;
  return *this;
}

QPoly operator*(QPoly a, const Int& c) {
  if (c == 0) return QPoly();
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

QPoly shift(const QPoly& p, long long alpha) {
  if (alpha < 0) throw std::invalid_argument("shift requires a nonnegative offset");
  if (p.is_zero() || alpha == 0) return p;
  std::vector<Int> c(static_cast<std::size_t>(alpha), kZero);
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return QPoly(std::move(c));
}

QPoly exact_div(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  if (p.is_zero()) return QPoly();
  if (p.degree() < d.degree()) throw NonzeroRemainder("quotient degree below divisor degree");

  // Gather the divisor's nonzero terms once; long division then costs
  // O(quotient length * nnz(divisor)), linear for binomial divisors.
  std::vector<std::pair<long long, Int>> dterms;
  for (long long e = 0; e <= d.degree(); ++e)
    if (d.coeff(e) != 0) dterms.emplace_back(e, d.coeff(e));
  const long long ddeg = d.degree();
  const Int& dlead = d.coeff(ddeg);

  std::vector<Int> rem = p.coeffs();
  std::vector<Int> quot(static_cast<std::size_t>(p.degree() - ddeg + 1), kZero);
  for (long long i = p.degree() - ddeg; i >= 0; --i) {
    Int& top = rem[static_cast<std::size_t>(i + ddeg)];
    if (top == 0) continue;
    Int c, r;
    boost::multiprecision::divide_qr(top, dlead, c, r);
    if (r != 0) throw NonzeroRemainder("leading coefficient not divisible");
    quot[static_cast<std::size_t>(i)] = c;
    for (const auto& [e, v] : dterms) rem[static_cast<std::size_t>(i + e)] -= c * v;
  }
  for (const auto& c : rem)
    if (c != 0) throw NonzeroRemainder("polynomial division left a remainder");
  return QPoly(std::move(quot));
}

QPoly exact_div(const QPoly& p, const Int& c) {
  if (c == 0) throw ZeroPolynomial("division by zero");
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    Int q, r;
    boost::multiprecision::divide_qr(x, c, q, r);
    if (r != 0) throw NonzeroRemainder("scalar division left a remainder");
    out.push_back(std::move(q));
  }
  return QPoly(std::move(out));
}

Int eval_at_one(const QPoly& p) {
  Int s = 0;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long long e = 0; e <= degree(); ++e) {
    const Int& c = coeffs_[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str();
      out << "q";
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

std::string QPoly::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.str());
  return arr.dump();
}

QPoly QPoly::from_json(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of coefficient strings");
  std::vector<Int> c;
  c.reserve(arr.size());
  for (const auto& item : arr) {
    if (item.is_string())
      c.emplace_back(item.get<std::string>());
    else if (item.is_number_integer())
      c.emplace_back(item.get<long long>());
    else
      throw std::invalid_argument("coefficients must be decimal strings or integers");
  }
  return QPoly(std::move(c));
}

}  // namespace gnk

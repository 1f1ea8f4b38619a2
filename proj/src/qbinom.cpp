#include "gnk/qbinom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "gnk/cache.hpp"
#include "gnk/errors.hpp"
#include "gnk/stats.hpp"

namespace gnk {

Stats& stats() {
  static Stats s;
  return s;
}

QPoly q_bracket(int n) {
  if (n < 0) throw std::invalid_argument("q_bracket requires n >= 0");
  return QPoly::geometric(n);
}

QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
  QPoly out = QPoly::one();
  for (int i = 2; i <= n; ++i) out *= QPoly::geometric(i);
  return out;
}

namespace detail {

void mul_one_minus_q(std::vector<Int>& c, long long e) {
  const std::size_t old = c.size();
  c.resize(old + static_cast<std::size_t>(e));
  for (std::size_t i = old; i-- > 0;) c[i + static_cast<std::size_t>(e)] -= c[i];
}

void div_one_minus_q(std::vector<Int>& c, long long e) {
  // (1 - q^e) * Q = P  =>  Q_i = P_i + Q_(i-e); the top e slots of the
  // running sums must vanish or the dividend was not divisible.
  if (static_cast<long long>(c.size()) < e) throw NonzeroRemainder("dividend too short");
  const std::size_t n = c.size();
  for (std::size_t i = static_cast<std::size_t>(e); i < n; ++i)
    c[i] += c[i - static_cast<std::size_t>(e)];
  for (std::size_t i = n - static_cast<std::size_t>(e); i < n; ++i)
    if (c[i] != 0) throw NonzeroRemainder("division by 1-q^e left a remainder");
  c.resize(n - static_cast<std::size_t>(e));
}

}  // namespace detail

namespace {

using Key = std::pair<int, int>;

std::map<Key, QPoly>& product_table() {
  static std::map<Key, QPoly> t;
  return t;
}
std::mutex product_mutex;

QPoly product_compute(int n, int k) {
  std::vector<Int> c{1};
  for (int i = 1; i <= k; ++i) {
    detail::mul_one_minus_q(c, static_cast<long long>(n) + i);
    detail::div_one_minus_q(c, i);
  }
  return QPoly(std::move(c));
}

}  // namespace

QPoly gnk_product(int n, int k) {
  if (n < 0 || k < 0) return QPoly::zero();
  if (n == 0 || k == 0) return QPoly::one();
  const Key key{std::max(n, k), std::min(n, k)};
  {
    std::lock_guard lock(product_mutex);
    auto it = product_table().find(key);
    if (it != product_table().end()) {
      ++stats().qbinom_hits;
      return it->second;
    }
  }
  ++stats().qbinom_misses;
  QPoly value = product_compute(key.first, key.second);
  std::lock_guard lock(product_mutex);
  return product_table().emplace(key, std::move(value)).first->second;
}

namespace {

std::map<Key, QPoly>& pascal_table() {
  static std::map<Key, QPoly> t;
  return t;
}
std::mutex pascal_mutex;

QPoly pascal_eval(int n, int k);

QPoly pascal_compute(int n, int k) {
  // G(n,k) = q^k G(n-1,k) + G(n,k-1); a box partition either uses a part of
  // the largest size or it does not.
  return shift(pascal_eval(n - 1, k), k) + pascal_eval(n, k - 1);
}

QPoly pascal_eval(int n, int k) {
  if (n < 0 || k < 0) return QPoly::zero();
  if (n == 0 || k == 0) return QPoly::one();
  const Key key{std::max(n, k), std::min(n, k)};
  {
    std::lock_guard lock(pascal_mutex);
    auto it = pascal_table().find(key);
    if (it != pascal_table().end()) return it->second;
  }
  QPoly value = pascal_compute(key.first, key.second);
  std::lock_guard lock(pascal_mutex);
  return pascal_table().emplace(key, std::move(value)).first->second;
}

}  // namespace

QPoly gnk_pascal(int n, int k) { return pascal_eval(n, k); }

namespace detail {

std::vector<std::tuple<int, int, QPoly>> qbinom_snapshot() {
  std::lock_guard lock(product_mutex);
  std::vector<std::tuple<int, int, QPoly>> out;
  out.reserve(product_table().size());
  for (const auto& [key, p] : product_table()) out.emplace_back(key.first, key.second, p);
  return out;
}

void qbinom_restore(const std::vector<std::tuple<int, int, QPoly>>& entries) {
  std::lock_guard lock(product_mutex);
  for (const auto& [n, k, p] : entries) product_table().emplace(Key{n, k}, p);
}

}  // namespace detail

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int num = 1, den = 1;
  for (long long i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

}  // namespace gnk

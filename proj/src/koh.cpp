#include "gnk/koh.hpp"

#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "gnk/cache.hpp"
#include "gnk/errors.hpp"
#include "gnk/qbinom.hpp"
#include "gnk/stats.hpp"

namespace gnk {

namespace {

const Partition kPartitionOne = Partition::from_parts({1});

/// The lambda-term skeleton of the recurrence: the q-exponent and the
/// (n', d) argument pair of every product slot i = 0..k-1.
struct TermShape {
  long long exponent = 0;
  bool vanishes = false;  // some slot has n' < 0
  std::vector<std::pair<long long, int>> slots;
};

TermShape term_shape(int n, int k, const Partition& lam, int a, int b) {
  TermShape shape;
  std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
  long long pairsum = 0;
  for (const auto& [part, mult] : lam.freq) d[static_cast<std::size_t>(part)] = mult;
  for (auto i = lam.freq.begin(); i != lam.freq.end(); ++i)
    for (auto j = lam.freq.begin(); j != i; ++j)
      pairsum += static_cast<long long>(i->first - j->first) * i->second * j->second;

  const long long sz = lam.size();
  shape.exponent = (static_cast<long long>(k) + b) * sz + static_cast<long long>(k) * (a - 1) - pairsum;

  shape.slots.reserve(static_cast<std::size_t>(k));
  long long s1 = 0, s2 = 0;  // s1 = sum of d_(k-j) for j < i, s2 = sum (i-j) d_(k-j)
  for (int i = 0; i < k; ++i) {
    const long long np =
        static_cast<long long>(k - i) * (n - 2LL * a) - 2LL * (i + b) + 2 * s2;
    const int di = d[static_cast<std::size_t>(k - i)];
    if (np < 0) shape.vanishes = true;
    shape.slots.emplace_back(np, di);
    s1 += di;
    s2 += s1;
  }
  return shape;
}

/// Product-formula evaluation of one summand: q^E times the product of
/// G(n'_i, d_i) expanded as quotients of binomials (1-q^e), each pass linear
/// in the coefficient count.
QPoly term_via_product(int n, int k, const Partition& lam) {
  TermShape shape = term_shape(n, k, lam, 0, 0);
  if (shape.vanishes) return QPoly::zero();
  std::vector<Int> c(static_cast<std::size_t>(shape.exponent) + 1, Int(0));
  c.back() = 1;
  for (const auto& [np, d] : shape.slots) {
    if (d == 0 || np == 0) continue;
    for (int j = 1; j <= d; ++j) {
      detail::mul_one_minus_q(c, np + j);
      detail::div_one_minus_q(c, j);
    }
  }
  return QPoly(std::move(c));
}

Int int_pow(const Int& base, int e) {
  Int out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Int KohConfig::weight(const Partition& lam) const {
  switch (scheme) {
    case RhoScheme::constant:
      return rho;
    case RhoScheme::by_size: {
      auto it = rho_by_key.find(lam.size());
      return it == rho_by_key.end() ? Int(1) : it->second;
    }
    case RhoScheme::by_largest_part: {
      auto it = rho_by_key.find(lam.largest_part());
      return it == rho_by_key.end() ? Int(1) : it->second;
    }
    case RhoScheme::per_partition: {
      auto it = rho_by_partition.find(lam.str());
      return it == rho_by_partition.end() ? Int(1) : it->second;
    }
  }
  return 1;
}

bool KohConfig::is_default() const {
  return constraints.unconstrained() && a == 0 && b == 0 && nu == 1 && !normalize &&
         (scheme == RhoScheme::constant ? rho == 1
                                        : rho_by_key.empty() && rho_by_partition.empty());
}

std::string KohConfig::str() const {
  std::ostringstream out;
  out << "constraints{" << constraints.str() << "} a=" << a << " b=" << b << " nu=" << nu.str();
  switch (scheme) {
    case RhoScheme::constant:
      out << " rho=" << rho.str();
      break;
    case RhoScheme::by_size:
      out << " rho=by_size[" << rho_by_key.size() << "]";
      break;
    case RhoScheme::by_largest_part:
      out << " rho=by_largest_part[" << rho_by_key.size() << "]";
      break;
    case RhoScheme::per_partition:
      out << " rho=per_partition[" << rho_by_partition.size() << "]";
      break;
  }
  if (normalize) out << " normalized";
  return out.str();
}

struct KohEngine::Impl {
  KohConfig cfg;
  std::map<std::pair<int, int>, QPoly> memo;
  std::map<int, std::vector<Partition>> partition_lists;
  std::mutex mutex;

  explicit Impl(KohConfig c) : cfg(std::move(c)) {}

  const std::vector<Partition>& partitions_of(int k) {
    auto it = partition_lists.find(k);
    if (it != partition_lists.end()) return it->second;
    auto list = enumerate(k, cfg.constraints);
    stats().partitions_enumerated += list.size();
    return partition_lists.emplace(k, std::move(list)).first->second;
  }

  QPoly eval(int n, int k) {
    if (n < 0 || k < 0) return QPoly::zero();
    if (k == 0) return QPoly::constant(cfg.nu);
    if (k == 1) return QPoly::geometric(n + 1) * (cfg.nu * cfg.weight(kPartitionOne));
    if (n == 0) return QPoly::constant(cfg.nu);
    {
      std::lock_guard lock(mutex);
      auto it = memo.find({n, k});
      if (it != memo.end()) return it->second;
    }
    QPoly total;
    std::vector<Partition> lams;
    {
      std::lock_guard lock(mutex);
      lams = partitions_of(k);
    }
    for (const auto& lam : lams) total += term(n, k, lam);
    ++stats().koh_states;
    std::lock_guard lock(mutex);
    return memo.emplace(std::pair{n, k}, std::move(total)).first->second;
  }

  QPoly term(int n, int k, const Partition& lam) {
    const Int w = cfg.weight(lam);
    if (w < 0) throw std::invalid_argument("partition weights must be nonnegative");
    if (w == 0) return QPoly::zero();
    TermShape shape = term_shape(n, k, lam, cfg.a, cfg.b);
    if (shape.exponent < 0)
      throw NegativeExponent("parameters a, b drive a q-exponent negative");
    if (shape.vanishes) return QPoly::zero();
    int nu_slots = 0;
    QPoly p = QPoly::one();
    for (const auto& [np, d] : shape.slots) {
      if (d == 0) {
        ++nu_slots;
        continue;
      }
      QPoly f = eval(static_cast<int>(np), d);
      if (f.is_zero()) return QPoly::zero();
      p *= f;
    }
    return shift(p, shape.exponent) * (w * int_pow(cfg.nu, nu_slots));
  }

  QPoly normalized(QPoly v, int k) const {
    if (!cfg.normalize) return v;
    if (cfg.nu != 1 && k > 0) v = exact_div(v, int_pow(cfg.nu, k));
    if (cfg.scheme == RhoScheme::constant && cfg.rho != 1 && k >= 1) v = exact_div(v, cfg.rho);
    return v;
  }
};

KohEngine::KohEngine(KohConfig cfg) : cfg_(cfg) {
  if (cfg_.nu < 1) throw std::invalid_argument("nu must be a positive integer");
  if (cfg_.rho < 0) throw std::invalid_argument("rho must be nonnegative");
  for (const auto& [key, w] : cfg_.rho_by_key)
    if (w < 0) throw std::invalid_argument("rho table weights must be nonnegative");
  for (const auto& [key, w] : cfg_.rho_by_partition)
    if (w < 0) throw std::invalid_argument("rho table weights must be nonnegative");
  impl_ = std::make_shared<Impl>(cfg_);
}

QPoly KohEngine::value(int n, int k) { return impl_->normalized(impl_->eval(n, k), k); }

ContributionBreakdown KohEngine::breakdown(int n, int k) {
  ContributionBreakdown out;
  out.n = n;
  out.k = k;
  if (n < 0 || k < 0) return out;
  if (k <= 1 || n == 0) {
    // Initial-condition levels appear as their single pseudo-entry.
    const Partition lam = k == 1 ? kPartitionOne : Partition::empty();
    out.entries.emplace_back(lam, impl_->normalized(impl_->eval(n, k), k));
    out.total = out.entries.front().second;
    return out;
  }
  for (const auto& lam : enumerate(k, cfg_.constraints)) {
    QPoly t = impl_->normalized(impl_->term(n, k, lam), k);
    out.total += t;
    out.entries.emplace_back(lam, std::move(t));
  }
  return out;
}

namespace {

KohEngine& default_engine() {
  static KohEngine engine{KohConfig{}};
  return engine;
}

}  // namespace

QPoly koh(int n, int k) { return default_engine().value(n, k); }

QPoly koh_restricted(int n, int k, const KohConfig& cfg) {
  return KohEngine(cfg).value(n, k);
}

namespace {

std::map<std::tuple<int, int, int>, QPoly>& gs_table() {
  static std::map<std::tuple<int, int, int>, QPoly> t;
  return t;
}
std::mutex gs_mutex;

}  // namespace

QPoly gs(int n, int k, int s) {
  if (s < 1) throw std::invalid_argument("gs requires s >= 1");
  if (n < 0 || k < 0) return QPoly::zero();
  if (k <= s) return gnk_product(n, k);
  {
    std::lock_guard lock(gs_mutex);
    auto it = gs_table().find({s, n, k});
    if (it != gs_table().end()) {
      ++stats().gs_hits;
      return it->second;
    }
  }
  ++stats().gs_misses;
  PartitionConstraints c;
  c.max_size = s;
  QPoly total;
  auto lams = enumerate(k, c);
  stats().partitions_enumerated += lams.size();
  for (const auto& lam : lams) total += term_via_product(n, k, lam);
  std::lock_guard lock(gs_mutex);
  return gs_table().emplace(std::tuple{s, n, k}, std::move(total)).first->second;
}

namespace detail {

std::vector<std::tuple<int, int, int, QPoly>> gs_snapshot() {
  std::lock_guard lock(gs_mutex);
  std::vector<std::tuple<int, int, int, QPoly>> out;
  out.reserve(gs_table().size());
  for (const auto& [key, p] : gs_table())
    out.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key), p);
  return out;
}

void gs_restore(const std::vector<std::tuple<int, int, int, QPoly>>& entries) {
  std::lock_guard lock(gs_mutex);
  for (const auto& [s, n, k, p] : entries) gs_table().emplace(std::tuple{s, n, k}, p);
}

}  // namespace detail

QPoly partition_contribution(int n, int k, const Partition& lam) {
  if (lam.k != k || !lam.valid())
    throw std::invalid_argument("lambda must be a valid partition of k");
  if (n < 0) return QPoly::zero();
  if (k == 0) return QPoly::one();
  if (k == 1) return QPoly::geometric(n + 1);
  return term_via_product(n, k, lam);
}

QPoly characterized_contribution(int n, int k, const Partition& lam) {
  if (lam.k != k || !lam.valid())
    throw std::invalid_argument("lambda must be a valid partition of k");
  if (k <= 0) throw UnsupportedShape("no characterized shape partitions zero");
  const auto& f = lam.freq;

  if (f.size() == 1) {
    const auto [m, l] = *f.begin();
    if (l == 1) {  // [k]
      if (n < 0) throw OutOfValidityRange("[k] needs n >= 0");
      return QPoly::geometric(static_cast<long long>(n) * k + 1);
    }
    // Rectangle [m^l]: q^(k(l-1)) G(m(n-2(l-1)), l), valid for n >= 2(l-1).
    if (n < 2 * (l - 1)) throw OutOfValidityRange("[m^l] needs n >= 2(l-1)");
    return shift(gnk_product(m * (n - 2 * (l - 1)), l),
                 static_cast<long long>(k) * (l - 1));
  }

  if (f.size() == 2) {
    const auto [small, small_mult] = *f.begin();
    const auto [big, big_mult] = *f.rbegin();
    if (small_mult == 1 && big_mult == 1) {  // [k-l, l], l < k/2
      if (n < 2) throw OutOfValidityRange("two-part shapes need n >= 2");
      const long long l = small;
      return shift(QPoly::geometric(static_cast<long long>(big) * n - 2 * l + 1) *
                       QPoly::geometric(l * n - 2 * l + 1),
                   2 * l);
    }
    if (small_mult == 2 && big_mult == 1) {  // [k-2l, l^2], l < k/3
      if (n < 4) throw OutOfValidityRange("size-3 shapes need n >= 4");
      const long long l = small;
      return shift(QPoly::geometric(static_cast<long long>(big) * n - 4 * l + 1) *
                       gnk_product(static_cast<int>(l * (n - 4)), 2),
                   6 * l);
    }
    if (small_mult == 1 && big_mult == 2) {  // [l^2, k-2l], k/3 < l < k/2
      if (n < 4) throw OutOfValidityRange("size-3 shapes need n >= 4");
      const long long l = big;
      return shift(gnk_product(static_cast<int>(l * n - 2 * k + 2 * l), 2) *
                       QPoly::geometric(static_cast<long long>(small) * n + 8 * l - 4 * k + 1),
                   4LL * k - 6 * l);
    }
    throw UnsupportedShape("no closed form for " + lam.str());
  }

  if (f.size() == 3 && lam.size() == 3) {  // distinct triple l1 > l2 > l3
    if (n < 4) throw OutOfValidityRange("size-3 shapes need n >= 4");
    auto it = f.rbegin();
    const long long l1 = it->first;
    const long long l2 = (++it)->first;
    const long long l3 = (++it)->first;
    return shift(QPoly::geometric(l1 * n - 2 * (l2 + l3) + 1) *
                     QPoly::geometric(l2 * n - 2 * (l2 + l3) + 1) *
                     QPoly::geometric(l3 * (n - 4) + 1),
                 2 * (l2 + 2 * l3));
  }

  throw UnsupportedShape("no closed form for " + lam.str());
}

ContributionBreakdown contribution_breakdown(int n, int k, const KohConfig& cfg) {
  return KohEngine(cfg).breakdown(n, k);
}

RandomTheorem random_theorem(int k, unsigned weight_bound, std::uint64_t seed, int n_max) {
  if (k < 1) throw std::invalid_argument("random_theorem requires k >= 1");
  RandomTheorem out;
  out.cfg.scheme = RhoScheme::per_partition;
  std::mt19937_64 rng(seed);
  for (int j = 1; j <= k; ++j)
    for (const auto& lam : enumerate(j))
      out.cfg.rho_by_partition[lam.str()] =
          Int(rng() % (static_cast<std::uint64_t>(weight_bound) + 1));
  KohEngine engine(out.cfg);
  for (int n = 0; n <= n_max; ++n) {
    out.instances.emplace_back(n, engine.value(n, k));
    out.certificates.push_back(engine.breakdown(n, k));
  }
  return out;
}

}  // namespace gnk

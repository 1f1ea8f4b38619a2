#include "gnk/depth.hpp"

#include <map>
#include <mutex>

#include "gnk/errors.hpp"
#include "gnk/partitions.hpp"

namespace gnk {

namespace {

std::map<std::pair<int, int>, DepthReport>& depth_table() {
  static std::map<std::pair<int, int>, DepthReport> t;
  return t;
}
std::mutex depth_mutex;

DepthReport walk(int n, int k) {
  if (n <= 0 || k <= 1) return {};
  {
    std::lock_guard lock(depth_mutex);
    auto it = depth_table().find({n, k});
    if (it != depth_table().end()) return it->second;
  }
  DepthReport report;
  report.depth = 1;  // this node expands the sum
  for (const auto& lam : enumerate(k)) {
    // Argument pairs of the product slots, cheaper than the polynomial
    // evaluator because only the call graph is built.
    std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& [part, mult] : lam.freq) d[static_cast<std::size_t>(part)] = mult;
    std::vector<std::pair<long long, int>> slots;
    slots.reserve(static_cast<std::size_t>(k));
    bool vanishes = false;
    long long s1 = 0, s2 = 0;
    for (int i = 0; i < k; ++i) {
      const long long np = static_cast<long long>(k - i) * n - 2LL * i + 2 * s2;
      const int di = d[static_cast<std::size_t>(k - i)];
      if (np < 0) vanishes = true;
      slots.emplace_back(np, di);
      s1 += di;
      s2 += s1;
    }
    // A negative argument zeroes the whole summand, so none of its factor
    // calls are ever demanded; only live summands contribute to the metrics.
    if (vanishes) continue;
    for (const auto& [np, di] : slots) {
      DepthReport child = walk(static_cast<int>(np), di);
      report.depth = std::max(report.depth, 1 + child.depth);
      report.calls += 1 + child.calls;
    }
  }
  std::lock_guard lock(depth_mutex);
  return depth_table().emplace(std::pair{n, k}, std::move(report)).first->second;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

DepthReport koh_depth(int n, int k) { return walk(n, k); }

long long koh_depth_fast(int n, int k) {
  if (n < 0 || k < 0) throw OutOfCoverage("depth analysis covers n, k >= 0 only");
  if (n == 0 || k <= 1) return 0;
  if (k == 2) return ceil_div(n, 2);
  if (k == 3) return ceil_div(n, 4);
  if (n <= 2) return 1;
  if (n == 3 && k % 2 == 1) return 1;
  // k >= 4 even with n >= 2, or k >= 5 odd with n >= 4.
  return ceil_div(static_cast<long long>(k / 2) * n, 2) - ceil_div(k, 2) + 1;
}

}  // namespace gnk

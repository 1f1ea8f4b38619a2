#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gnk/partitions.hpp"
#include "gnk/qpoly.hpp"

using namespace gnk;

namespace {

// Independent oracle: partition counts from the pentagonal-number recurrence
// p(n) = sum_{j>=1} (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)].
std::vector<Int> pentagonal_partition_counts(int n_max) {
  std::vector<Int> p(static_cast<std::size_t>(n_max) + 1, Int(0));
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      const Int sign = (j % 2 == 1) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

// Second independent route for small k: plain recursive generation.
void brute_parts(int remaining, int max_part, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    brute_parts(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> brute_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  brute_parts(k, std::max(k, 1), acc, out);
  return out;
}

}  // namespace

TEST_CASE("frequency representation") {
  Partition p = Partition::from_parts({3, 3, 1});
  CHECK(p.k == 7);
  CHECK(p.size() == 3);
  CHECK(p.largest_part() == 3);
  CHECK(p.multiplicity(3) == 2);
  CHECK(p.str() == "3^2,1");
  CHECK(p.parts() == std::vector<int>{3, 3, 1});
  CHECK(p.valid());
}

TEST_CASE("unconstrained enumeration of 3") {
  auto lams = enumerate(3);
  REQUIRE(lams.size() == 3);
  CHECK(lams[0].str() == "3");
  CHECK(lams[1].str() == "2,1");
  CHECK(lams[2].str() == "1^3");
}

TEST_CASE("size bound") {
  PartitionConstraints c;
  c.max_size = 2;
  auto lams = enumerate(3, c);
  REQUIRE(lams.size() == 2);
  CHECK(lams[0].str() == "3");
  CHECK(lams[1].str() == "2,1");
}

TEST_CASE("distinct parts of 5 match the brute-force filter") {
  PartitionConstraints c;
  c.distinct = true;
  auto lams = enumerate(5, c);
  std::vector<std::string> got;
  for (const auto& lam : lams) got.push_back(lam.str());
  CHECK(got == std::vector<std::string>{"5", "4,1", "3,2"});

  auto all = brute_partitions(5);
  std::size_t expected = 0;
  for (const auto& parts : all)
    if (std::set<int>(parts.begin(), parts.end()).size() == parts.size()) ++expected;
  CHECK(lams.size() == expected);
}

TEST_CASE("k = 0 yields the empty partition unless a minimum size forbids it") {
  CHECK(enumerate(0).size() == 1);
  CHECK(enumerate(0)[0].str() == "");
  PartitionConstraints c;
  c.min_size = 1;
  CHECK(enumerate(0, c).empty());
}

TEST_CASE("counts equal the pentagonal oracle up to 40") {
  auto p = pentagonal_partition_counts(40);
  for (int k = 0; k <= 40; ++k) CHECK(Int(enumerate(k).size()) == p[static_cast<std::size_t>(k)]);
}

TEST_CASE("every emitted partition satisfies the validator") {
  std::vector<PartitionConstraints> cases;
  PartitionConstraints c;
  cases.push_back(c);
  c.min_part = 2;
  cases.push_back(c);
  c = {};
  c.max_part = 3;
  c.max_size = 4;
  cases.push_back(c);
  c = {};
  c.min_gap = 2;
  cases.push_back(c);
  c = {};
  c.distinct = true;
  c.min_size = 2;
  cases.push_back(c);
  c = {};
  c.congruence = {{3, {1, 2}}};
  cases.push_back(c);
  c = {};
  c.allowed_parts = {{1, 3, 5}};
  cases.push_back(c);

  for (const auto& cons : cases) {
    for (int k = 0; k <= 18; ++k) {
      auto lams = enumerate(k, cons);
      // Emission equals filter-of-all: same count, all admitted, all valid.
      std::size_t expected = 0;
      for (const auto& parts : brute_partitions(k))
        if (cons.admits(Partition::from_parts(parts))) ++expected;
      CHECK(lams.size() == expected);
      for (const auto& lam : lams) {
        CHECK(lam.valid());
        CHECK(lam.k == k);
        CHECK(cons.admits(lam));
      }
    }
  }
}

TEST_CASE("size-bounded layers reassemble") {
  for (int k = 1; k <= 14; ++k) {
    for (int s = 1; s < k; ++s) {
      PartitionConstraints upto_s, exactly_next, upto_next;
      upto_s.max_size = s;
      exactly_next.min_size = s + 1;
      exactly_next.max_size = s + 1;
      upto_next.max_size = s + 1;
      auto a = enumerate(k, upto_s);
      auto b = enumerate(k, exactly_next);
      auto c2 = enumerate(k, upto_next);
      CHECK(a.size() + b.size() == c2.size());
      std::set<std::string> uni;
      for (const auto& lam : a) uni.insert(lam.str());
      for (const auto& lam : b) uni.insert(lam.str());
      std::set<std::string> whole;
      for (const auto& lam : c2) whole.insert(lam.str());
      CHECK(uni == whole);
    }
  }
}

TEST_CASE("max_feasible_size") {
  CHECK(max_feasible_size(10, 1, 0) == 10);
  CHECK(max_feasible_size(10, 1, 10) == 1);
  // d < 2k/3 + 1 forces size <= 2 (gap = k - d, minimum part 1).
  for (int k = 3; k <= 20; ++k) {
    for (int d = 0; d < 2 * k / 3 + 1; ++d) CHECK(max_feasible_size(k, 1, k - d) <= 2);
  }
  // No enumerated partition exceeds the bound.
  for (int k = 1; k <= 16; ++k) {
    for (int gap = 0; gap <= k; ++gap) {
      for (int min_part = 1; min_part <= 3; ++min_part) {
        PartitionConstraints c;
        c.min_gap = gap;
        c.min_part = min_part;
        const int bound = max_feasible_size(k, min_part, gap);
        for (const auto& lam : enumerate(k, c)) CHECK(lam.size() <= bound);
      }
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnk/limits.hpp"
#include "gnk/koh.hpp"
#include "gnk/qbinom.hpp"

using namespace gnk;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("diagonal sequences start as published") {
  CHECK(gs_diagonal_sequence(1, 6) == ints({1, 2, 5, 10, 17, 26, 37}));
  CHECK(gs_diagonal_sequence(2, 6) == ints({1, 2, 6, 20, 65, 186, 462}));
  CHECK(gs_diagonal_sequence(3, 8) == ints({1, 2, 6, 20, 70, 252, 896, 2976, 8955}));
  CHECK(gs_diagonal_sequence(4, 8) == ints({1, 2, 6, 20, 70, 252, 924, 3432, 12705}));
  CHECK(gs_diagonal_sequence(5, 10) ==
        ints({1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 183755}));
}

TEST_CASE("limit formulas for s = 1, 2, 3") {
  CHECK(limit_formula_check(1, 4, 5));  // 21 = 4*5 + 1
  CHECK(limit_formula_check(2, 2, 2));  // 6 = C(4,2)
  CHECK(limit_formula_check(3, 0, 9));  // G_s(0,k) = 1
  for (int s : {1, 2, 3})
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= 10; ++k) CHECK(limit_formula_check(s, n, k));
}

TEST_CASE("conjectured diagonals for s = 4, 5") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(conjectured_diagonal_check(4, n));
    CHECK(conjectured_diagonal_check(5, n));
  }
  CHECK(eval_at_one(gs(8, 8, 5)) == 12870);  // still the central binomial at n = 8
}

TEST_CASE("central binomial convergence for n <= s") {
  CHECK(central_binomial_convergence(3, 3));   // 20
  CHECK(central_binomial_convergence(1, 1));   // 2
  CHECK(central_binomial_convergence(10, 10)); // 184756
  for (int s = 1; s <= 8; ++s)
    for (int n = 0; n <= s; ++n) CHECK(central_binomial_convergence(s, n));
}

TEST_CASE("diagonal terms are nondecreasing in s") {
  for (int n = 0; n <= 12; ++n) {
    Int prev = 0;
    for (int s = 1; s <= 6; ++s) {
      const Int cur = eval_at_one(gs(n, n, s));
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("oeis id map") {
  CHECK(oeis_ids().at(1) == "A002522");
  CHECK(oeis_ids().at(5) == "A302646");
  CHECK(oeis_ids().size() == 5);
}

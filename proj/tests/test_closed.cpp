#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnk/closed.hpp"
#include "gnk/errors.hpp"
#include "gnk/koh.hpp"
#include "gnk/qbinom.hpp"
#include "gnk/shape.hpp"

using namespace gnk;

TEST_CASE("explicit size-1 form") {
  CHECK(g1_explicit(0, 5) == QPoly::one());
  CHECK(g1_explicit(2, 2) == QPoly{1, 1, 1, 1, 1});
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= 12; ++k) CHECK(g1_explicit(n, k) == gs(n, k, 1));
}

TEST_CASE("explicit size-2 form") {
  CHECK(g2_explicit(0, 7) == QPoly::one());
  // [3] + [2,1] contributions at (2,3), computed by hand.
  CHECK(g2_explicit(2, 3) == QPoly{1, 1, 2, 2, 2, 1, 1});
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= 12; ++k) {
      const QPoly g = g2_explicit(n, k);
      CHECK(g == gs(n, k, 2));
      CHECK(is_sym_uni(g, static_cast<long long>(n) * k));
    }
}

TEST_CASE("explicit size-3 form") {
  CHECK(g3_explicit(1, 6) == g2_explicit(1, 6));
  CHECK(g3_explicit(0, 4) == QPoly::one());
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= 10; ++k) {
      const QPoly g = g3_explicit(n, k);
      CHECK(g == gs(n, k, 3));
      CHECK(is_sym_uni(g, static_cast<long long>(n) * k));
    }
  for (int n = 0; n <= 10; ++n) CHECK(g3_explicit(n, 3) == gnk_product(n, 3));
}

TEST_CASE("size-3 minus size-2 difference vanishes for n = 2, 3") {
  for (int n : {2, 3})
    for (int k = 0; k <= 20; ++k) CHECK(g3_explicit(n, k) == g2_explicit(n, k));
}

TEST_CASE("telescoped two-part sum") {
  CHECK(useful_gem_check(3, 7, 0));  // empty sum, both sides zero
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= 12; ++k)
      for (int D = 0; 2 * D <= k; ++D) CHECK(useful_gem_check(n, k, D));
  CHECK_THROWS_AS(useful_gem_check(0, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(useful_gem_check(2, 4, 3), std::invalid_argument);
}

TEST_CASE("conjectured recurrence residual vanishes") {
  for (int s : {1, 3})
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= 10; ++k) CHECK(conjecture_residual(s, n, k) == QPoly::zero());
  // Spot checks at larger s.
  CHECK(conjecture_residual(7, 9, 12) == QPoly::zero());
  CHECK(conjecture_residual(10, 4, 17) == QPoly::zero());
}

TEST_CASE("forward recurrence") {
  for (int s : {2, 3, 4})
    for (int k = 0; k <= 8; ++k) {
      for (int n = 0; n <= 8; ++n) CHECK(gs_forward(s, n, 0) == QPoly::one());
      for (int n = 0; n < s; ++n) CHECK(gs_forward(s, n, k) == gs(n, k, s));
    }
  // g_s(3,2,4) is reachable for s = 4 (n < s).
  CHECK(gs_forward(4, 3, 2) == gs(3, 2, 4));
  // Once n >= s the path needs a cell on n = k+s-1.
  CHECK_THROWS_AS(gs_forward(2, 3, 2), SingularLine);  // (3,2) is itself on the line
  CHECK_THROWS_AS(gs_forward(2, 2, 1), SingularLine);
  CHECK_THROWS_AS(gs_forward(3, 5, 1), SingularLine);
}

TEST_CASE("relation along the singular line") {
  for (int s = 1; s <= 4; ++s)
    for (int k = 0; k <= 10; ++k) CHECK(singular_line_check(s, k));
}

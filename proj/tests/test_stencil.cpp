#include <cmath>
#include <stdexcept>

#include "distfrac/stencil.hpp"
#include "doctest.h"

using namespace distfrac;

TEST_CASE("stencil reduces to the classical second difference at order 2") {
  const auto s = build_stencil(2.0, 6);
  CHECK(s.g[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s.g[1] == doctest::Approx(-1.0).epsilon(1e-14));
  for (std::size_t k = 2; k <= 6; ++k) {
    CHECK(std::abs(s.g[k]) < 1e-15);
  }
}

TEST_CASE("leading coefficient from the closed form") {
  const auto s = build_stencil(1.5, 4);
  const double expected =
      std::tgamma(2.5) / (std::tgamma(1.75) * std::tgamma(1.75));
  CHECK(s.g[0] == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("first recurrence step is strictly negative for any order") {
  for (double order : {1.05, 1.3, 1.7, 1.9, 2.0}) {
    const auto s = build_stencil(order, 2);
    CHECK(s.g[1] ==
          doctest::Approx((1.0 - (order + 1.0) / (0.5 * order + 1.0)) * s.g[0])
              .epsilon(1e-14));
    CHECK(s.g[1] < 0.0);
  }
}

TEST_CASE("sign pattern, partial sums and decay across the order grid") {
  for (int tenth = 11; tenth <= 20; ++tenth) {
    const double order = tenth / 10.0;
    const auto s = build_stencil(order, 4096);
    CHECK(s.g[0] >= 0.0);
    double running = s.g[0];
    double previous_sum = s.g[0];
    for (std::size_t k = 1; k <= 4096; ++k) {
      CHECK(s.g[k] <= 0.0);
      running += 2.0 * s.g[k];
      // partial-sum inequality: the absolute tail never exceeds g0
      CHECK(running >= -1e-12);
      // monotone decay towards the zero full sum
      CHECK(running <= previous_sum + 1e-15);
      previous_sum = running;
    }
    // tail actually became small
    CHECK(running < 0.05 * s.g[0]);
  }
}

TEST_CASE("closed form cross-check for small offsets") {
  for (double order : {1.1, 1.3, 1.5, 1.7, 1.9}) {
    const auto s = build_stencil(order, 20);
    for (std::size_t k = 0; k <= 20; ++k) {
      const double closed =
          ((k % 2 == 0) ? 1.0 : -1.0) * std::tgamma(order + 1.0) /
          (std::tgamma(0.5 * order - k + 1.0) *
           std::tgamma(0.5 * order + k + 1.0));
      CHECK(s.g[k] == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("rejects orders outside (1, 2] and zero length") {
  CHECK_THROWS_AS(build_stencil(1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_stencil(2.1, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_stencil(0.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_stencil(1.5, 0), std::invalid_argument);
}

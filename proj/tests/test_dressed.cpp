#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trimodal/dressed.hpp"

using namespace trimodal;

TEST_SUITE("dressed") {
  TEST_CASE("mixing angle at n=0, r=1") {
    const auto a = mixing_angle(0, DressedParams(1.0, 0.0));
    CHECK(a.cos == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(a.sin == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  }

  TEST_CASE("boundary level n=-1 is bare") {
    for (double r : {0.3, 1.0, 4.0}) {
      const auto a = mixing_angle(-1, DressedParams(r, 0.0));
      CHECK(a.cos == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(a.sin == 0.0);
    }
    CHECK_THROWS_AS(mixing_angle(-2, DressedParams()), std::invalid_argument);
  }

  TEST_CASE("large r decouples the second channel") {
    const auto a = mixing_angle(0, DressedParams(1e6, 0.0));
    CHECK(a.cos == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(a.sin < 1e-6);
  }

  TEST_CASE("cos^2 + sin^2 = 1") {
    for (int n = -1; n <= 8; ++n) {
      for (double r : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const auto a = mixing_angle(n, DressedParams(r, 0.3));
        CHECK(std::abs(a.cos * a.cos + a.sin * a.sin - 1.0) <= 1e-12);
        CHECK(a.cos > 0.0);
        CHECK(a.cos <= 1.0);
      }
    }
  }

  TEST_CASE("splitting values") {
    CHECK(splitting(0, DressedParams(1.0, 0.0)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(splitting(2, DressedParams(1.0, 0.0)) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-14));
    const double big = splitting(0, DressedParams(1.0, 1e6));
    CHECK(big > 0.0);
    CHECK(big == doctest::Approx(3.0 / 1e6).epsilon(1e-5));
  }

  TEST_CASE("splitting increases with n and decreases with delta") {
    for (double r : {0.5, 1.0, 2.0}) {
      for (double delta : {-2.0, 0.0, 3.0}) {
        for (int n = 0; n < 8; ++n) {
          CHECK(splitting(n + 1, DressedParams(r, delta)) > splitting(n, DressedParams(r, delta)));
          CHECK(splitting(n, DressedParams(r, delta + 0.5)) < splitting(n, DressedParams(r, delta)));
        }
      }
    }
  }

  TEST_CASE("dressed vectors are an orthonormal basis of the pair span") {
    for (int n : {0, 1, 2}) {
      for (double r : {0.5, 1.0, 2.0}) {
        const auto v = dressed_vectors(n, DressedParams(r, 0.0));
        const double dot = v.plus[0] * v.minus[0] + v.plus[1] * v.minus[1];
        CHECK(std::abs(dot) <= 1e-12);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            const double proj = v.plus[static_cast<std::size_t>(i)] * v.plus[static_cast<std::size_t>(j)] +
                                v.minus[static_cast<std::size_t>(i)] * v.minus[static_cast<std::size_t>(j)];
            CHECK(std::abs(proj - (i == j ? 1.0 : 0.0)) <= 1e-12);
          }
        }
      }
    }
    const auto v = dressed_vectors(0, DressedParams(1.0, 0.0));
    CHECK(v.plus[0] == doctest::Approx(0.577350269189626).epsilon(1e-12));
    CHECK(v.plus[1] == doctest::Approx(0.816496580927726).epsilon(1e-12));
  }

  TEST_CASE("dimensionless hopping scaling") {
    const DressedParams p(1.0, 0.0);
    CHECK(dimensionless_hopping(2, p, std::sqrt(3.0) * (2.0 / 3.0) * 50.0) == doctest::Approx(50.0).epsilon(1e-13));
    CHECK(dimensionless_hopping(2, DressedParams(2.5, -1.0), 0.0) == 0.0);
    double previous = -1.0;
    for (double x : {0.1, 1.0, 10.0, 100.0}) {
      const double xi = dimensionless_hopping(4, p, x);
      CHECK(xi > previous);
      previous = xi;
    }
    CHECK_THROWS_AS(dimensionless_hopping(8, p, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dimensionless_hopping(3, p, 1.0), std::invalid_argument);
  }

  TEST_CASE("reference level and weights") {
    CHECK(reference_level(2) == 0);
    CHECK(reference_level(6) == 4);
    const DressedParams p(1.3, 0.2);
    CHECK(dressed_weight(0, 2, p) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dressed_weight(4, 6, p) == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("non-positive ratio is rejected") {
    CHECK_THROWS_AS(DressedParams(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DressedParams(-1.0, 0.0), std::invalid_argument);
  }
}

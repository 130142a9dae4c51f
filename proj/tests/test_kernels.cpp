#include <doctest.h>

#include <cmath>

#include "robustsub/error.hpp"
#include "robustsub/kernels.hpp"

using namespace robustsub;

TEST_SUITE("kernels") {
  TEST_CASE("classical kernels at fixed points") {
    CHECK(eval_f(Kernel::chung_lu(), 1.0) == 1.0);
    CHECK(eval_f(Kernel::poisson(), 0.0) == 0.0);
    CHECK(eval_f(Kernel::generalized(), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_r(Kernel::chung_lu(), 0.5) == 1.0);
    CHECK(eval_r(Kernel::generalized(), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_r(Kernel::poisson(), 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(Kernel::poisson().r1() == doctest::Approx(0.6321206).epsilon(1e-7));
  }

  TEST_CASE("r(0) is one") {
    for (const auto& k : {Kernel::chung_lu(), Kernel::poisson(), Kernel::generalized()}) {
      CHECK(k.r(0.0) == 1.0);
      CHECK(k.r(1e-300) == doctest::Approx(1.0));
    }
  }

  TEST_CASE("domain is checked with a 1e-12 slack") {
    const Kernel k = Kernel::chung_lu();
    CHECK_NOTHROW(k.f(1.0 + 5e-13));
    CHECK_NOTHROW(k.f(-5e-13));
    CHECK_THROWS_AS(k.f(1.0 + 1e-9), Error);
    CHECK_THROWS_AS(k.f(-1e-9), Error);
    try {
      k.f(2.0);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DomainError);
    }
  }

  TEST_CASE("f and u r(u) agree to rounding") {
    for (const auto& k : {Kernel::chung_lu(), Kernel::poisson(), Kernel::generalized()}) {
      for (int i = 1; i <= 1000; ++i) {
        const double u = i / 1000.0;
        const double f = k.f(u);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        CHECK(f <= u + 1e-15);
        CHECK(std::abs(k.r(u) * u - f) <= 1e-14 * std::max(f, 1e-300));
      }
    }
  }

  TEST_CASE("assumption 1 flags") {
    const auto cl = check_assumption1(Kernel::chung_lu(), 1001);
    CHECK(cl.nonnegative);
    CHECK(cl.nondecreasing);
    CHECK(cl.convex);
    for (const auto& k : {Kernel::poisson(), Kernel::generalized()}) {
      const auto rep = check_assumption1(k, 1001);
      CHECK(rep.nonnegative);
      CHECK(rep.nondecreasing);
      CHECK_FALSE(rep.convex);
      CHECK(rep.worst_violation < 0.0);
    }
    // Second difference of 1 - e^{-u} on step h is about -e^{-u} h^2; the
    // largest magnitude sits at u = 0.
    const double h = 1e-3;
    CHECK(check_assumption1(Kernel::poisson(), 1001).worst_violation ==
          doctest::Approx(-(1 - std::exp(-h)) * (1 - std::exp(-h))).epsilon(1e-6));
  }

  TEST_CASE("assumption 2 holds for the classical kernels") {
    for (const auto& k : {Kernel::chung_lu(), Kernel::poisson(), Kernel::generalized()}) {
      const auto rep = check_assumption2(k, 1001);
      CHECK(rep.r0_is_one);
      CHECK(rep.r_nonincreasing);
    }
  }

  TEST_CASE("custom tabulated kernels") {
    const Kernel half = Kernel::custom({0.0, 1.0}, {0.0, 0.5}, 0.5);
    CHECK(half.f(0.4) == doctest::Approx(0.2));
    CHECK(half.r1() == doctest::Approx(0.5));
    CHECK_FALSE(check_assumption2(half, 101).r0_is_one);

    // Concave on [0, 1/2] then flat: r non-increasing but f not convex.
    const Kernel capped = Kernel::custom({0.0, 0.5, 1.0}, {0.0, 0.5, 0.5}, 0.5);
    CHECK(check_assumption2(capped, 101).r_nonincreasing);
    CHECK_FALSE(check_assumption1(capped, 101).convex);

    // Increasing r violates assumption 2.
    const Kernel bumped = Kernel::custom({0.0, 0.5, 1.0}, {0.0, 0.25, 1.0}, 1.0);
    CHECK_FALSE(check_assumption2(bumped, 101).r_nonincreasing);
    CHECK(check_assumption2(bumped, 101).worst_violation < 0.0);

    CHECK_THROWS_AS(Kernel::custom({0.0, 1.0}, {0.0, 0.5}, 0.7), Error);
    CHECK_THROWS_AS(Kernel::custom({0.0, 0.5}, {0.0, 0.5}, 0.5), Error);
    CHECK_THROWS_AS(Kernel::custom({0.0, 1.0}, {0.0, 1.5}, 1.5), Error);
  }

  TEST_CASE("kernels by name") {
    CHECK(Kernel::from_name("chung-lu").kind() == KernelKind::ChungLu);
    CHECK(Kernel::from_name("poisson").kind() == KernelKind::PoissonRG);
    CHECK(Kernel::from_name("generalized").kind() == KernelKind::GeneralizedRG);
    CHECK_THROWS_AS(Kernel::from_name("gaussian"), Error);
  }
}

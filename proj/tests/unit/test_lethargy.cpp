#include "doctest.h"
#include "snlab/lethargy.hpp"
#include "support.hpp"

using namespace snlab;

namespace {

std::vector<double> power_target(std::size_t n, double beta) {
  std::vector<double> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = std::pow(k + 1.0, -beta);
  return d;
}

}  // namespace

TEST_SUITE("lethargy") {
  TEST_CASE("target validation") {
    CHECK_THROWS_AS(LethargyTarget({}), DomainError);
    CHECK_THROWS_AS(LethargyTarget({1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(LethargyTarget({1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(LethargyTarget({1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(LethargyTarget({1.0, -0.5}), DomainError);
    CHECK_NOTHROW(LethargyTarget({1.0, 0.5, 0.25}));
  }

  TEST_CASE("prescribed diagonal reproduces the target exactly") {
    for (double beta : {0.5, 1.0, 2.0}) {
      const LethargyTarget target(power_target(64, beta));
      const auto pw = build_prescribed_widths(target);
      const auto rep = verify_width_floor(pw.op, target);
      CHECK(rep.floors_met);
      CHECK(rep.order_holds);
      CHECK_FALSE(rep.first_violation.has_value());
      CHECK(std::abs(rep.min_slack) <= 1e-12);
      REQUIRE(rep.rows.size() == 64);
      for (const auto& row : rep.rows) {
        CHECK(row.delta == doctest::Approx(target.values()[row.n]));
        CHECK(row.alpha_next >= row.delta);
      }
    }
  }

  TEST_CASE("summability heuristic follows the series") {
    CHECK(kernel_spec(LethargyTarget(power_target(4096, 2.0))).summable);
    CHECK(kernel_spec(LethargyTarget(power_target(4096, 0.5))).summable == false);
    std::vector<double> geo(200);
    for (std::size_t k = 0; k < geo.size(); ++k) geo[k] = std::exp2(-static_cast<double>(k));
    const auto k = kernel_spec(LethargyTarget(geo));
    CHECK(k.summable);
    CHECK(k.coefficient_sum == doctest::Approx(2.0));
  }

  TEST_CASE("harmonic target is not summable") {
    const auto k = kernel_spec(LethargyTarget(power_target(10000, 1.0)));
    CHECK_FALSE(k.summable);
    CHECK(k.tail_growth > 0.05);
  }

  TEST_CASE("a shrunk operator violates the floor at the first index") {
    const LethargyTarget target(power_target(16, 1.0));
    auto pw = build_prescribed_widths(target);
    const ComplexMatrix shrunk = 0.9 * pw.op;
    const auto rep = verify_width_floor(shrunk, target);
    CHECK_FALSE(rep.floors_met);
    REQUIRE(rep.first_violation.has_value());
    CHECK(*rep.first_violation == 0);
    CHECK(rep.min_slack == doctest::Approx(-0.1));
  }

  TEST_CASE("unitary conjugation preserves the widths") {
    testing::Gen g(81);
    const LethargyTarget target(power_target(12, 1.5));
    const auto pw = build_prescribed_widths(target);
    const auto u = testing::random_unitary(12, g), v = testing::random_unitary(12, g);
    const auto rep = verify_width_floor(u * pw.op * v, target);
    CHECK(std::abs(rep.min_slack) <= 1e-10);
  }

  TEST_CASE("operator smaller than the target length is rejected") {
    const LethargyTarget target(power_target(8, 1.0));
    CHECK_THROWS_AS(verify_width_floor(ComplexMatrix::Identity(4, 4), target), DomainError);
  }

  TEST_CASE("three-term target") {
    const LethargyTarget target({3, 2, 1});
    const auto pw = build_prescribed_widths(target);
    CHECK((pw.op - testing::diagonal({3, 2, 1})).norm() == 0.0);
    CHECK(verify_width_floor(pw.op, target).min_slack == 0.0);
  }

  TEST_CASE("harmonic and geometric targets flag the kernel condition") {
    std::vector<double> geo(32);
    for (int n = 0; n < 32; ++n) geo[n] = std::exp2(-n);
    const auto g = build_prescribed_widths(LethargyTarget(geo));
    CHECK(g.kernel.summable);
    CHECK(g.kernel.coefficient_sum == doctest::Approx(2.0 - std::exp2(-31)));
    const auto s = testing::gram_singular_values(g.op);
    for (int n = 0; n < 32; ++n) CHECK(s[n] == doctest::Approx(geo[n]).epsilon(1e-10));
    const auto h = build_prescribed_widths(LethargyTarget(power_target(64, 1.0)));
    CHECK_FALSE(h.kernel.summable);
  }

  TEST_CASE("positive-definite perturbation moves the widths by at most its norm") {
    testing::Gen g(82);
    const LethargyTarget target(power_target(16, 1.0));
    const auto pw = build_prescribed_widths(target);
    const auto a = testing::gaussian_matrix(16, 16, g);
    ComplexMatrix p = a * a.adjoint();
    const double eps = 1e-3;
    p *= eps / testing::power_norm(p);
    const auto rep = verify_width_floor(pw.op + p, target);
    CHECK(rep.min_slack >= -eps * (1 + 1e-9));
    MESSAGE("perturbed min slack " << rep.min_slack);
  }

  TEST_CASE("an impossible first target is caught at n = 0") {
    testing::Gen g(83);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = testing::gaussian_matrix(8, 8, g);
      std::vector<double> strict(8);
      const double top = testing::power_norm(t) * 1.5;
      for (int n = 0; n < 8; ++n) strict[n] = top * std::pow(0.5, n);
      const auto rep = verify_width_floor(t, LethargyTarget(strict));
      REQUIRE(rep.first_violation.has_value());
      CHECK(*rep.first_violation == 0);
    }
  }
}

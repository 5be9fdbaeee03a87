#include "doctest.h"
#include "snlab/corpus.hpp"
#include "snlab/hop.hpp"
#include "support.hpp"

using namespace snlab;
using testing::Gen;

namespace {

// P diag(d) P^{-1} with a real P whose columns have unit norm.
ComplexMatrix conjugate(const std::vector<double>& d, Gen& g, Eigen::MatrixXd* p_out = nullptr) {
  const int n = static_cast<int>(d.size());
  Eigen::MatrixXd p = testing::gaussian_matrix(n, n, g, false).real() + 3.0 * Eigen::MatrixXd::Identity(n, n);
  for (int j = 0; j < n; ++j) p.col(j).normalize();
  if (p_out) *p_out = p;
  const Eigen::MatrixXd t = p * Eigen::Map<const Eigen::VectorXd>(d.data(), n).asDiagonal() * p.inverse();
  return t.cast<Complex>();
}

double condition(const Eigen::MatrixXd& p) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(p);
  return svd.singularValues()(0) / svd.singularValues()(p.cols() - 1);
}

}  // namespace

TEST_SUITE("hop") {
  TEST_CASE("real diagonal operators have constant one") {
    Gen g(41);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> d(2 + trial % 6);
      for (auto& x : d) x = u(g);
      const auto cert = certify_h(testing::diagonal(d));
      CHECK(cert.is_real_spectrum);
      CHECK(cert.is_h());
      CHECK(cert.c_estimate == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(cert.c_estimate <= 1.0 + 1e-12);
      CHECK(*cert.c_upper == doctest::Approx(1.0));
    }
  }

  TEST_CASE("random Hermitian matrices have constant one") {
    Gen g(42);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing::gaussian_matrix(2 + trial % 8, 2 + trial % 8, g);
      ComplexMatrix h = (a + a.adjoint()) / 2.0;
      const auto cert = certify_h(h);
      CHECK(cert.c_estimate >= 1.0 - 1e-4);
      CHECK(cert.c_estimate <= 1.0 + 1e-4);
    }
  }

  TEST_CASE("rotation-scaling matrix is not an H-operator") {
    const auto cert = certify_h(testing::from_rows({{2, -3}, {3, 2}}));
    CHECK_FALSE(cert.is_real_spectrum);
    CHECK_FALSE(cert.is_h());
    CHECK(cert.max_abs_imag == doctest::Approx(3.0));
  }

  TEST_CASE("non-square input is rejected") { CHECK_THROWS_AS(certify_h(ComplexMatrix::Ones(2, 3)), DomainError); }

  TEST_CASE("samples on the spectrum are discarded and logged") {
    ComplexMatrix t = ComplexMatrix::Zero(2, 2);
    t(0, 0) = Complex(0, 1);
    t(1, 1) = Complex(0, -1);
    const auto cert = certify_h(t);
    CHECK_FALSE(cert.is_real_spectrum);
    bool logged = false;
    for (const auto& line : cert.log) logged = logged || line.find("discarded") != std::string::npos;
    CHECK(logged);
  }

  TEST_CASE("zero matrix") {
    const auto cert = certify_h(ComplexMatrix::Zero(3, 3));
    CHECK(cert.is_h());
    CHECK(cert.c_estimate == 1.0);
  }

  TEST_CASE("eigenvector bound dominates the sampled constant") {
    Gen g(43);
    for (int trial = 0; trial < 30; ++trial) {
      Eigen::MatrixXd p;
      const auto t = conjugate({3, 2, 1, -0.5}, g, &p);
      const auto cert = certify_h(t);
      REQUIRE(cert.is_h());
      CHECK(cert.c_estimate <= *cert.c_upper * (1 + 1e-8));
      CHECK(*cert.c_upper == doctest::Approx(condition(p)).epsilon(1e-6));
    }
  }

  TEST_CASE("sampled constant is monotone under nested grid refinement") {
    Gen g(44);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = conjugate({1, 0.5, -0.3}, g);
      double prev = 0.0;
      for (int level = 0; level < 4; ++level) {
        GridSpec gs;
        gs.re_points = (8 << level) - ((1 << level) - 1);  // 8, 15, 29, 57: nested
        gs.im_points = (4 << level) - ((1 << level) - 1);
        gs.refine_iterations = 0;
        const double c = certify_h(t, 1e-8, gs).c_grid;
        CHECK(c >= prev * (1 - 1e-12));
        prev = c;
      }
    }
  }

  TEST_CASE("Markus chain for a diagonal fixture") {
    const auto t = testing::diagonal({3, 2, 1});
    const auto mr = markus_verify(t, certify_h(t), snumber_table(t, NormKind::spectral, 3));
    CHECK_FALSE(mr.refused);
    CHECK(mr.verdict);
    CHECK(mr.c_used == doctest::Approx(1.0));
    for (const auto& row : mr.rows) {
      CHECK(row.delta_prev == doctest::Approx(row.alpha));
      CHECK(row.alpha == doctest::Approx(row.abs_lambda));
      CHECK(row.slack_left >= 0.0);
      CHECK(row.slack_mid >= 0.0);
      CHECK(row.slack_right >= 0.0);
    }
  }

  TEST_CASE("Markus chain for conjugated diagonals") {
    Gen g(45);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = conjugate({3, 2, 1}, g);
      const auto cert = certify_h(t);
      const auto mr = markus_verify(t, cert, snumber_table(t, NormKind::spectral, 3));
      CHECK(mr.verdict);
      CHECK(mr.c_source == "c_upper");
      // Independent evaluation of the three inequalities.
      const auto s = testing::gram_singular_values(t);
      const double c = *cert.c_upper, lam[] = {3, 2, 1};
      for (int n = 0; n < 3; ++n) {
        CHECK(s[n] <= 2 * std::sqrt(2.0) * c * lam[n] + 1e-9);
        CHECK(2 * std::sqrt(2.0) * c * lam[n] <= 8 * c * (c + 1) * s[n] + 1e-9);
      }
    }
  }

  TEST_CASE("non-normal fixture: incomparable alpha and |lambda|, not certified") {
    const auto t = testing::from_rows({{2, 1, 0}, {0, 2, 0}, {1, 1, 1}});
    const auto cert = certify_h(t);
    const auto mr = markus_verify(t, cert, snumber_table(t, NormKind::spectral, 3));
    REQUIRE(mr.alpha_vs_eigen.size() == 3);
    CHECK(mr.alpha_vs_eigen[0] == 1);   // alpha_1 > |lambda_1|
    CHECK(mr.alpha_vs_eigen[1] == -1);  // alpha_2 < |lambda_2|
    CHECK_FALSE(cert.is_h());
    CHECK(mr.refused);
    CHECK_FALSE(mr.reason.empty());
  }

  TEST_CASE("non-real spectrum is refused with a reason") {
    const auto t = testing::from_rows({{2, -3}, {3, 2}});
    const auto mr = markus_verify(t, certify_h(t), snumber_table(t, NormKind::spectral, 2));
    CHECK(mr.refused);
    CHECK(mr.reason.find("not real") != std::string::npos);
  }

  TEST_CASE("Markus chain over a conjugated-H corpus") {
    CorpusSpec spec{CorpusKind::conjugated_h, 8, 100, 7};
    GridSpec coarse{12, 6, 1e-6, 1.0, true, 5};
    for (const auto& t : gen_corpus(spec)) {
      const auto cert = certify_h(t, 1e-8, coarse);
      REQUIRE(cert.is_h());
      CHECK(*cert.c_upper <= 10.0);
      CHECK(markus_verify(t, cert, snumber_table(t, NormKind::spectral, 8)).verdict);
    }
  }

  TEST_CASE("partial norms of a geometric diagonal stay within the factor") {
    std::vector<double> d(64);
    for (int n = 0; n < 64; ++n) d[n] = std::exp2(-(n + 1));
    const auto rep = corollary_equivalence(std::span<const double>(d), 1.0, 64);
    CHECK(rep.factor_bound == doctest::Approx(16.0));
    CHECK(rep.within_factor);
    CHECK(rep.saturated);
    double direct = 0.0;
    for (double v : d) direct += v;
    CHECK(rep.rows.back().norm_lambda == doctest::Approx(direct));
  }

  TEST_CASE("inverse-log diagonal shows no saturation") {
    std::vector<double> d(10000);
    for (int n = 0; n < 10000; ++n) d[n] = 1.0 / std::log(n + 2.0);
    const auto rep = corollary_equivalence(std::span<const double>(d), 2.0, 10000);
    CHECK_FALSE(rep.saturated);
    for (std::size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i].norm_lambda > rep.rows[i - 1].norm_lambda);
  }

  TEST_CASE("zero operator is trivially equivalent") {
    const std::vector<double> z(16, 0.0);
    const auto rep = corollary_equivalence(std::span<const double>(z), 1.0, 16);
    for (const auto& row : rep.rows) {
      CHECK(row.norm_lambda == 0.0);
      CHECK(row.norm_alpha == 0.0);
    }
    CHECK(rep.within_factor);
  }

  TEST_CASE("dense family partial norms stay within the factor") {
    Gen g(46);
    std::vector<ComplexMatrix> fam;
    for (int trial = 0; trial < 10; ++trial) fam.push_back(conjugate({1, 0.5, 0.25, 0.125}, g));
    double c = 1.0;
    for (const auto& t : fam) c = std::max(c, *certify_h(t).c_upper);
    const auto rep = corollary_equivalence(std::span<const ComplexMatrix>(fam), 1.0, c);
    CHECK(rep.within_factor);
  }
}

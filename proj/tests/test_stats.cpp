#include <doctest.h>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "regimefactor/errors.hpp"
#include "regimefactor/rng.hpp"
#include "regimefactor/stats.hpp"

using namespace regimefactor;

TEST_CASE("ols matches normal equations") {
  Rng rng(11);
  const int T = 60, k = 3;
  Eigen::MatrixXd X(T, k);
  Eigen::VectorXd y(T);
  for (int t = 0; t < T; ++t) {
    X(t, 0) = 1.0;
    X(t, 1) = rng.normal();
    X(t, 2) = rng.normal();
    y(t) = 2.0 - 0.5 * X(t, 1) + 1.25 * X(t, 2) + 0.1 * rng.normal();
  }
  const OlsFit fit = ols(X, y);
  // independent oracle: solve X'X b = X'y directly
  const Eigen::VectorXd b = (X.transpose() * X).ldlt().solve(X.transpose() * y);
  CHECK((fit.coef - b).cwiseAbs().maxCoeff() < 1e-10);
  // residual orthogonality to the design
  CHECK((X.transpose() * fit.residuals).cwiseAbs().maxCoeff() < 1e-9);

  SUBCASE("rank-deficient design rejected") {
    X.col(2) = 2.0 * X.col(1);
    CHECK_THROWS_AS(ols(X, y), NumericError);
  }
  SUBCASE("underdetermined rejected") {
    CHECK_THROWS_AS(ols(X.topRows(2), y.head(2)), ValidationError);
  }
}

TEST_CASE("ols exact fit recovers coefficients") {
  Eigen::MatrixXd X(4, 2);
  X << 1, 0, 1, 1, 1, 2, 1, 3;
  Eigen::VectorXd y = 3.0 * X.col(0) - 2.0 * X.col(1);
  const OlsFit fit = ols(X, y);
  CHECK(fit.coef(0) == doctest::Approx(3.0));
  CHECK(fit.coef(1) == doctest::Approx(-2.0));
  CHECK(fit.residuals.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("incomplete beta reference values") {
  // I_x(a,b) closed forms: I_x(1,1) = x, I_x(1,b) = 1-(1-x)^b, I_x(a,1) = x^a
  CHECK(incomplete_beta(1, 1, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(incomplete_beta(1, 4, 0.2) == doctest::Approx(1.0 - std::pow(0.8, 4)).epsilon(1e-12));
  CHECK(incomplete_beta(3, 1, 0.7) == doctest::Approx(std::pow(0.7, 3)).epsilon(1e-12));
  // symmetry: I_x(a,b) = 1 - I_{1-x}(b,a)
  CHECK(incomplete_beta(2.5, 4.5, 0.35) ==
        doctest::Approx(1.0 - incomplete_beta(4.5, 2.5, 0.65)).epsilon(1e-12));
  CHECK(incomplete_beta(2, 3, 0.0) == 0.0);
  CHECK(incomplete_beta(2, 3, 1.0) == 1.0);
  CHECK_THROWS_AS(incomplete_beta(0.0, 1.0, 0.5), ValidationError);
}

TEST_CASE("F distribution") {
  // F(d1=1): sqrt relationship with t, and exact CDF values for small dof
  // F(2, d2): cdf(x) = 1 - (1 + 2x/d2)^(-d2/2)
  const double x = 1.7, d2 = 8.0;
  CHECK(f_cdf(x, 2.0, d2) ==
        doctest::Approx(1.0 - std::pow(1.0 + 2.0 * x / d2, -d2 / 2.0)).epsilon(1e-10));
  // F(d1, 2): cdf(x) = (d1 x / (d1 x + 2))^(d1/2)
  CHECK(f_cdf(x, 6.0, 2.0) ==
        doctest::Approx(std::pow(6.0 * x / (6.0 * x + 2.0), 3.0)).epsilon(1e-10));
  CHECK(f_cdf(0.0, 3, 5) == 0.0);
  CHECK(f_sf(x, 4, 9) == doctest::Approx(1.0 - f_cdf(x, 4, 9)));
  // median of F(d,d) is 1 for any d
  CHECK(f_cdf(1.0, 7, 7) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("quantile interpolation") {
  std::vector<double> v{4.0, 1.0, 3.0, 2.0};
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 1.0) == 4.0);
  CHECK(quantile(v, 0.5) == doctest::Approx(2.5));  // linear between order stats
  CHECK(quantile(v, 1.0 / 3.0) == doctest::Approx(2.0));
  CHECK(quantile({5.0}, 0.42) == 5.0);
  CHECK_THROWS_AS(quantile({}, 0.5), ValidationError);
  CHECK_THROWS_AS(quantile({1.0}, 1.5), ValidationError);
}

TEST_CASE("rng streams are deterministic and independent") {
  Rng a(123), b(123), c(124);
  for (int i = 0; i < 5; ++i) CHECK(a.normal() == b.normal());
  CHECK(a.uniform() == b.uniform());
  CHECK(a.normal() != c.normal());

  // derived streams differ from the parent and from each other
  Rng p(9);
  Rng d0(Rng::derive(9, 0)), d1(Rng::derive(9, 1));
  CHECK(Rng::derive(9, 0) != Rng::derive(9, 1));
  CHECK(d0.normal() != d1.normal());
  CHECK(p.uniform() >= 0.0);
  CHECK(p.uniform() < 1.0);
}

TEST_CASE("rng normal moments") {
  Rng rng(2024);
  const int n = 200000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  CHECK(std::abs(s / n) < 0.01);
  CHECK(std::abs(s2 / n - 1.0) < 0.02);
}

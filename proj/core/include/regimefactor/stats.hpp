#pragma once

#include <Eigen/Core>

namespace regimefactor {

// Regularized incomplete beta I_x(a, b) by continued fraction (Lentz).
double incomplete_beta(double a, double b, double x);

// F(d1, d2) distribution cdf / upper tail.
double f_cdf(double x, double d1, double d2);
double f_sf(double x, double d1, double d2);

struct OlsFit {
  Eigen::VectorXd coef;
  Eigen::VectorXd residuals;
};

// Least squares of y on columns of X (X includes the intercept if wanted).
// Rejects rank-deficient designs.
OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

// Empirical quantile (linear interpolation, type 7).
double quantile(std::vector<double> sorted_or_not, double p);

} // namespace regimefactor

#pragma once

#include <Eigen/Core>

namespace regimefactor {

// Principal-component factor estimate on a (standardized) T x N block.
// Normalization: F'F/T = I_r, loadings = X'F/T, and each factor's loading
// column sums to a non-negative value (sign convention).
struct FactorEstimate {
  Eigen::MatrixXd factors;     // T x r
  Eigen::MatrixXd loadings;    // N x r
  Eigen::VectorXd eigenvalues; // min(N,T) eigenvalues of X'X/T, descending
  int r = 0;
};

// Eigen-decomposition runs on the smaller of XX' (T x T) and X'X (N x N);
// both routes give identical factors up to roundoff.
FactorEstimate estimate_factors(const Eigen::MatrixXd& X, int r);

enum class FactorCriterion { ICp1, ICp2 };

// Information-criterion choice of the factor count over r in {1..r_max}:
//   IC(r) = log V(r) + r * penalty(N, T)
// with V(r) the mean squared residual.  Ties go to the smaller r; the
// minimum is floored at r = 1.
int ic_num_factors(const Eigen::MatrixXd& X, int r_max, FactorCriterion crit);

// Cross-section regression of one observation vector on fixed loadings
// (least squares).  Used to extend a factor estimate in real time.
Eigen::VectorXd project_factor(const Eigen::MatrixXd& loadings, const Eigen::VectorXd& x);

} // namespace regimefactor

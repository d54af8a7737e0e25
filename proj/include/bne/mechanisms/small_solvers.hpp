#pragma once

#include <Eigen/Dense>

namespace bne {

struct LpSolution {
    bool feasible = false;
    Eigen::VectorXd x;
    double objective = 0.0;
};

// min c'x  s.t.  A x >= b,  0 <= x <= upper.  Dense two-phase simplex with Bland's rule.
LpSolution solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                    const Eigen::VectorXd& upper);

// min 0.5 |x - r|^2  s.t.  G x >= h,  e'x = rhs,  starting from a feasible x0.
// Primal active-set method; throws std::runtime_error when it does not converge.
Eigen::VectorXd solve_projection_qp(const Eigen::MatrixXd& G, const Eigen::VectorXd& h, const Eigen::VectorXd& e,
                                    double rhs, const Eigen::VectorXd& r, const Eigen::VectorXd& x0);

}  // namespace bne

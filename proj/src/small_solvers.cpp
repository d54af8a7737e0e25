#include "bne/mechanisms/small_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bne {

namespace {

constexpr double kPivotTol = 1e-11;

// Simplex tableau: rows 0..m-1 are constraints, row m is the objective (reduced costs).
// Column `cols` holds the right-hand side.
struct Tableau {
    int m, cols;
    std::vector<double> t;
    std::vector<int> basis;

    double& at(int r, int c) { return t[static_cast<std::size_t>(r) * (cols + 1) + c]; }

    void pivot(int pr, int pc) {
        double p = at(pr, pc);
        for (int c = 0; c <= cols; ++c) at(pr, c) /= p;
        for (int r = 0; r <= m; ++r) {
            if (r == pr) continue;
            double f = at(r, pc);
            if (f == 0.0) continue;
            for (int c = 0; c <= cols; ++c) at(r, c) -= f * at(pr, c);
        }
        basis[static_cast<std::size_t>(pr)] = pc;
    }

    // Minimizes the objective row over columns < allowed. Returns false if unbounded.
    bool run(int allowed) {
        for (int iter = 0; iter < 10000; ++iter) {
            int enter = -1;
            for (int c = 0; c < allowed; ++c)
                if (at(m, c) < -1e-12) { enter = c; break; }
            if (enter < 0) return true;
            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int r = 0; r < m; ++r) {
                double a = at(r, enter);
                if (a <= kPivotTol) continue;
                double ratio = at(r, cols) / a;
                if (ratio < best - 1e-15 ||
                    (std::abs(ratio - best) <= 1e-15 && leave >= 0 &&
                     basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
        throw std::runtime_error("simplex: iteration limit");
    }
};

}  // namespace

LpSolution solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                    const Eigen::VectorXd& upper) {
    const int n = static_cast<int>(A.cols());
    const int mc = static_cast<int>(A.rows());
    const int m = mc + n;  // constraint rows plus upper-bound rows (-x >= -u)
    std::vector<double> rowb(static_cast<std::size_t>(m));
    Eigen::MatrixXd full(m, n);
    full.topRows(mc) = A;
    full.bottomRows(n) = -Eigen::MatrixXd::Identity(n, n);
    for (int r = 0; r < mc; ++r) rowb[static_cast<std::size_t>(r)] = b(r);
    for (int i = 0; i < n; ++i) rowb[static_cast<std::size_t>(mc + i)] = -upper(i);

    // Columns: x (n), surplus (m), artificials (one per row with positive rhs).
    std::vector<int> art_row;
    for (int r = 0; r < m; ++r)
        if (rowb[static_cast<std::size_t>(r)] > 0.0) art_row.push_back(r);
    const int na = static_cast<int>(art_row.size());
    Tableau T{m, n + m + na, {}, std::vector<int>(static_cast<std::size_t>(m))};
    T.t.assign(static_cast<std::size_t>(m + 1) * (T.cols + 1), 0.0);
    int a = 0;
    for (int r = 0; r < m; ++r) {
        double rb = rowb[static_cast<std::size_t>(r)];
        if (rb > 0.0) {
            // A x - s + art = b
            for (int j = 0; j < n; ++j) T.at(r, j) = full(r, j);
            T.at(r, n + r) = -1.0;
            T.at(r, n + m + a) = 1.0;
            T.at(r, T.cols) = rb;
            T.basis[static_cast<std::size_t>(r)] = n + m + a;
            ++a;
        } else {
            // -A x + s = -b
            for (int j = 0; j < n; ++j) T.at(r, j) = -full(r, j);
            T.at(r, n + r) = 1.0;
            T.at(r, T.cols) = -rb;
            T.basis[static_cast<std::size_t>(r)] = n + r;
        }
    }

    LpSolution out;
    if (na > 0) {
        // Phase I: minimize the sum of artificials.
        for (int r : art_row)
            for (int col = 0; col <= T.cols; ++col)
                if (col < n + m || col == T.cols) T.at(m, col) -= T.at(r, col);
        T.run(T.cols);
        if (-T.at(m, T.cols) > 1e-9) return out;
        // Drive remaining artificials out of the basis where possible.
        for (int r = 0; r < m; ++r) {
            if (T.basis[static_cast<std::size_t>(r)] < n + m) continue;
            for (int col = 0; col < n + m; ++col)
                if (std::abs(T.at(r, col)) > kPivotTol) { T.pivot(r, col); break; }
        }
    }
    // Phase II objective.
    for (int col = 0; col <= T.cols; ++col) T.at(m, col) = 0.0;
    for (int j = 0; j < n; ++j) T.at(m, j) = c(j);
    for (int r = 0; r < m; ++r) {
        int bv = T.basis[static_cast<std::size_t>(r)];
        double f = T.at(m, bv);
        if (f == 0.0) continue;
        for (int col = 0; col <= T.cols; ++col) T.at(m, col) -= f * T.at(r, col);
    }
    if (!T.run(n + m)) return out;
    out.x = Eigen::VectorXd::Zero(n);
    for (int r = 0; r < m; ++r) {
        int bv = T.basis[static_cast<std::size_t>(r)];
        if (bv < n) out.x(bv) = T.at(r, T.cols);
    }
    out.feasible = true;
    out.objective = c.dot(out.x);
    return out;
}

Eigen::VectorXd solve_projection_qp(const Eigen::MatrixXd& G, const Eigen::VectorXd& h, const Eigen::VectorXd& e,
                                    double rhs, const Eigen::VectorXd& r, const Eigen::VectorXd& x0) {
    const int n = static_cast<int>(G.cols());
    const int m = static_cast<int>(G.rows());
    Eigen::VectorXd x = x0;
    std::vector<int> work;  // active inequality rows; the equality is always active

    auto rows_of = [&](const std::vector<int>& w) {
        Eigen::MatrixXd M(static_cast<Eigen::Index>(w.size()) + 1, n);
        M.row(0) = e.transpose();
        for (std::size_t k = 0; k < w.size(); ++k) M.row(static_cast<Eigen::Index>(k) + 1) = G.row(w[k]);
        return M;
    };
    auto independent_of = [&](const std::vector<int>& w, int j) {
        Eigen::MatrixXd M = rows_of(w);
        Eigen::VectorXd g = G.row(j).transpose();
        Eigen::VectorXd coef = M.transpose().completeOrthogonalDecomposition().solve(g);
        return (M.transpose() * coef - g).norm() > 1e-9 * (1.0 + g.norm());
    };

    for (int j = 0; j < m; ++j)
        if (std::abs(G.row(j).dot(x) - h(j)) <= 1e-10 && static_cast<int>(work.size()) + 1 < n &&
            independent_of(work, j))
            work.push_back(j);

    for (int iter = 0; iter < 500; ++iter) {
        Eigen::MatrixXd M = rows_of(work);
        Eigen::VectorXd g = x - r;
        Eigen::VectorXd lambda = M.transpose().completeOrthogonalDecomposition().solve(g);
        Eigen::VectorXd d = -(g - M.transpose() * lambda);
        if (d.norm() <= 1e-13 * (1.0 + x.norm())) {
            int drop = -1;
            double most = -1e-12;
            for (std::size_t k = 0; k < work.size(); ++k)
                if (lambda(static_cast<Eigen::Index>(k) + 1) < most) {
                    most = lambda(static_cast<Eigen::Index>(k) + 1);
                    drop = static_cast<int>(k);
                }
            if (drop < 0) return x;
            work.erase(work.begin() + drop);
            continue;
        }
        double alpha = 1.0;
        int block = -1;
        for (int j = 0; j < m; ++j) {
            if (std::find(work.begin(), work.end(), j) != work.end()) continue;
            double gd = G.row(j).dot(d);
            if (gd >= -1e-14) continue;
            double step = (h(j) - G.row(j).dot(x)) / gd;
            if (step < alpha) {
                alpha = std::max(step, 0.0);
                block = j;
            }
        }
        x += alpha * d;
        if (block >= 0) work.push_back(block);
    }
    std::ostringstream msg;
    msg << "projection QP did not converge (n=" << n << ", constraints=" << m << ")";
    throw std::runtime_error(msg.str());
}

}  // namespace bne

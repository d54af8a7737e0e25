#include "bne/mechanisms/core_payments.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bne/mechanisms/small_solvers.hpp"

namespace bne {

CoreConstraints make_core_constraints(std::span<const double> W, std::size_t n, std::span<const int> ids,
                                      std::span<const double> bid) {
    const std::size_t k = ids.size();
    const std::uint32_t all = (1u << n) - 1u;
    CoreConstraints c;
    c.winners = k;
    c.winning_bid.assign(bid.begin(), bid.end());
    c.rhs.assign(std::size_t{1} << k, 0.0);
    for (std::uint32_t S = 1; S < (1u << k); ++S) {
        std::uint32_t removed = 0;
        double outside = 0.0;
        for (std::size_t w = 0; w < k; ++w) {
            if ((S >> w) & 1u)
                removed |= 1u << ids[w];
            else
                outside += bid[w];
        }
        c.rhs[S] = W[all & ~removed] - outside;
    }
    return c;
}

std::vector<double> vcg_payments(std::span<const double> W, std::size_t n, std::span<const int> ids,
                                 std::span<const double> bid) {
    const std::uint32_t all = (1u << n) - 1u;
    std::vector<double> p(ids.size());
    for (std::size_t w = 0; w < ids.size(); ++w)
        p[w] = std::max(0.0, W[all & ~(1u << ids[w])] - (W[all] - bid[w]));
    return p;
}

double core_violation(const CoreConstraints& c, std::span<const double> p) {
    double worst = 0.0;
    for (std::size_t w = 0; w < c.winners; ++w) {
        worst = std::max(worst, -p[w]);
        worst = std::max(worst, p[w] - c.winning_bid[w]);
    }
    for (std::uint32_t S = 1; S < c.rhs.size(); ++S) {
        double sum = 0.0;
        for (std::size_t w = 0; w < c.winners; ++w)
            if ((S >> w) & 1u) sum += p[w];
        worst = std::max(worst, c.rhs[S] - sum);
    }
    return worst;
}

namespace {

void constraint_matrix(const CoreConstraints& c, Eigen::MatrixXd& A, Eigen::VectorXd& b) {
    const auto k = static_cast<Eigen::Index>(c.winners);
    const auto rows = static_cast<Eigen::Index>(c.rhs.size()) - 1;
    A = Eigen::MatrixXd::Zero(rows, k);
    b.resize(rows);
    for (std::uint32_t S = 1; S < c.rhs.size(); ++S) {
        for (Eigen::Index w = 0; w < k; ++w)
            if ((S >> w) & 1u) A(S - 1, w) = 1.0;
        b(S - 1) = c.rhs[S];
    }
}

LpSolution min_revenue_lp(const CoreConstraints& c) {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    constraint_matrix(c, A, b);
    const auto k = static_cast<Eigen::Index>(c.winners);
    Eigen::VectorXd upper(k);
    for (Eigen::Index w = 0; w < k; ++w) upper(w) = c.winning_bid[static_cast<std::size_t>(w)];
    LpSolution s = solve_lp(A, b, Eigen::VectorXd::Ones(k), upper);
    if (!s.feasible) throw std::runtime_error("minimum-revenue core LP infeasible");
    return s;
}

}  // namespace

double minimum_core_revenue(const CoreConstraints& c) {
    if (c.winners == 0) return 0.0;
    return min_revenue_lp(c).objective;
}

std::vector<double> nearest_core_payments(const CoreConstraints& c, std::span<const double> reference) {
    const std::size_t k = c.winners;
    if (k == 0) return {};
    std::vector<double> ref(reference.begin(), reference.end());
    if (core_violation(c, ref) <= 1e-12) return ref;

    LpSolution lp = min_revenue_lp(c);
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    constraint_matrix(c, A, b);
    const auto kk = static_cast<Eigen::Index>(k);
    // Core rows, then p >= 0 and -p >= -bid.
    Eigen::MatrixXd G(A.rows() + 2 * kk, kk);
    Eigen::VectorXd h(A.rows() + 2 * kk);
    G.topRows(A.rows()) = A;
    h.head(A.rows()) = b;
    G.middleRows(A.rows(), kk) = Eigen::MatrixXd::Identity(kk, kk);
    h.segment(A.rows(), kk).setZero();
    G.bottomRows(kk) = -Eigen::MatrixXd::Identity(kk, kk);
    for (Eigen::Index w = 0; w < kk; ++w) h(A.rows() + kk + w) = -c.winning_bid[static_cast<std::size_t>(w)];
    Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(ref.data(), kk);
    Eigen::VectorXd x = solve_projection_qp(G, h, Eigen::VectorXd::Ones(kk), lp.objective, r, lp.x);

    std::vector<double> p(k);
    for (std::size_t w = 0; w < k; ++w)
        p[w] = std::clamp(x(static_cast<Eigen::Index>(w)), 0.0, c.winning_bid[w]);
    double viol = core_violation(c, p);
    if (viol > 1e-9) {
        std::ostringstream msg;
        msg << "core payments violate a constraint by " << viol;
        throw std::runtime_error(msg.str());
    }
    return p;
}

}  // namespace bne

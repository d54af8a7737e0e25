#include "bne/oracles/brute_force.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bne::oracle {

namespace {

void search(const Domain& d, std::span<const Bid> bids, std::uint32_t coalition, std::size_t j, std::uint32_t used,
            double w, std::vector<int>& cur, Assignment& best) {
    if (j == d.size()) {
        if (w > best.welfare) best = {cur, w};
        return;
    }
    cur[j] = -1;
    search(d, bids, coalition, j + 1, used, w, cur, best);
    if (!(coalition & (1u << j))) return;
    const auto& atoms = d.bidders[j].action_atoms;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (atoms[a].bits() & used) continue;
        cur[j] = static_cast<int>(a);
        search(d, bids, coalition, j + 1, used | atoms[a].bits(), w + bids[j][a], cur, best);
    }
    cur[j] = -1;
}

double coalition_value(const Domain& d, std::span<const Bid> bids, std::uint32_t coalition) {
    return enumerate_assignment(d, bids, coalition).welfare;
}

// Calls f on every subset of {0..m-1} of size k, as a sorted index list.
void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > m) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

bool feasible(const Halfspaces& h, const Eigen::VectorXd& p, double tol) {
    for (std::size_t r = 0; r < h.a.size(); ++r) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < p.size(); ++i) s += h.a[r][static_cast<std::size_t>(i)] * p[i];
        if (s < h.b[r] - tol) return false;
    }
    return true;
}

}  // namespace

Assignment enumerate_assignment(const Domain& d, std::span<const Bid> bids, std::uint32_t coalition) {
    if (bids.size() != d.size()) throw std::invalid_argument("one bid per bidder expected");
    std::vector<int> cur(d.size(), -1);
    Assignment best{cur, -std::numeric_limits<double>::infinity()};
    search(d, bids, coalition, 0, 0, 0.0, cur, best);
    return best;
}

std::vector<double> enumerate_vcg(const Domain& d, std::span<const Bid> bids) {
    const std::uint32_t all = (1u << d.size()) - 1;
    const auto a = enumerate_assignment(d, bids, all);
    std::vector<double> p(d.size(), 0.0);
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (a.atom[j] < 0) continue;
        const double own = bids[j][static_cast<std::size_t>(a.atom[j])];
        p[j] = coalition_value(d, bids, all & ~(1u << j)) - (a.welfare - own);
    }
    return p;
}

CorePolytope enumerate_core(const Domain& d, std::span<const Bid> bids) {
    const std::uint32_t all = (1u << d.size()) - 1;
    const auto a = enumerate_assignment(d, bids, all);
    CorePolytope c;
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (a.atom[j] < 0) continue;
        c.winners.push_back(static_cast<int>(j));
        c.bid.push_back(bids[j][static_cast<std::size_t>(a.atom[j])]);
    }
    const std::size_t k = c.winners.size();
    c.rhs.assign(std::size_t{1} << k, 0.0);
    for (std::uint32_t s = 1; s < (1u << k); ++s) {
        std::uint32_t blocked = 0;
        double rest = 0.0;
        for (std::size_t w = 0; w < k; ++w) {
            if (s & (1u << w))
                blocked |= 1u << c.winners[w];
            else
                rest += c.bid[w];
        }
        c.rhs[s] = coalition_value(d, bids, all & ~blocked) - rest;
    }
    return c;
}

Halfspaces halfspaces(const CorePolytope& c) {
    const std::size_t k = c.winners.size();
    Halfspaces h;
    for (std::uint32_t s = 1; s < (1u << k); ++s) {
        std::vector<double> row(k, 0.0);
        for (std::size_t w = 0; w < k; ++w)
            if (s & (1u << w)) row[w] = 1.0;
        h.a.push_back(row);
        h.b.push_back(c.rhs[s]);
    }
    for (std::size_t w = 0; w < k; ++w) {
        std::vector<double> row(k, 0.0);
        row[w] = 1.0;
        h.a.push_back(row);
        h.b.push_back(0.0);
        row[w] = -1.0;
        h.a.push_back(row);
        h.b.push_back(-c.bid[w]);
    }
    return h;
}

std::vector<std::vector<double>> core_vertices(const CorePolytope& c, double tol) {
    const std::size_t k = c.winners.size();
    if (k == 0) return {{}};
    const Halfspaces h = halfspaces(c);
    std::vector<std::vector<double>> out;
    for_each_subset(h.a.size(), k, [&](const std::vector<std::size_t>& rows) {
        Eigen::MatrixXd m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        Eigen::VectorXd rhs(static_cast<Eigen::Index>(k));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t i = 0; i < k; ++i) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = h.a[rows[r]][i];
            rhs[static_cast<Eigen::Index>(r)] = h.b[rows[r]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        if (lu.rank() < static_cast<Eigen::Index>(k)) return;
        Eigen::VectorXd p = lu.solve(rhs);
        if (feasible(h, p, tol)) out.emplace_back(p.data(), p.data() + p.size());
    });
    return out;
}

double min_core_revenue(const CorePolytope& c) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : core_vertices(c)) best = std::min(best, std::accumulate(v.begin(), v.end(), 0.0));
    if (!std::isfinite(best)) throw std::runtime_error("core polytope has no vertex");
    return best;
}

std::vector<double> project_min_revenue_face(const CorePolytope& c, std::span<const double> r, double tol) {
    const std::size_t k = c.winners.size();
    if (k == 0) return {};
    const double revenue = min_core_revenue(c);
    const Halfspaces h = halfspaces(c);
    Eigen::VectorXd ref(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) ref[static_cast<Eigen::Index>(i)] = r[i];

    Eigen::VectorXd best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t size = 0; size < k; ++size) {
        for_each_subset(h.a.size(), size, [&](const std::vector<std::size_t>& rows) {
            const auto n = static_cast<Eigen::Index>(rows.size() + 1);
            Eigen::MatrixXd m(n, static_cast<Eigen::Index>(k));
            Eigen::VectorXd rhs(n);
            for (std::size_t t = 0; t < rows.size(); ++t) {
                for (std::size_t i = 0; i < k; ++i) m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(i)) = h.a[rows[t]][i];
                rhs[static_cast<Eigen::Index>(t)] = h.b[rows[t]];
            }
            m.row(n - 1).setOnes();
            rhs[n - 1] = revenue;
            Eigen::VectorXd p = ref + m.completeOrthogonalDecomposition().solve(rhs - m * ref);
            if ((m * p - rhs).cwiseAbs().maxCoeff() > tol) return;
            if (std::abs(p.sum() - revenue) > tol || !feasible(h, p, tol)) return;
            const double dist = (p - ref).norm();
            if (dist < best_dist) {
                best_dist = dist;
                best = p;
            }
        });
    }
    if (!std::isfinite(best_dist)) throw std::runtime_error("no feasible point on the minimum-revenue face");
    return {best.data(), best.data() + best.size()};
}

std::vector<std::vector<double>> sample_core(const CorePolytope& c, std::size_t want, std::mt19937_64& rng,
                                             std::size_t max_tries) {
    const Halfspaces h = halfspaces(c);
    const std::size_t k = c.winners.size();
    std::vector<std::vector<double>> out;
    Eigen::VectorXd p(static_cast<Eigen::Index>(k));
    for (std::size_t t = 0; t < max_tries && out.size() < want; ++t) {
        for (std::size_t i = 0; i < k; ++i)
            p[static_cast<Eigen::Index>(i)] = std::uniform_real_distribution<double>(0.0, c.bid[i])(rng);
        if (feasible(h, p, 0.0)) out.emplace_back(p.data(), p.data() + p.size());
    }
    return out;
}

std::vector<double> vcg_nearest(const Domain& d, std::span<const Bid> bids) {
    const auto vcg = enumerate_vcg(d, bids);
    const auto c = enumerate_core(d, bids);
    std::vector<double> ref;
    for (int w : c.winners) ref.push_back(vcg[static_cast<std::size_t>(w)]);
    const auto q = project_min_revenue_face(c, ref);
    std::vector<double> p(d.size(), 0.0);
    for (std::size_t w = 0; w < c.winners.size(); ++w) p[static_cast<std::size_t>(c.winners[w])] = q[w];
    return p;
}

}  // namespace bne::oracle

#include "bne/sampling/estimator.hpp"

#include <algorithm>
#include <stdexcept>

namespace bne {

double UtilityDecomposition::empty_prob() const {
    double s = 0.0;
    for (std::size_t a = 0; a < atoms; ++a) s += win_prob[a];
    return 1.0 - s;
}

double UtilityDecomposition::utility(const BidderSpec& spec, const Valuation& v) const {
    double u = 0.0;
    for (std::size_t a = 0; a < atoms; ++a) u += atom_value(spec, v, static_cast<int>(a)) * win_prob[a];
    return u - expected_payment;
}

namespace {

UtilityEstimate finish(const BidderSpec& spec, const Valuation& own, const OutcomeTally& t, std::size_t n) {
    UtilityEstimate e;
    e.decomposition.atoms = spec.action_dim();
    const double inv = n ? 1.0 / static_cast<double>(n) : 0.0;
    for (std::size_t a = 0; a < spec.action_dim(); ++a) e.decomposition.win_prob[a] = t.win[a] * inv;
    e.decomposition.expected_payment = t.payment * inv;
    e.utility = e.decomposition.utility(spec, own);
    return e;
}

void check_bid(const BidderSpec& spec, const Bid& bid) {
    if (bid.size() != spec.action_dim()) throw std::invalid_argument("bid dimension does not match action atoms");
}

}  // namespace

TallySampleSet::TallySampleSet(const BidderSpec& spec, std::unique_ptr<BidderResponse> response,
                               std::vector<double> weights, std::size_t n, std::shared_ptr<const BidTable> table)
    : spec_(spec), table_(std::move(table)), response_(std::move(response)), weights_(std::move(weights)), n_(n) {}

UtilityEstimate TallySampleSet::evaluate(const Valuation& own, const Bid& bid) const {
    check_bid(spec_, bid);
    OutcomeTally t;
    response_->tally(bid, weights_, t);
    return finish(spec_, own, t, n_);
}

MonteCarloEstimator::MonteCarloEstimator(Domain domain, std::shared_ptr<const ValueSampler> sampler,
                                         std::shared_ptr<const Mechanism> mechanism, StreamKind kind)
    : domain_(std::move(domain)), sampler_(std::move(sampler)), mechanism_(std::move(mechanism)), kind_(kind) {}

std::shared_ptr<const SampleSet> MonteCarloEstimator::sample(const Profile& profile, int bidder,
                                                             const Valuation& own, std::uint64_t key,
                                                             std::size_t n) const {
    const std::size_t N = domain_.size();
    const std::size_t dim = sampler_->dimension(bidder);
    SampleStream stream(kind_, dim, key);
    const std::vector<double> u = stream.generate(n);
    auto table = std::make_shared<BidTable>(n, N);
    std::vector<Valuation> values(N);
    for (std::size_t k = 0; k < n; ++k) {
        sampler_->sample_conditional(bidder, own, {u.data() + k * dim, dim}, values);
        for (std::size_t j = 0; j < N; ++j)
            if (static_cast<int>(j) != bidder) table->at(k, j) = profile.bid(j, values[j]);
    }
    std::shared_ptr<const BidTable> frozen = table;
    return std::make_shared<TallySampleSet>(domain_.bidder(static_cast<std::size_t>(bidder)),
                                            mechanism_->prepare(bidder, frozen), std::vector<double>{}, n, frozen);
}

std::pair<double, double> LlgImportanceSampler::truncation(double own_bid, double partner_bid) {
    const double t = std::min(2.0, own_bid + partner_bid);
    if (!(t > 0.0)) return {0.0, 0.0};
    return {t, t / 2.0};
}

LlgImportanceSampler::Draw LlgImportanceSampler::sample(double own_value, double own_bid,
                                                        const InterpolatedStrategy& partner, double u0,
                                                        double u1) const {
    const double vp = base->partner_value(own_value, u0);
    auto [t, w] = truncation(own_bid, partner.evaluate(Valuation{vp})[0]);
    return {vp, u1 * t, w};
}

namespace {

class LlgImportanceSet : public SampleSet {
public:
    LlgImportanceSet(const BidderSpec& spec, LlgRule rule, std::vector<double> partner_bid, std::vector<double> u)
        : spec_(spec), rule_(rule), partner_bid_(std::move(partner_bid)), u_(std::move(u)) {}

    UtilityEstimate evaluate(const Valuation& own, const Bid& bid) const override {
        check_bid(spec_, bid);
        const double b = bid[0];
        double win = 0.0, pay = 0.0;
        for (std::size_t k = 0; k < u_.size(); ++k) {
            const double s2 = partner_bid_[k];
            const double t = std::min(2.0, b + s2);
            if (!(t > 0.0)) continue;
            const double w = 0.5 * t;
            win += w;
            pay += w * llg_local_payment(rule_, b, s2, u_[k] * t);
        }
        OutcomeTally tally;
        tally.win[0] = win;
        tally.payment = pay;
        return finish(spec_, own, tally, u_.size());
    }
    std::size_t size() const override { return u_.size(); }

private:
    BidderSpec spec_;
    LlgRule rule_;
    std::vector<double> partner_bid_;
    std::vector<double> u_;
};

}  // namespace

LlgImportanceEstimator::LlgImportanceEstimator(Domain domain, std::shared_ptr<const LlgSampler> sampler, LlgRule rule,
                                               StreamKind kind)
    : domain_(std::move(domain)), sampler_(std::move(sampler)), rule_(rule), kind_(kind) {
    if (domain_.bidder(2).role != Role::FixedTruthful)
        throw std::invalid_argument("importance sampling requires a truthful global bidder");
}

std::shared_ptr<const SampleSet> LlgImportanceEstimator::sample(const Profile& profile, int bidder,
                                                                const Valuation& own, std::uint64_t key,
                                                                std::size_t n) const {
    if (bidder != 0 && bidder != 1) throw std::invalid_argument("importance sampling applies to local bidders");
    const std::size_t partner = bidder == 0 ? 1 : 0;
    SampleStream stream(kind_, 2, key);
    const std::vector<double> u = stream.generate(n);
    std::vector<double> partner_bid(n), u1(n);
    for (std::size_t k = 0; k < n; ++k) {
        partner_bid[k] = profile.bid(partner, Valuation{sampler_->partner_value(own[0], u[2 * k])})[0];
        u1[k] = u[2 * k + 1];
    }
    return std::make_shared<LlgImportanceSet>(domain_.bidder(static_cast<std::size_t>(bidder)), rule_,
                                              std::move(partner_bid), std::move(u1));
}

LlgQuadratureEstimator::LlgQuadratureEstimator(Domain domain, std::shared_ptr<const LlgSampler> sampler,
                                               std::shared_ptr<const Mechanism> mechanism, std::size_t grid)
    : domain_(std::move(domain)), sampler_(std::move(sampler)), mechanism_(std::move(mechanism)), grid_(grid) {
    if (grid_ == 0) throw std::invalid_argument("quadrature grid must be positive");
}

std::shared_ptr<const SampleSet> LlgQuadratureEstimator::sample(const Profile& profile, int bidder,
                                                                const Valuation& own, std::uint64_t,
                                                                std::size_t) const {
    const std::size_t g = grid_;
    const double gamma = sampler_->gamma();
    auto mid = [g](std::size_t a) { return (static_cast<double>(a) + 0.5) / static_cast<double>(g); };
    std::vector<std::array<Valuation, 3>> nodes;
    std::vector<double> mass;
    auto push = [&](double v0, double v1, double v2, double w) {
        if (w <= 0.0) return;
        nodes.push_back({Valuation{v0}, Valuation{v1}, Valuation{v2}});
        mass.push_back(w);
    };
    const double gg = static_cast<double>(g);
    if (bidder == 2) {
        for (std::size_t a = 0; a < g; ++a) {
            const double v = sampler_->local_quantile(mid(a));
            push(v, v, 0.0, gamma / gg);
        }
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = 0; b < g; ++b)
                push(sampler_->local_quantile(mid(a)), sampler_->local_quantile(mid(b)), 0.0, (1.0 - gamma) / (gg * gg));
    } else {
        const bool first = bidder == 0;
        for (std::size_t c = 0; c < g; ++c) {
            const double v3 = 2.0 * mid(c);
            push(own[0], own[0], v3, gamma / gg);
        }
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t c = 0; c < g; ++c) {
                const double vp = sampler_->local_quantile(mid(a));
                push(first ? own[0] : vp, first ? vp : own[0], 2.0 * mid(c), (1.0 - gamma) / (gg * gg));
            }
    }
    const std::size_t n = nodes.size();
    auto table = std::make_shared<BidTable>(n, 3);
    std::vector<double> weights(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < 3; ++j)
            if (static_cast<int>(j) != bidder) table->at(k, j) = profile.bid(j, nodes[k][j]);
        weights[k] = mass[k] * static_cast<double>(n);
    }
    std::shared_ptr<const BidTable> frozen = table;
    return std::make_shared<TallySampleSet>(domain_.bidder(static_cast<std::size_t>(bidder)),
                                            mechanism_->prepare(bidder, frozen), std::move(weights), n, frozen);
}

UtilityEstimate estimate_expected_utility(const UtilityEstimator& est, const Profile& profile, int bidder,
                                          const Valuation& own, const Bid& bid, std::uint64_t key, std::size_t n) {
    return est.sample(profile, bidder, own, key, n)->evaluate(own, bid);
}

double common_random_compare(const SampleSet& set, const Valuation& own, const Bid& a, const Bid& b) {
    if (a == b) return 0.0;
    return set.evaluate(own, a).utility - set.evaluate(own, b).utility;
}

}  // namespace bne

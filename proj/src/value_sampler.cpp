#include "bne/sampling/value_sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace bne {

LlgSampler::LlgSampler(double alpha, double gamma) : alpha_(alpha), gamma_(gamma) {
    if (!(alpha > 0.0)) throw std::invalid_argument("LlgSampler: alpha must be positive");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("LlgSampler: gamma must lie in [0, 1]");
}

double LlgSampler::local_quantile(double u) const {
    return alpha_ == 1.0 ? u : std::pow(u, 1.0 / alpha_);
}

double LlgSampler::partner_value(double own, double u) const {
    if (u < gamma_) return own;
    return local_quantile((u - gamma_) / (1.0 - gamma_));
}

std::size_t LlgSampler::dimension(int bidder) const {
    if (bidder < 0 || bidder > 2) throw std::out_of_range("LLG bidder index");
    return 2;
}

void LlgSampler::sample_conditional(int bidder, const Valuation& own, std::span<const double> u,
                                    std::span<Valuation> values) const {
    if (bidder == 2) {
        const double joint[3] = {u[0], u[1], 0.5};  // global value slot is overwritten by the caller
        sample_joint(joint, values);
        return;
    }
    const std::size_t other = bidder == 0 ? 1 : 0;
    values[other] = Valuation{partner_value(own[0], u[0])};
    values[2] = Valuation{2.0 * u[1]};
}

void LlgSampler::sample_joint(std::span<const double> u, std::span<Valuation> values) const {
    double v1, v2;
    if (u[0] < gamma_) {
        v1 = v2 = local_quantile(u[0] / gamma_);
    } else {
        v1 = local_quantile((u[0] - gamma_) / (1.0 - gamma_));
        v2 = local_quantile(u[1]);
    }
    values[0] = Valuation{v1};
    values[1] = Valuation{v2};
    values[2] = Valuation{2.0 * u[2]};
}

BoxUniformSampler::BoxUniformSampler(const Domain& d) {
    for (const auto& b : d.bidders) {
        lo_.push_back(b.value_lo);
        hi_.push_back(b.value_hi);
        total_ += b.value_dim();
    }
}

std::size_t BoxUniformSampler::dimension(int bidder) const {
    return total_ - lo_.at(static_cast<std::size_t>(bidder)).size();
}

void BoxUniformSampler::sample_conditional(int bidder, const Valuation&, std::span<const double> u,
                                           std::span<Valuation> values) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < lo_.size(); ++j) {
        if (static_cast<int>(j) == bidder) continue;
        Valuation v(lo_[j].size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = lo_[j][k] + (hi_[j][k] - lo_[j][k]) * u[c++];
        values[j] = v;
    }
}

void BoxUniformSampler::sample_joint(std::span<const double> u, std::span<Valuation> values) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < lo_.size(); ++j) {
        Valuation v(lo_[j].size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = lo_[j][k] + (hi_[j][k] - lo_[j][k]) * u[c++];
        values[j] = v;
    }
}

}  // namespace bne

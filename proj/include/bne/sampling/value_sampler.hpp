#pragma once

#include <cstddef>
#include <span>

#include "bne/core/domains.hpp"
#include "bne/core/model.hpp"

namespace bne {

// Maps unit-cube points to valuations.
class ValueSampler {
public:
    virtual ~ValueSampler() = default;

    virtual std::size_t bidders() const = 0;
    // Uniform coordinates consumed per conditional draw for `bidder`.
    virtual std::size_t dimension(int bidder) const = 0;
    // Writes the valuations of every bidder except `bidder`, conditional on its value `own`.
    virtual void sample_conditional(int bidder, const Valuation& own, std::span<const double> u,
                                    std::span<Valuation> values) const = 0;
    // True when the conditional law ignores the own value.
    virtual bool independent() const = 0;

    virtual std::size_t joint_dimension() const = 0;
    virtual void sample_joint(std::span<const double> u, std::span<Valuation> values) const = 0;
};

class LlgSampler : public ValueSampler {
public:
    LlgSampler(double alpha, double gamma);

    double alpha() const { return alpha_; }
    double gamma() const { return gamma_; }
    // Inverse of the local value CDF v^alpha.
    double local_quantile(double u) const;
    // Other local's value given one local's value and one uniform (exact mixture).
    double partner_value(double own, double u) const;

    std::size_t bidders() const override { return 3; }
    std::size_t dimension(int bidder) const override;
    void sample_conditional(int bidder, const Valuation& own, std::span<const double> u,
                            std::span<Valuation> values) const override;
    bool independent() const override { return gamma_ == 0.0; }
    std::size_t joint_dimension() const override { return 3; }
    void sample_joint(std::span<const double> u, std::span<Valuation> values) const override;

private:
    double alpha_;
    double gamma_;
};

// Independent uniform values on each bidder's value box.
class BoxUniformSampler : public ValueSampler {
public:
    explicit BoxUniformSampler(const Domain& d);

    std::size_t bidders() const override { return lo_.size(); }
    std::size_t dimension(int bidder) const override;
    void sample_conditional(int bidder, const Valuation& own, std::span<const double> u,
                            std::span<Valuation> values) const override;
    bool independent() const override { return true; }
    std::size_t joint_dimension() const override { return total_; }
    void sample_joint(std::span<const double> u, std::span<Valuation> values) const override;

private:
    std::vector<std::vector<double>> lo_, hi_;
    std::size_t total_ = 0;
};

}  // namespace bne

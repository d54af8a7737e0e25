#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bne/core/model.hpp"

namespace bne {

// Opponent bids for a batch of samples: samples x bidders, row-major.
class BidTable {
public:
    BidTable(std::size_t samples, std::size_t bidders) : samples_(samples), bidders_(bidders), bids_(samples * bidders) {}

    std::size_t samples() const { return samples_; }
    std::size_t bidders() const { return bidders_; }
    Bid& at(std::size_t k, std::size_t j) { return bids_[k * bidders_ + j]; }
    const Bid& at(std::size_t k, std::size_t j) const { return bids_[k * bidders_ + j]; }
    std::span<const Bid> row(std::size_t k) const { return {bids_.data() + k * bidders_, bidders_}; }

private:
    std::size_t samples_;
    std::size_t bidders_;
    std::vector<Bid> bids_;
};

// Weighted sums over a sample batch for one bidder: per-atom win mass and payment mass.
struct OutcomeTally {
    std::array<double, kMaxAtoms> win{};
    double payment = 0.0;
};

// Outcome for one bidder as a function of its own bid, with every opponent bid fixed per sample.
class BidderResponse {
public:
    virtual ~BidderResponse() = default;
    // Adds weight_k * [won atom a] to win[a] and weight_k * payment_k to payment.
    // Empty weights mean unit weights.
    virtual void tally(const Bid& own, std::span<const double> weights, OutcomeTally& out) const = 0;
};

class Mechanism {
public:
    virtual ~Mechanism() = default;
    virtual std::string name() const = 0;
    virtual std::size_t bidders() const = 0;
    virtual Outcome run(std::span<const Bid> bids) const = 0;

    // Default runs the full mechanism per sample; mechanisms may supply faster reductions.
    virtual std::unique_ptr<BidderResponse> prepare(int bidder, std::shared_ptr<const BidTable> others) const;
};

// Generic per-sample evaluation through Mechanism::run.
class FullRunResponse : public BidderResponse {
public:
    FullRunResponse(const Mechanism& m, int bidder, std::shared_ptr<const BidTable> others)
        : mech_(m), bidder_(bidder), others_(std::move(others)) {}
    void tally(const Bid& own, std::span<const double> weights, OutcomeTally& out) const override;

private:
    const Mechanism& mech_;
    int bidder_;
    std::shared_ptr<const BidTable> others_;
};

}  // namespace bne

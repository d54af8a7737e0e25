#include "bne/mechanisms/llllgg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bne/core/domains.hpp"

namespace bne {

std::string to_string(LlllggRule r) {
    return r == LlllggRule::FirstPrice ? "first_price" : "vcg_nearest";
}

LlllggRule llllgg_rule_from_string(const std::string& s) {
    if (s == "first_price") return LlllggRule::FirstPrice;
    if (s == "vcg_nearest") return LlllggRule::VcgNearest;
    throw std::invalid_argument("unknown LLLLGG payment rule '" + s + "'");
}

const LlllggAssignments& LlllggAssignments::instance() {
    static const LlllggAssignments a;
    return a;
}

LlllggAssignments::LlllggAssignments() {
    const Domain d = make_llllgg_domain();
    for (std::uint32_t code = 0; code < 729; ++code) {
        Entry e{};
        e.code = code;
        std::uint32_t c = code, used = 0;
        bool ok = true;
        for (int j = 5; j >= 0; --j) {
            e.digit[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(c % 3);
            c /= 3;
        }
        for (std::size_t j = 0; j < 6 && ok; ++j) {
            if (e.digit[j] == 0) continue;
            Bundle b = d.bidders[j].action_atoms[e.digit[j] - 1u];
            ok = (b.bits() & used) == 0;
            used |= b.bits();
            e.participants = static_cast<std::uint8_t>(e.participants | (1u << j));
        }
        if (ok) entries_.push_back(e);
    }
}

namespace {

using Table = std::array<std::array<double, 3>, 6>;

Table bid_table(std::span<const Bid> bids) {
    if (bids.size() != 6) throw std::invalid_argument("LLLLGG expects six bids");
    Table t{};
    for (std::size_t j = 0; j < 6; ++j) {
        if (bids[j].size() != 2) throw std::invalid_argument("LLLLGG bids have two atoms");
        t[j] = {0.0, bids[j][0], bids[j][1]};
    }
    return t;
}

double welfare(const Table& t, const LlllggAssignments::Entry& e) {
    double w = 0.0;
    for (std::size_t j = 0; j < 6; ++j) w += t[j][e.digit[j]];
    return w;
}

const LlllggAssignments::Entry& best_assignment(const Table& t) {
    const auto& list = LlllggAssignments::instance().entries();
    const LlllggAssignments::Entry* best = &list.front();
    double bw = -std::numeric_limits<double>::infinity();
    for (const auto& e : list) {
        double w = welfare(t, e);
        if (w > bw) {
            bw = w;
            best = &e;
        }
    }
    return *best;
}

}  // namespace

Allocation llllgg_winner_determination(const Domain& d, std::span<const Bid> bids) {
    const auto& e = best_assignment(bid_table(bids));
    Allocation a = Allocation::none(6);
    for (std::size_t j = 0; j < 6; ++j)
        if (e.digit[j]) a.assign(j, e.digit[j] - 1, d.bidders[j].action_atoms[e.digit[j] - 1u]);
    return a;
}

std::array<double, 64> llllgg_coalition_values(std::span<const Bid> bids) {
    const Table t = bid_table(bids);
    std::array<double, 64> W{};
    for (const auto& e : LlllggAssignments::instance().entries())
        W[e.participants] = std::max(W[e.participants], welfare(t, e));
    for (int bit = 0; bit < 6; ++bit)
        for (int m = 0; m < 64; ++m)
            if (m & (1 << bit)) W[static_cast<std::size_t>(m)] = std::max(W[static_cast<std::size_t>(m)], W[static_cast<std::size_t>(m ^ (1 << bit))]);
    return W;
}

std::array<double, 6> llllgg_payments(LlllggRule rule, const Domain& d, std::span<const Bid> bids,
                                      const Allocation& alloc) {
    (void)d;
    std::array<double, 6> p{};
    std::vector<int> ids;
    std::vector<double> wb;
    for (std::size_t j = 0; j < 6; ++j) {
        if (!alloc.wins(j)) continue;
        ids.push_back(static_cast<int>(j));
        wb.push_back(bids[j][static_cast<std::size_t>(alloc.atom[j])]);
    }
    if (rule == LlllggRule::FirstPrice) {
        for (std::size_t w = 0; w < ids.size(); ++w) p[static_cast<std::size_t>(ids[w])] = wb[w];
        return p;
    }
    const auto W = llllgg_coalition_values(bids);
    const auto vcg = vcg_payments(W, 6, ids, wb);
    const auto c = make_core_constraints(W, 6, ids, wb);
    const auto q = nearest_core_payments(c, vcg);
    for (std::size_t w = 0; w < ids.size(); ++w) p[static_cast<std::size_t>(ids[w])] = q[w];
    return p;
}

LlllggMechanism::LlllggMechanism(LlllggRule rule) : rule_(rule), domain_(make_llllgg_domain()) {}

Outcome LlllggMechanism::run(std::span<const Bid> bids) const {
    Outcome o;
    o.allocation = llllgg_winner_determination(domain_, bids);
    auto p = llllgg_payments(rule_, domain_, bids, o.allocation);
    std::copy(p.begin(), p.end(), o.payment.begin());
    return o;
}

namespace {

// First-price outcome of one bidder against fixed opponents: per sample, the best opponent
// welfare (and its assignment code) for each own choice (nothing, atom 1, atom 2).
class LlllggFirstPriceResponse : public BidderResponse {
public:
    LlllggFirstPriceResponse(int bidder, const BidTable& t) : n_(t.samples()), best_(n_ * 3), code_(n_ * 3) {
        const auto i = static_cast<std::size_t>(bidder);
        const auto& list = LlllggAssignments::instance().entries();
        Table tab{};
        for (std::size_t k = 0; k < n_; ++k) {
            for (std::size_t j = 0; j < 6; ++j) tab[j] = j == i ? std::array<double, 3>{0.0, 0.0, 0.0}
                                                                 : std::array<double, 3>{0.0, t.at(k, j)[0], t.at(k, j)[1]};
            double* b = &best_[k * 3];
            std::uint32_t* c = &code_[k * 3];
            b[0] = b[1] = b[2] = -std::numeric_limits<double>::infinity();
            for (const auto& e : list) {
                const double w = welfare(tab, e);
                const std::size_t own = e.digit[i];
                if (w > b[own]) {
                    b[own] = w;
                    c[own] = e.code;
                }
            }
        }
    }

    void tally(const Bid& own, std::span<const double> weights, OutcomeTally& out) const override {
        const double x1 = own[0], x2 = own[1];
        double win1 = 0.0, win2 = 0.0, pay = 0.0;
        for (std::size_t k = 0; k < n_; ++k) {
            const double* b = &best_[k * 3];
            const std::uint32_t* c = &code_[k * 3];
            double t0 = b[0], t1 = x1 + b[1], t2 = x2 + b[2];
            int choice = 0;
            double bt = t0;
            std::uint32_t bc = c[0];
            if (t1 > bt || (t1 == bt && c[1] < bc)) { choice = 1; bt = t1; bc = c[1]; }
            if (t2 > bt || (t2 == bt && c[2] < bc)) { choice = 2; bt = t2; bc = c[2]; }
            if (choice == 0) continue;
            const double w = weights.empty() ? 1.0 : weights[k];
            if (choice == 1) {
                win1 += w;
                pay += w * x1;
            } else {
                win2 += w;
                pay += w * x2;
            }
        }
        out.win[0] += win1;
        out.win[1] += win2;
        out.payment += pay;
    }

private:
    std::size_t n_;
    std::vector<double> best_;
    std::vector<std::uint32_t> code_;
};

}  // namespace

std::unique_ptr<BidderResponse> LlllggMechanism::prepare(int bidder, std::shared_ptr<const BidTable> others) const {
    if (bidder < 0 || bidder > 5) throw std::out_of_range("LLLLGG bidder index");
    if (rule_ == LlllggRule::FirstPrice) return std::make_unique<LlllggFirstPriceResponse>(bidder, *others);
    return Mechanism::prepare(bidder, std::move(others));
}

}  // namespace bne

#include "bne/core/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace bne {

std::string to_string(Role r) {
    switch (r) {
        case Role::FixedTruthful: return "fixed_truthful";
        case Role::SymmetricGroup: return "symmetric_group";
        case Role::Independent: return "independent";
    }
    return "?";
}

Role role_from_string(const std::string& s) {
    if (s == "fixed_truthful") return Role::FixedTruthful;
    if (s == "symmetric_group") return Role::SymmetricGroup;
    if (s == "independent") return Role::Independent;
    throw std::invalid_argument("unknown role '" + s + "'");
}

void BidderSpec::finalize() {
    if (bundles_of_interest.empty() || bundles_of_interest.size() > kMaxAtoms)
        throw std::invalid_argument("bidder " + name + ": bad number of bundles of interest");
    if (action_atoms.empty() || action_atoms.size() > kMaxAtoms)
        throw std::invalid_argument("bidder " + name + ": bad number of action atoms");
    if (value_lo.size() != value_dim() || value_hi.size() != value_dim())
        throw std::invalid_argument("bidder " + name + ": value box does not match bundles");
    for (std::size_t k = 0; k < value_dim(); ++k)
        if (!(value_lo[k] < value_hi[k]) || value_lo[k] < 0.0)
            throw std::invalid_argument("bidder " + name + ": empty or negative value range");
    for (Bundle b : bundles_of_interest)
        if (b.empty()) throw std::invalid_argument("bidder " + name + ": empty bundle of interest");
    if (role == Role::SymmetricGroup && group < 0)
        throw std::invalid_argument("bidder " + name + ": symmetric role needs a group");
    atom_value_index.assign(action_atoms.size(), -1);
    for (std::size_t a = 0; a < action_atoms.size(); ++a)
        for (std::size_t k = 0; k < bundles_of_interest.size(); ++k)
            if (action_atoms[a] == bundles_of_interest[k]) atom_value_index[a] = static_cast<int>(k);
}

double BidderSpec::max_value() const {
    return *std::max_element(value_hi.begin(), value_hi.end());
}

double value_of(const BidderSpec& spec, const Valuation& v, Bundle won) {
    if (won.empty()) return 0.0;
    for (std::size_t k = 0; k < spec.bundles_of_interest.size(); ++k)
        if (spec.bundles_of_interest[k] == won) return v[k];
    return 0.0;
}

double atom_value(const BidderSpec& spec, const Valuation& v, int atom) {
    if (atom < 0) return 0.0;
    int k = spec.atom_value_index[static_cast<std::size_t>(atom)];
    return k < 0 ? 0.0 : v[static_cast<std::size_t>(k)];
}

double utility(const BidderSpec& spec, const Valuation& v, Bundle won, double payment) {
    return value_of(spec, v, won) - payment;
}

std::vector<Bundle> straightforward_atoms(const std::vector<Bundle>& boi, const Valuation& v) {
    if (v.size() != boi.size()) throw std::invalid_argument("straightforward_atoms: size mismatch");
    std::vector<Bundle> atoms;
    for (std::size_t k = 0; k < boi.size(); ++k) {
        if (!(v[k] > 0.0)) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < boi.size(); ++j)
            if (j != k && boi[j].subset_of(boi[k]) && !(boi[j] == boi[k]) && v[j] >= v[k]) dominated = true;
        if (!dominated) atoms.push_back(boi[k]);
    }
    return atoms;
}

Allocation Allocation::none(std::size_t n) {
    if (n > kMaxBidders) throw std::length_error("Allocation: too many bidders");
    Allocation a;
    a.bidders = n;
    a.atom.fill(-1);
    return a;
}

bool Allocation::feasible() const {
    std::uint32_t used = 0;
    for (std::size_t i = 0; i < bidders; ++i) {
        if (bundle[i].bits() & used) return false;
        used |= bundle[i].bits();
    }
    return true;
}

std::vector<int> Domain::update_representatives() const {
    std::vector<int> reps;
    std::vector<int> seen_groups;
    for (const auto& b : bidders) {
        if (b.role == Role::FixedTruthful) continue;
        if (b.role == Role::SymmetricGroup) {
            if (std::find(seen_groups.begin(), seen_groups.end(), b.group) != seen_groups.end()) continue;
            seen_groups.push_back(b.group);
        }
        reps.push_back(b.id);
    }
    return reps;
}

std::vector<int> Domain::members_like(int i) const {
    const auto& b = bidder(static_cast<std::size_t>(i));
    if (b.role != Role::SymmetricGroup) return {i};
    std::vector<int> out;
    for (const auto& o : bidders)
        if (o.role == Role::SymmetricGroup && o.group == b.group) out.push_back(o.id);
    return out;
}

}  // namespace bne

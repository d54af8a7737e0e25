#pragma once

#include "bne/core/model.hpp"

namespace bne {

// Local-local-global: locals want A and B, the global wants AB.
struct LlgParams {
    double alpha = 1.0;  // local value CDF v^alpha on [0, 1]
    double gamma = 0.0;  // probability that both locals share one value
    bool global_strategic = false;
};

Domain make_llg_domain(const LlgParams& p);

// Six bidders on eight goods on a circle, two bundles of interest each.
Domain make_llllgg_domain();

// One strategic bidder against a truthful opponent with value U[0, 1], single good.
Domain make_synthetic_domain();

}  // namespace bne

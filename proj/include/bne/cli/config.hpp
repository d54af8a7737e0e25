#pragma once

#include <map>
#include <string>
#include <vector>

#include "bne/search/search.hpp"
#include "bne/verification/verification.hpp"

namespace bne {

// Every knob of a run. Written out in full as the manifest, which alone reproduces the run.
struct RunConfig {
    std::string domain = "llg";  // llg | llllgg
    std::string rule = "vcg_nearest";
    double alpha = 1.0;
    double gamma = 0.0;
    bool global_strategic = false;
    std::string integrator = "mc_importance";  // mc | mc_importance | quadrature
    std::string rng = "sobol";                 // sobol | pseudo
    std::size_t quadrature_grid = 200;
    SearchConfig search;
    VerificationConfig verification;
};

// Defaults for a domain ("llg" or "llllgg").
RunConfig default_config(const std::string& domain);

// Parses "key = value" lines ('#' starts a comment) into ordered pairs.
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text, const std::string& origin);

// Builds a config: the last "domain" entry selects the defaults, then every entry is applied
// in order. The dampening slope follows 1 / (2 * target) unless set explicitly.
RunConfig build_config(const std::vector<std::pair<std::string, std::string>>& entries);

// Applies one entry; throws std::invalid_argument naming the key on bad input.
void apply_entry(RunConfig& c, const std::string& key, const std::string& value);

// All keys with their values, one "key = value" line each, in a fixed order.
std::string manifest_text(const RunConfig& c);
std::vector<std::string> config_keys();

// Builds the game instance described by the config.
Setting make_setting(const RunConfig& c);

}  // namespace bne

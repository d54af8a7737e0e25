#include "bne/cli/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "bne/core/domains.hpp"
#include "bne/mechanisms/llg.hpp"
#include "bne/mechanisms/llllgg.hpp"

namespace bne {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw std::invalid_argument(key + ": expected a number, got '" + v + "'");
    return x;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
    std::uint64_t x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size())
        throw std::invalid_argument(key + ": expected a nonnegative integer, got '" + v + "'");
    return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::invalid_argument(key + ": expected true or false, got '" + v + "'");
}

std::string one_of(const std::string& key, const std::string& v, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (v == a) return v;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw std::invalid_argument(key + ": expected one of " + list + ", got '" + v + "'");
}

struct Knob {
    const char* key;
    std::function<std::string(const RunConfig&)> get;
    std::function<void(RunConfig&, const std::string&, const std::string&)> set;
};

#define KNOB_DOUBLE(name, field) \
    Knob{name, [](const RunConfig& c) { return fmt_double(c.field); }, \
         [](RunConfig& c, const std::string& k, const std::string& v) { c.field = parse_double(k, v); }}
#define KNOB_SIZE(name, field) \
    Knob{name, [](const RunConfig& c) { return std::to_string(c.field); }, \
         [](RunConfig& c, const std::string& k, const std::string& v) { c.field = parse_unsigned(k, v); }}
#define KNOB_INT(name, field) \
    Knob{name, [](const RunConfig& c) { return std::to_string(c.field); }, \
         [](RunConfig& c, const std::string& k, const std::string& v) { c.field = static_cast<int>(parse_unsigned(k, v)); }}
#define KNOB_BOOL(name, field) \
    Knob{name, [](const RunConfig& c) { return std::string(c.field ? "true" : "false"); }, \
         [](RunConfig& c, const std::string& k, const std::string& v) { c.field = parse_bool(k, v); }}

const std::vector<Knob>& knobs() {
    static const std::vector<Knob> k = {
        Knob{"domain", [](const RunConfig& c) { return c.domain; },
             [](RunConfig& c, const std::string& k, const std::string& v) { c.domain = one_of(k, v, {"llg", "llllgg"}); }},
        Knob{"rule", [](const RunConfig& c) { return c.rule; },
             [](RunConfig& c, const std::string&, const std::string& v) { c.rule = v; }},
        KNOB_DOUBLE("alpha", alpha),
        KNOB_DOUBLE("gamma", gamma),
        KNOB_BOOL("global_strategic", global_strategic),
        Knob{"integrator", [](const RunConfig& c) { return c.integrator; },
             [](RunConfig& c, const std::string& k, const std::string& v) {
                 c.integrator = one_of(k, v, {"mc", "mc_importance", "quadrature"});
             }},
        Knob{"rng", [](const RunConfig& c) { return c.rng; },
             [](RunConfig& c, const std::string& k, const std::string& v) { c.rng = one_of(k, v, {"sobol", "pseudo"}); }},
        KNOB_SIZE("quadrature_grid", quadrature_grid),
        KNOB_DOUBLE("target_epsilon", search.target_epsilon),
        KNOB_DOUBLE("inner_gate", search.inner_gate),
        KNOB_BOOL("adaptive_grid", search.adaptive_grid),
        KNOB_SIZE("inner_points", search.inner_points),
        KNOB_SIZE("initial_points", search.initial_points),
        KNOB_DOUBLE("min_interval_fraction", search.min_interval_fraction),
        KNOB_SIZE("outer_points", search.outer_points),
        KNOB_SIZE("search_samples", search.search_samples),
        KNOB_SIZE("outer_samples", search.outer_samples),
        KNOB_SIZE("search.points_per_dim", search.pattern.points_per_dim),
        KNOB_DOUBLE("search.initial_spacing", search.pattern.initial_spacing),
        KNOB_INT("search.budget", search.pattern.budget),
        Knob{"search.optimizer", [](const RunConfig& c) { return to_string(c.search.optimizer); },
             [](RunConfig& c, const std::string&, const std::string& v) { c.search.optimizer = optimizer_from_string(v); }},
        KNOB_BOOL("dampening.adaptive", search.dampening.adaptive),
        KNOB_DOUBLE("dampening.w_min", search.dampening.w_min),
        KNOB_DOUBLE("dampening.w_max", search.dampening.w_max),
        KNOB_DOUBLE("dampening.c", search.dampening.c),
        KNOB_DOUBLE("dampening.fixed", search.dampening.fixed),
        KNOB_BOOL("crn", search.common_random_numbers),
        KNOB_BOOL("outer_loop", search.outer_loop),
        KNOB_SIZE("seed", search.seed),
        KNOB_SIZE("max_iterations", search.max_iterations),
        KNOB_SIZE("resume_iterations", search.resume_iterations),
        KNOB_SIZE("verification.grid_points", verification.grid_points),
        KNOB_SIZE("verification.samples", verification.samples),
        KNOB_SIZE("verification.points_per_dim", verification.pattern.points_per_dim),
        KNOB_DOUBLE("verification.initial_spacing", verification.pattern.initial_spacing),
        KNOB_INT("verification.budget", verification.pattern.budget),
        Knob{"verification.optimizer", [](const RunConfig& c) { return to_string(c.verification.optimizer); },
             [](RunConfig& c, const std::string&, const std::string& v) {
                 c.verification.optimizer = optimizer_from_string(v);
             }},
        KNOB_SIZE("verification.seed", verification.seed),
        Knob{"verification.streams", [](const RunConfig& c) { return to_string(c.verification.streams); },
             [](RunConfig& c, const std::string&, const std::string& v) {
                 c.verification.streams = stream_policy_from_string(v);
             }},
        Knob{"verification.method", [](const RunConfig& c) { return to_string(c.verification.method); },
             [](RunConfig& c, const std::string&, const std::string& v) {
                 c.verification.method = verification_method_from_string(v);
             }},
        Knob{"workers", [](const RunConfig& c) { return std::to_string(c.search.workers); },
             [](RunConfig& c, const std::string& k, const std::string& v) {
                 c.search.workers = c.verification.workers = std::max<std::size_t>(1, parse_unsigned(k, v));
             }},
    };
    return k;
}

#undef KNOB_DOUBLE
#undef KNOB_SIZE
#undef KNOB_INT
#undef KNOB_BOOL

}  // namespace

RunConfig default_config(const std::string& domain) {
    RunConfig c;
    if (domain == "llg") {
        c.search.dampening.c = 1.0 / (2.0 * c.search.target_epsilon);
        return c;
    }
    if (domain != "llllgg") throw std::invalid_argument("domain: expected llg or llllgg, got '" + domain + "'");
    c.domain = "llllgg";
    c.rule = "first_price";
    c.integrator = "mc";
    c.search.target_epsilon = 0.01;
    c.search.adaptive_grid = false;
    c.search.inner_points = 15;
    c.search.outer_points = 20;
    c.search.search_samples = 20000;
    c.search.outer_samples = 40000;
    c.search.pattern.budget = 8;
    c.search.dampening.c = 1.0 / (2.0 * c.search.target_epsilon);
    c.verification.grid_points = 25;
    c.verification.samples = 40000;
    c.verification.pattern.budget = 12;
    return c;
}

std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text, const std::string& origin) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(origin + ":" + std::to_string(n) + ": expected 'key = value'");
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

void apply_entry(RunConfig& c, const std::string& key, const std::string& value) {
    for (const auto& k : knobs()) {
        if (key == k.key) {
            try {
                k.set(c, key, value);
            } catch (const std::invalid_argument& e) {
                const std::string msg = e.what();
                if (msg.rfind(key, 0) == 0) throw;
                throw std::invalid_argument(key + ": " + msg);
            }
            return;
        }
    }
    throw std::invalid_argument("unknown configuration key '" + key + "'");
}

RunConfig build_config(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::string domain = "llg";
    bool slope_set = false;
    for (const auto& [k, v] : entries) {
        if (k == "domain") domain = v;
        if (k == "dampening.c") slope_set = true;
    }
    RunConfig c = default_config(domain);
    for (const auto& [k, v] : entries) apply_entry(c, k, v);
    if (!slope_set) c.search.dampening.c = 1.0 / (2.0 * c.search.target_epsilon);
    if (c.domain == "llg")
        (void)llg_rule_from_string(c.rule);
    else
        (void)llllgg_rule_from_string(c.rule);
    if (c.integrator == "quadrature" && c.domain != "llg")
        throw std::invalid_argument("integrator: quadrature is available for llg only");
    if (c.search.inner_points < 2 || c.search.outer_points < 2 || c.verification.grid_points < 2)
        throw std::invalid_argument("grids need at least two points per dimension");
    if (!(c.search.target_epsilon > 0.0)) throw std::invalid_argument("target_epsilon must be positive");
    return c;
}

std::string manifest_text(const RunConfig& c) {
    std::string s;
    for (const auto& k : knobs()) s += std::string(k.key) + " = " + k.get(c) + "\n";
    return s;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& k : knobs()) keys.emplace_back(k.key);
    return keys;
}

Setting make_setting(const RunConfig& c) {
    const StreamKind kind = c.rng == "sobol" ? StreamKind::Sobol : StreamKind::Pseudo;
    Setting s;
    if (c.domain == "llg") {
        const LlgRule rule = llg_rule_from_string(c.rule);
        s.domain = make_llg_domain({c.alpha, c.gamma, c.global_strategic});
        auto sampler = std::make_shared<const LlgSampler>(c.alpha, c.gamma);
        s.sampler = sampler;
        s.mechanism = std::make_shared<const LlgMechanism>(rule);
        const bool global_truthful = s.domain.bidders[2].role == Role::FixedTruthful;
        for (const auto& b : s.domain.bidders) {
            std::shared_ptr<const UtilityEstimator> e;
            if (b.role == Role::FixedTruthful) {
            } else if (c.integrator == "quadrature") {
                e = std::make_shared<const LlgQuadratureEstimator>(s.domain, sampler, s.mechanism, c.quadrature_grid);
            } else if (c.integrator == "mc_importance" && global_truthful && b.id != 2) {
                e = std::make_shared<const LlgImportanceEstimator>(s.domain, sampler, rule, kind);
            } else {
                e = std::make_shared<const MonteCarloEstimator>(s.domain, sampler, s.mechanism, kind);
            }
            s.estimators.push_back(e);
        }
    } else {
        s.domain = make_llllgg_domain();
        s.sampler = std::make_shared<const BoxUniformSampler>(s.domain);
        s.mechanism = std::make_shared<const LlllggMechanism>(llllgg_rule_from_string(c.rule));
        if (c.integrator != "mc") throw std::invalid_argument("integrator: llllgg supports mc only");
        for (std::size_t i = 0; i < s.domain.size(); ++i)
            s.estimators.push_back(std::make_shared<const MonteCarloEstimator>(s.domain, s.sampler, s.mechanism, kind));
    }
    for (const auto& b : s.domain.bidders) s.bid_ceiling.push_back(2.0 * b.max_value());
    return s;
}

}  // namespace bne
